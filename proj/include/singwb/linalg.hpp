#pragma once

#include <vector>

#include "singwb/exact.hpp"

namespace swb {

using Matrix = std::vector<std::vector<Scalar>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Matrix& M);
size_t rank(Matrix M);
// Basis of {x : M x = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix M);
// Some solution of M x = b, or empty when inconsistent.
std::vector<Scalar> solve(Matrix M, const std::vector<Scalar>& b, bool* ok = nullptr);
Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix identity_matrix(size_t n);

}  // namespace swb
