#include "singwb/linalg.hpp"

namespace swb {

std::vector<size_t> rref(Matrix& M) {
  std::vector<size_t> piv;
  if (M.empty()) return piv;
  size_t rows = M.size(), cols = M[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && M[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    Scalar inv = Scalar(1) / M[r][c];
    for (size_t k = c; k < cols; ++k) M[r][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Scalar f = M[i][c];
      for (size_t k = c; k < cols; ++k)
        if (!M[r][k].is_zero()) M[i][k] -= f * M[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(Matrix M) { return rref(M).size(); }

std::vector<std::vector<Scalar>> nullspace(Matrix M) {
  std::vector<std::vector<Scalar>> out;
  if (M.empty()) return out;
  size_t cols = M[0].size();
  auto piv = rref(M);
  std::vector<int> is_piv(cols, -1);
  for (size_t k = 0; k < piv.size(); ++k) is_piv[piv[k]] = static_cast<int>(k);
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f] >= 0) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -M[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Scalar> solve(Matrix M, const std::vector<Scalar>& b, bool* ok) {
  size_t rows = M.size();
  size_t cols = rows ? M[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) M[i].push_back(b[i]);
  auto piv = rref(M);
  if (ok) *ok = true;
  if (!piv.empty() && piv.back() == cols) {
    if (ok) *ok = false;
    return {};
  }
  std::vector<Scalar> x(cols, Scalar(0));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = M[k][cols];
  return x;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
  size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), l = B.size();
  Matrix C(n, std::vector<Scalar>(m, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < l; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

Matrix identity_matrix(size_t n) {
  Matrix I(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) I[i][i] = Scalar(1);
  return I;
}

}  // namespace swb
