#pragma once

#include <string>
#include <vector>

#include "singwb/linalg.hpp"

namespace swb {

struct DynkinType {
  char family = 'A';
  int rank = 1;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// Accepts "A5", "D4", "E6", "B3", ... ; throws UnsupportedType on invalid input.
DynkinType parse_type(const std::string& s);
void validate_type(const DynkinType& t);

using Vec = std::vector<Scalar>;
using IntMatrix = std::vector<std::vector<int>>;
using Perm = std::vector<int>;  // 0-based vertex permutation

struct RootSystem {
  DynkinType dtype;
  int ambient_dim = 0;
  std::vector<Vec> simple_roots;
  std::vector<std::vector<int>> positive_coeffs;  // in the simple-root basis
  std::vector<Vec> positive_roots;                // ambient coordinates
  IntMatrix cartan;
  int rank() const { return dtype.rank; }
};

// A and D in orthonormal coordinates; E6 in Frame coordinates
// (x1, y1, x2, y2, x3, y3) with the nonstandard vertex labels; E7, E8 in R^8.
RootSystem build_root_system(const DynkinType& t);

Scalar dot(const Vec& a, const Vec& b);
IntMatrix cartan_from_vectors(const std::vector<Vec>& v);
// Identify the type of a connected Cartan matrix (lengths taken from `norms`).
DynkinType identify_type(const std::vector<Vec>& simple);

std::vector<Perm> diagram_automorphisms(const IntMatrix& cartan);
bool is_automorphism(const IntMatrix& cartan, const Perm& p);

struct OmegaGroup {
  std::string name;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
};

// name in {trivial, z2, z3, s3}
OmegaGroup make_omega(const RootSystem& rs, const std::string& name);
OmegaGroup close_group(const RootSystem& rs, const std::vector<Perm>& gens, const std::string& name = "custom");

struct FoldResult {
  DynkinType folded;           // type of the folded Lie algebra column
  DynkinType orbit_sum_type;   // type read from the group-sum vectors
  IntMatrix orbit_sum_cartan;
  IntMatrix folded_cartan;
  std::vector<std::vector<int>> orbits;
};

FoldResult fold(const RootSystem& rs, const OmegaGroup& omega);
DynkinType fold(const DynkinType& t, const std::string& omega);
DynkinType dual_type(const DynkinType& t);

struct WeylGenerators {
  std::vector<Matrix> orthonormal;  // ambient_dim x ambient_dim
  std::vector<Matrix> mu;           // rank x rank, acting on coweight coordinates
};
WeylGenerators weyl_generators(const RootSystem& rs);
Vec mat_apply(const Matrix& M, const Vec& v);

// Positive roots (indices into rs.positive_roots) vanishing on h.
std::vector<size_t> vanishing_roots(const RootSystem& rs, const Vec& h);
// Coefficients of an ambient vector in the simple-root basis (must lie in the span).
Vec simple_coordinates(const RootSystem& rs, const Vec& h);
// Action of a diagram automorphism on the ambient span of the roots.
Vec act_on_cartan(const RootSystem& rs, const Perm& p, const Vec& h);
Vec omega_average(const RootSystem& rs, const OmegaGroup& omega, const Vec& h);
// Basis of the fixed subspace h^Omega.
std::vector<Vec> omega_fixed_basis(const RootSystem& rs, const OmegaGroup& omega);

// Extended-diagram dimension vector, affine vertex first.
std::vector<int> mckay_dimension_vector(const DynkinType& t);

// Fundamental coweights in ambient coordinates (ADE: coweights = weights).
std::vector<Vec> fundamental_coweights(const RootSystem& rs);
// Coweights as rational combinations of simple roots: row j holds Lambda_j.
std::vector<std::vector<Rational>> coweights_in_roots(const RootSystem& rs);

// Paper E6 label (1..6) -> Bourbaki label.
int e6_label_to_bourbaki(int label);

std::string root_label(const std::vector<int>& coeffs);

}  // namespace swb
