#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "singwb/poly.hpp"
#include "singwb/report.hpp"
#include "singwb/rootdata.hpp"

namespace swb {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  int eps = 1;  // orientation sign
  int bar = 0;  // index of the reverse arrow
};

struct McKayQuiver {
  DynkinType base_type;
  std::vector<int> dims;  // affine vertex 0 first
  std::vector<Arrow> arrows;
  bool full_support = false;  // A_{2r-1}, D4, E6
  int arrow_index(const std::string& name) const;
};

McKayQuiver build_mckay_quiver(const DynkinType& t);

struct PMat {
  size_t rows = 0, cols = 0;
  std::vector<MPoly> e;  // row major
  const MPoly& at(size_t i, size_t j) const { return e[i * cols + j]; }
  MPoly& at(size_t i, size_t j) { return e[i * cols + j]; }
};
using SymbolicRep = std::vector<PMat>;  // indexed by arrow

// Fresh symbols "<prefix><arrow>_<i><j>" in `ring`, which must contain them.
std::vector<std::string> rep_symbol_names(const McKayQuiver& q, const std::string& prefix);
SymbolicRep symbolic_rep(const McKayQuiver& q, const std::string& prefix, const Vars& ring);

MPoly symplectic_form(const McKayQuiver& q, const SymbolicRep& phi, const SymbolicRep& psi);
std::vector<PMat> moment_map(const McKayQuiver& q, const SymbolicRep& phi);

// new phi_a = coeff[a] * phi_{source[a]}
struct OmegaActionOnM {
  std::string generator;
  Perm vertex_perm;  // vertex i of the image corresponds to vertex perm[i]
  std::vector<int> source;
  std::vector<Scalar> coeff;
  std::map<std::string, Scalar> params;  // lambda1, delta1, alpha3, ...
  std::string folded;                    // B, C, F, G
};

enum class OrientationBehavior { Preserves, Reverses, Mixed };
OrientationBehavior orientation_behavior(const McKayQuiver& q, const OmegaActionOnM& a);

// Reference actions: A_{2r-1} "sigma"; D_{r+1} "sigma"; D4 "rho" (143) and
// "sigma" (34) for the S3 folding; E6 "sigma". Missing params take the
// reference values; `s3` selects the S3 parametrization on D4.
OmegaActionOnM make_action(const McKayQuiver& q, const std::string& generator,
                           const std::map<std::string, Scalar>& params = {}, bool s3 = false);
OmegaActionOnM identity_action(const McKayQuiver& q);

SymbolicRep apply_action(const McKayQuiver& q, const OmegaActionOnM& a, const SymbolicRep& phi);

Report check_action_admissible(const McKayQuiver& q, const OmegaActionOnM& a);
bool verify_symplectic_action(const McKayQuiver& q, const OmegaActionOnM& a);
// Order of the induced map on M(Gamma) (smallest k with a^k = id, 0 if > 12).
int action_order(const McKayQuiver& q, const OmegaActionOnM& a);

// Numeric representations.
struct CMat {
  size_t rows = 0, cols = 0;
  std::vector<ComplexF> e;
  ComplexF& at(size_t i, size_t j) { return e[i * cols + j]; }
  const ComplexF& at(size_t i, size_t j) const { return e[i * cols + j]; }
};
using NumRep = std::vector<CMat>;

std::vector<CMat> moment_map_numeric(const McKayQuiver& q, const NumRep& phi);
NumRep apply_action_numeric(const McKayQuiver& q, const OmegaActionOnM& a, const NumRep& phi);
NumRep random_rep(const McKayQuiver& q, uint64_t seed);

// mu: one complex value per vertex with sum d_i mu_i = 0. A_{2r-1} and D4 only.
NumRep sample_moment_fibre(const McKayQuiver& q, const std::vector<ComplexF>& mu, uint64_t seed);
double moment_residual(const McKayQuiver& q, const NumRep& phi, const std::vector<ComplexF>& mu);

struct Invariants3 {
  ComplexF x, y, z;
};
Invariants3 invariants_at_point(const McKayQuiver& q, const NumRep& phi,
                                const std::vector<ComplexF>& mu);
// Traces used for D4: p_ij = Tr(phi_i^a phi_i^b phi_j^a phi_j^b), q_034.
ComplexF d4_p(const NumRep& phi, const McKayQuiver& q, int i, int j);
ComplexF d4_q034(const NumRep& phi, const McKayQuiver& q);
// Tr(P_{v0} P_{v1} ...) with P_v = phi_v^a phi_v^b.
ComplexF d4_cycle_trace(const NumRep& phi, const McKayQuiver& q, const std::vector<int>& vs);

Report verify_moment_equivariance_numeric(const McKayQuiver& q, const OmegaActionOnM& a,
                                          uint64_t seed, int trials);

}  // namespace swb
