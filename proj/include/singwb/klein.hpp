#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singwb/linalg.hpp"
#include "singwb/poly.hpp"
#include "singwb/report.hpp"
#include "singwb/rootdata.hpp"

namespace swb {

using Mat2 = Matrix;  // 2x2

struct SU2Group {
  std::string label;  // "C4", "D2", "T", "O", "I"
  std::vector<Mat2> generators;
  std::vector<std::string> generator_names;
  mutable std::optional<std::vector<Mat2>> elements;

  size_t expected_order() const;
};

constexpr size_t kClosureCap = 500;

SU2Group cyclic_group(int n);           // generated by diag(zeta_n, zeta_n^-1)
SU2Group binary_dihedral_group(int n);  // order 4n
SU2Group tetrahedral_group();
SU2Group octahedral_group();
SU2Group icosahedral_group();

// Closure under multiplication. Throws ClosureBudgetExceeded past `cap`.
const std::vector<Mat2>& enumerate_group(const SU2Group& g, size_t cap = kClosureCap);
bool mat_equal(const Matrix& a, const Matrix& b);
bool group_contains(const SU2Group& g, const Mat2& m);

// An invariant is stored as constant * core, core free of radicals.
struct Invariant {
  std::string name;
  Scalar constant{1};
  MPoly core;
  MPoly full() const { return core * constant; }
};

struct OmegaAction {
  std::string generator;
  Mat2 gamma;     // element of Gamma'
  Matrix on_xyz;  // 3x3: row k gives the image of the k-th invariant
};

struct KleinData {
  DynkinType gamma_type;
  std::string omega;  // "z2", "s3", ... ; "" when none applies
  Vars zring;         // z1, z2
  Vars xring;         // X, Y, Z
  Invariant X, Y, Z;
  MPoly relation;
  SU2Group gamma;
  SU2Group gamma_prime;
  std::vector<OmegaAction> omega_action;
  bool valid_gamma_prime = true;
  std::string note;
};

// omega: "" picks the default (s3 for D4, z2 otherwise).
KleinData klein_data(const DynkinType& t, const std::string& omega = "");

// (gamma.P)(z) = P(z gamma), z a row vector.
MPoly act(const Mat2& gamma, const MPoly& p);

Report verify_invariance(const KleinData& kd);
Report verify_omega_action(const KleinData& kd);

}  // namespace swb
