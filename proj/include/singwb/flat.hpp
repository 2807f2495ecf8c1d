#pragma once

#include <string>
#include <vector>

#include "singwb/linalg.hpp"
#include "singwb/poly.hpp"
#include "singwb/report.hpp"
#include "singwb/rootdata.hpp"

namespace swb {

struct FlatCoord {
  std::string name;  // psi2, psi5, ..., psi (D odd coordinate)
  int degree = 0;
  MPoly in_generators;  // eps_i for A; x_2i and p for D; p_i, q_i for E6
  MPoly in_coords;      // lambda for A; xi for D; Frame (x_i, y_i) for E6
};

struct FlatSystem {
  DynkinType dtype;
  int coxeter_number = 0;
  Vars gen_ring;
  Vars coord_ring;
  std::vector<MPoly> generators;  // generator polynomials in coord_ring, same order as gen_ring
  std::vector<FlatCoord> coords;
  const FlatCoord& get(const std::string& name) const;
  std::vector<int> degrees() const;
};

FlatSystem flat_coords_A(int r);  // A_{2r-1}
FlatSystem flat_coords_D(int r);  // D_{r+1}
FlatSystem flat_coords_E6();
FlatSystem flat_coords(const DynkinType& t);

// eps_i (i = 2..2r) as polynomials in psi2..psi{2r}.
std::vector<MPoly> epsilon_from_psi(int r);

// Pochhammer (a, n) = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, int n);

// E6 operators on polynomials in p1, q1, p2, q2, p3, q3.
MPoly e6_theta(const MPoly& f);
MPoly e6_delta(const MPoly& f);

// Matrices act on the coordinate column: coord_j -> sum_k M[j][k] coord_k.
MPoly act_linear(const Matrix& M, const MPoly& f);
std::vector<Matrix> default_w_generators(const FlatSystem& fs);
Report verify_w_invariance(const FlatSystem& fs, const std::vector<Matrix>& gens);

}  // namespace swb
