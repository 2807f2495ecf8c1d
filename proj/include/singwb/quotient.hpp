#pragma once

#include <map>
#include <string>
#include <vector>

#include "singwb/deform.hpp"

namespace swb {

struct QuotientFamily {
  std::string source_label;  // B_r, C3, G2, F4
  Vars ring;                 // quotient variables, then parameters
  std::vector<std::string> quotient_vars;
  std::vector<std::string> params;
  MPoly equation;
  // Quotient variable -> polynomial in the source family's ring.
  std::map<std::string, MPoly> invariant_map;
  bool map_complete = true;
  std::string target_ade;  // D_{r+2}, D6, E7
  int target_rank = 0;

  MPoly special_fibre() const;
};

QuotientFamily quotient_family(const std::string& label);
std::vector<std::string> quotient_labels();  // B2, B3, C3, G2, F4

// Omega-invariance of the generators of the invariant ring.
Report verify_invariant_generators(const std::string& label);
// Quotient equation o invariant map reduces to 0 modulo the source fibre.
// G2 also checks the intermediate presentation and the fitted final form.
Report verify_quotient_pullback(const std::string& label, uint64_t seed = 7);
// Every fibre is singular: B2, C3, G2.
Report verify_singular_locus(const std::string& label);
Report non_semiuniversality_check(const std::string& label);
// Special fibre type through the fibre analyzer.
Report verify_quotient_special_fibre(const std::string& label);

struct DiscriminantComponent {
  std::string name;
  MPoly condition;  // polynomial in t2, t4
  MPoly locus;      // t4 as a polynomial in t2
};
std::vector<DiscriminantComponent> discriminant_B2();
Report verify_discriminant_B2();
// Every fibre over a 5x5 grid is singular at (+-2 sqrt f4, 0, 0).
Report verify_b2_grid();

// G2 affine fit: X = W + b, Y = c Z', Z = d V with k * (**) = eliminated relation.
struct G2Fit {
  bool found = false;
  Scalar k, c, d;
  MPoly b;  // in t2, t6
};
G2Fit fit_g2_final_form();

}  // namespace swb
