#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singwb/klein.hpp"
#include "singwb/poly.hpp"
#include "singwb/report.hpp"
#include "singwb/rootdata.hpp"

namespace swb {

// Images of every ambient and parameter variable under one Omega generator.
struct CoordAction {
  std::string generator;  // "sigma", "rho"
  std::map<std::string, MPoly> images;
};

struct DeformationFamily {
  std::string label;  // A3, B2, D4, C3, G2, E6, F4, ...
  DynkinType source;  // the homogeneous type
  Vars ring;          // ambient variables first, then parameters
  std::vector<std::string> ambient;
  std::vector<std::string> params;
  std::vector<std::string> zeroed;  // parameters removed by the restriction
  std::string parent;               // homogeneous label of a restricted family
  MPoly equation;
  std::vector<CoordAction> omega_action;
  // Words in the generators (applied right to left) with their orders.
  std::vector<std::pair<std::vector<std::string>, int>> relations;
  bool restricted = false;

  const CoordAction& action(const std::string& gen) const;
  MPoly special_fibre() const;  // all parameters set to 0
};

// A_{2r-1}, D4, E6 (full) and B_r, C3, G2, F4 (restricted).
DeformationFamily family(const std::string& label);
std::vector<std::string> family_labels();
// The two-parameter D4 family f = z^2 - x^3 + 3xy^2 + t(x^2 + y^2) - v.
DeformationFamily example_family();

MPoly apply_action(const CoordAction& a, const MPoly& p);
CoordAction compose(const CoordAction& outer, const CoordAction& inner);

// equation o action - equation = 0 for every generator, group relations on
// coordinates, and (restricted families) zeroed parameters = fixed locus.
Report verify_equivariance(const DeformationFamily& f);

struct NormalForm {
  KleinData klein;
  std::map<std::string, MPoly> change;  // X, Y, Z as polynomials in x, y, z
  Scalar scale{1};                      // relation(change) = scale * special fibre
  std::map<std::string, std::string> generator_map;  // family generator -> Klein generator
};

NormalForm special_fibre_normal_form(const DeformationFamily& f);
// Relation and transported action matrices checked against the Klein data.
Report verify_normal_form(const DeformationFamily& f);

// E6 family coefficients in psi2, psi5, psi6, psi8, psi9, psi12.
struct NamedPoly {
  std::string name;
  MPoly poly;
};
std::vector<NamedPoly> e6_flat_coefficients();
// The same coefficients in mu1..mu6 through x = -sum mu_i Lambda_i.
std::vector<NamedPoly> e6_mu_coefficients(const std::vector<NamedPoly>& flat);
Report verify_e6_coefficients(const std::vector<NamedPoly>& flat);

// D4 coefficients (calA, calB, calC, calD) in mu1..mu4.
std::vector<NamedPoly> d4_mu_coefficients();
// Linear forms xi_1..xi_4 in mu1..mu4 from sum xi_i e_i = -sum mu_i Lambda_i.
std::vector<MPoly> d4_xi_from_mu(const Vars& mu_ring);
Report verify_d4_coefficients();

// prod (z - lambda_i) - xy against the family equation at t = psi(lambda).
Report verify_a_identity(int r);

// Quiver samples on the moment fibre satisfy the family equation (A_{2r-1}, D4).
// Random mu per sample unless fixed_mu is given.
Report verify_family_samples(const DynkinType& t, int samples, uint64_t seed,
                             const std::optional<std::vector<ComplexF>>& fixed_mu = std::nullopt);

struct SingularPoint {
  std::vector<ComplexF> coords;
  std::optional<std::vector<Scalar>> exact;
  long tjurina = -1;  // -1: not determined
  std::string ade = "unclassified";
};

struct SingularityReport {
  std::vector<SingularPoint> points;
  long global_tjurina = 0;
  bool smooth = true;
  bool exact = true;
};

json singularity_json(const SingularityReport& r);

// ADE label of an isolated singular point with local Tjurina number tau.
std::string classify_ade(const MPoly& f, const std::vector<std::string>& ambient,
                         const std::vector<Scalar>& point, long tau);

// f must involve only the ambient variables.
SingularityReport analyze_hypersurface(const MPoly& f, const std::vector<std::string>& ambient,
                                       size_t budget = 2000000);
SingularityReport analyze_fibre(const DeformationFamily& f,
                                const std::map<std::string, Scalar>& params,
                                size_t budget = 2000000);
// Float parameters: seeded Newton search, Hessian-based labels.
SingularityReport analyze_fibre_numeric(const DeformationFamily& f,
                                        const std::map<std::string, double>& params,
                                        uint64_t seed = 1);

}  // namespace swb
