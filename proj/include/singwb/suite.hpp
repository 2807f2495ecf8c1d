#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singwb/deform.hpp"
#include "singwb/quotient.hpp"
#include "singwb/report.hpp"

namespace swb {

// Reports grouped the way the CLI exposes them. Every check produced by one
// call carries that call's wall time in runtime_ms.

Report fold_report(const std::string& type, const std::string& omega);
// Five rows of the folding table over small ranks.
Report fold_table_report();

Report klein_report(const std::string& type, const std::string& omega = "");

// Admissibility, symplecticity and numeric moment-map equivariance of one generator.
Report quiver_action_report(const std::string& type, const std::string& generator, bool s3,
                            uint64_t seed, int trials);
// Reference actions are symplectic; a perturbed one is not.
Report symplectic_report();
Report quiver_sample_report(const std::string& type, int samples, uint64_t seed,
                            const std::optional<std::vector<ComplexF>>& mu = std::nullopt);

// A (r = 2, 3): psi4 identity and round trip; D4: published list and W-invariance;
// E6: degrees and Frame invariance.
Report flat_report(const std::string& type);

// Equivariance and special-fibre normal form of one family.
Report family_report(const std::string& label);

// Fibres (0,1), (4/27,1) and the special fibre of the two-parameter D4 family.
Report example_fibres_report(uint64_t seed);
// Vanishing roots of A5 at a folded point and its Omega average.
Report example_roots_report();

// All quotient checks for one label (B_r, C3, G2, F4).
Report quotient_report(const std::string& label, uint64_t seed);

struct SuiteOptions {
  uint64_t seed = 42;
  int samples = 100;
  // Replaces the stored E6 coefficient table in the full suite.
  std::optional<std::vector<NamedPoly>> e6_table;
};

// "smoke": exact checks; "full": adds E6 invariance and the Monte Carlo suites.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});

// E6 coefficients from {"A0": text, ...} with s6 standing for sqrt(6).
std::vector<NamedPoly> e6_coefficients_from_json(const json& j);

}  // namespace swb
