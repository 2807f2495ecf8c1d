// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "singwb/suite.hpp"

using namespace swb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Folds a report into the outcome, remembering the first failing check.
void need(Outcome& o, const Report& r) {
  for (const auto& c : r.checks)
    if (c.status != Status::Pass && o.pass) {
      o.pass = false;
      o.detail = c.name + " " + c.witness.dump().substr(0, 200);
    }
  if (r.checks.empty() && o.pass) {
    o.pass = false;
    o.detail = "empty report";
  }
}

void need(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const uint64_t seed = 42;
  std::vector<Criterion> cs = {
      {1, "folding table", 1.0,
       [] {
         Outcome o;
         need(o, fold_table_report());
         return o;
       }},
      {2, "Klein verification A3 A5 D4 D5 E6", 10.0,
       [] {
         Outcome o;
         for (const char* t : {"A3", "A5", "D4", "D5", "E6"}) need(o, klein_report(t));
         return o;
       }},
      {3, "flat-coordinate identities", 600.0,
       [] {
         Outcome o;
         for (const char* t : {"A3", "A5", "D4", "E6"}) need(o, flat_report(t));
         return o;
       }},
      {4, "A-type family identity r = 2, 3", 60.0,
       [] {
         Outcome o;
         need(o, verify_a_identity(2));
         need(o, verify_a_identity(3));
         return o;
       }},
      {5, "D4 coefficients: invariance and flat match", 60.0,
       [] {
         Outcome o;
         auto r = verify_d4_coefficients();
         need(o, r);
         size_t inv = 0, match = 0;
         for (const auto& c : r.checks) {
           inv += c.name.rfind("d4_invariance.", 0) == 0;
           match += c.name.rfind("d4_flat_match.", 0) == 0;
         }
         need(o, inv == 16 && match == 4, "expected 16 invariance and 4 match checks");
         return o;
       }},
      {6, "E6 coefficients under the six Weyl generators", 1200.0,
       [] {
         Outcome o;
         auto r = verify_e6_coefficients(e6_flat_coefficients());
         need(o, r);
         need(o, r.checks.size() == 36, "expected 36 checks");
         return o;
       }},
      {7, "equivariance and normal forms B2 B3 C3 G2 F4", 60.0,
       [] {
         Outcome o;
         for (const char* l : {"B2", "B3", "C3", "G2", "F4"}) need(o, family_report(l));
         return o;
       }},
      {8, "moment-map Monte Carlo A3 A5 D4", 60.0,
       [seed] {
         Outcome o;
         for (const char* t : {"A3", "A5", "D4"}) need(o, quiver_sample_report(t, 100, seed));
         need(o, quiver_action_report("A3", "sigma", false, seed, 100));
         need(o, quiver_action_report("A5", "sigma", false, seed, 100));
         need(o, quiver_action_report("D4", "sigma", true, seed, 100));
         need(o, quiver_action_report("D4", "rho", true, seed, 100));
         return o;
       }},
      {9, "symplecticity and a rejected perturbation", 60.0,
       [] {
         Outcome o;
         need(o, symplectic_report());
         return o;
       }},
      {10, "two-parameter D4 family fibres", 60.0,
       [seed] {
         Outcome o;
         need(o, example_fibres_report(seed));
         return o;
       }},
      {11, "quotient pullbacks", 300.0,
       [seed] {
         Outcome o;
         for (const char* l : {"B2", "B3", "C3", "F4", "G2"}) need(o, verify_quotient_pullback(l, seed));
         auto g = verify_quotient_pullback("G2", seed);
         const Check* tier = g.find("pullback.G2.tier");
         need(o, tier && (tier->witness["tier"] == "fit" || tier->witness["tier"] == "numeric"), "G2 tier");
         return o;
       }},
      {12, "every-fibre-singular certificates B2 C3 G2", 60.0,
       [] {
         Outcome o;
         for (const char* l : {"B2", "C3", "G2"}) need(o, verify_singular_locus(l));
         return o;
       }},
      {13, "quotient special fibres D4 D6 E7 E7", 300.0,
       [] {
         Outcome o;
         for (const char* l : {"B2", "C3", "G2", "F4"}) {
           need(o, verify_quotient_special_fibre(l));
           auto Q = quotient_family(l);
           std::vector<Scalar> origin(Q.quotient_vars.size(), Scalar(0));
           std::string ade = classify_ade(Q.special_fibre(), Q.quotient_vars, origin, Q.target_rank);
           need(o, ade == Q.target_ade, std::string(l) + " classifier gave " + ade);
         }
         return o;
       }},
      {14, "vanishing roots and Omega average in A5", 1.0,
       [] {
         Outcome o;
         need(o, example_roots_report());
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.limit_s) {
      o.pass = false;
      o.detail = "over time limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s  criterion %2d  %-48s %8.3f s (limit %g s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), s, c.limit_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(cs.size()) - failed, cs.size());
  return failed ? 1 : 0;
}
