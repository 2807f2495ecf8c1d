#include <doctest.h>

#include "singwb/groebner.hpp"
#include "singwb/quotient.hpp"

using namespace swb;

namespace {

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.witness.dump());
    CHECK(c.status == Status::Pass);
  }
  CHECK_FALSE(r.checks.empty());
}

}  // namespace

TEST_CASE("B2 quotient equation and coefficients") {
  auto Q = quotient_family("B2");
  Ring R(Q.ring);
  // f2 = t2, f4 = t4 + t2^2/8.
  MPoly expect = R.parse("Z*(X^2 - 4*Z^2) + W^2 - 4*t2*Z^2 - 4*(t4 + t2^2/8)*Z");
  CHECK(Q.equation == expect);
  CHECK(Q.target_ade == "D4");
  CHECK(Q.special_fibre() == R.parse("Z*(X^2 - 4*Z^2) + W^2"));
  CHECK_THROWS_AS(quotient_family("Q7"), Error);
  CHECK_THROWS_AS(quotient_family("E6"), Error);
}

TEST_CASE("C3 quotient stores the published coefficients") {
  auto Q = quotient_family("C3");
  Ring R(Q.ring);
  auto cs = Q.equation.coefficients_in({"X", "Y", "W"});
  CHECK(cs[Exp{4, 0, 0}] == R.parse("t2/32"));
  CHECK(cs[Exp{0, 0, 0}].str().find("13824") != std::string::npos);
  CHECK(cs[Exp{5, 0, 0}] == R.c(Scalar::frac(-1, 64)));
}

TEST_CASE("invariant generators") {
  for (auto l : quotient_labels()) {
    CAPTURE(l);
    require_all_pass(verify_invariant_generators(l));
  }
}

TEST_CASE("pullbacks vanish on the source family") {
  for (auto l : {"B2", "B3", "B4", "C3", "F4"}) {
    CAPTURE(l);
    require_all_pass(verify_quotient_pullback(l));
  }
}

TEST_CASE("pullback detects a wrong coefficient") {
  // Source fibre reduction of a perturbed equation leaves a residual.
  auto Q = quotient_family("B2");
  auto fam = family("B2");
  Ring R(Q.ring);
  MPoly bad = Q.equation + R("Z");
  MPoly pb = bad.substitute(Q.invariant_map, fam.ring);
  CHECK_FALSE(Ideal({fam.equation}).normal_form(pb).is_zero());
}

TEST_CASE("G2 fit recovers the final form") {
  auto fit = fit_g2_final_form();
  REQUIRE(fit.found);
  CHECK(fit.k == Scalar(4));
  CHECK(fit.c == Scalar(1));
  CHECK((fit.d == Scalar::frac(1, 2) || fit.d == Scalar::frac(-1, 2)));
  Ring T(fit.b.vars());
  CHECK(fit.b == T.parse("-3/4*t2^2"));
  auto r = verify_quotient_pullback("G2");
  require_all_pass(r);
  REQUIRE(r.find("pullback.G2.tier"));
  CHECK(r.find("pullback.G2.tier")->witness["tier"] == "fit");
}

TEST_CASE("every fibre singular: certificates") {
  for (auto l : {"B2", "C3", "G2"}) {
    CAPTURE(l);
    require_all_pass(verify_singular_locus(l));
  }
  CHECK_THROWS_AS(verify_singular_locus("F4"), Error);
}

TEST_CASE("B2 discriminant") {
  auto d = discriminant_B2();
  REQUIRE(d.size() == 2);
  Ring T(d[0].locus.vars());
  CHECK(d[0].locus == T.parse("-1/8*t2^2"));
  CHECK(d[1].locus == T.parse("1/8*t2^2"));
  // t2 = t4 = 0 lies on both components.
  for (const auto& c : d) CHECK(c.condition.evaluate_exact({Scalar(0), Scalar(0)}).is_zero());
  require_all_pass(verify_discriminant_B2());
}

TEST_CASE("non-semiuniversality") {
  for (auto l : quotient_labels()) require_all_pass(non_semiuniversality_check(l));
  auto r = non_semiuniversality_check("C3");
  CHECK(r.checks[0].witness["dim"] == 3);
  CHECK(r.checks[0].witness["rank"] == 6);
  CHECK(non_semiuniversality_check("G2").checks[0].witness["dim"] == 2);
}

TEST_CASE("quotient special fibres") {
  for (auto l : {"B2", "C3", "G2", "F4"}) {
    CAPTURE(l);
    require_all_pass(verify_quotient_special_fibre(l));
  }
}

TEST_CASE("B2 grid fibres are singular at +-2 sqrt f4") { require_all_pass(verify_b2_grid()); }
