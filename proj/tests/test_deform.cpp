#include <fstream>

#include "doctest.h"
#include "singwb/deform.hpp"
#include "singwb/flat.hpp"

using namespace swb;

namespace {
bool has_failures(const Report& r) {
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) MESSAGE(c.name << " " << c.witness.dump());
  return !r.ok();
}
}  // namespace

TEST_CASE("B2 family coefficients") {
  auto f = family("B2");
  Ring R(f.ring);
  MPoly z = R("z"), t2 = R("t2"), t4 = R("t4");
  MPoly want = z.pow(4) + t2 * z * z + t4 + t2 * t2 * Scalar::frac(1, 8) - R("x") * R("y");
  CHECK(f.equation == want);
  CHECK(f.params == std::vector<std::string>{"t2", "t4"});
  CHECK(f.restricted);
}

TEST_CASE("special fibres of the restricted families") {
  auto c3 = family("C3");
  Ring R(c3.ring);
  MPoly x = R("x"), y = R("y"), z = R("z");
  CHECK(c3.special_fibre() == z * z - x * y * (x + y));
  auto f4 = family("F4");
  Ring S(f4.ring);
  CHECK(f4.special_fibre() == S("x").pow(4) * Scalar::frac(-1, 4) + S("y").pow(3) + S("z").pow(2));
  CHECK(f4.params == std::vector<std::string>{"t2", "t6", "t8", "t12"});
  auto g2 = family("G2");
  CHECK(g2.params == std::vector<std::string>{"t2", "t6"});
  CHECK_THROWS_AS(family("X9"), Error);
  CHECK_THROWS_AS(family("A4"), Error);
}

TEST_CASE("equivariance of every family") {
  for (const auto& l : family_labels()) {
    INFO(l);
    auto f = family(l);
    auto r = verify_equivariance(f);
    CHECK_FALSE(has_failures(r));
    CHECK(r.checks.size() >= 2);
  }
  // C3 sigma as a literal substitution
  auto c3 = family("C3");
  Ring R(c3.ring);
  MPoly x = R("x"), y = R("y"), z = R("z"), t2 = R("t2");
  CoordAction s{"sigma", {{"x", x}, {"y", -x - y + t2 * Scalar::frac(1, 2)}, {"z", -z}}};
  CHECK(apply_action(s, c3.equation) == c3.equation);
  CoordAction id{"id", {}};
  CHECK(apply_action(id, c3.equation) == c3.equation);
}

TEST_CASE("a wrong action leaves a residual") {
  auto f = family("C3");
  Ring R(f.ring);
  f.omega_action[0].images["y"] = -R("x") - R("y");
  auto r = verify_equivariance(f);
  CHECK_FALSE(r.ok());
  CHECK(r.find("equivariance.sigma")->status == Status::Fail);
  CHECK(r.find("equivariance.sigma")->witness.contains("residual"));
}

TEST_CASE("normal forms reproduce the Klein actions") {
  for (const auto& l : {"A3", "B2", "B3", "C3", "D4", "G2", "E6", "F4"}) {
    INFO(l);
    CHECK_FALSE(has_failures(verify_normal_form(family(l))));
  }
  auto g2 = family("G2");
  auto nf = special_fibre_normal_form(g2);
  CHECK(nf.generator_map.at("rho") == "g");
  // rho.X = (Y - X)/2
  const auto& g = nf.klein.omega_action[0];
  CHECK(g.on_xyz[0][0] == Scalar::frac(-1, 2));
  CHECK(g.on_xyz[0][1] == Scalar::frac(1, 2));
}

TEST_CASE("A family identity") {
  CHECK(verify_a_identity(2).ok());
  CHECK(verify_a_identity(3).ok());
}

TEST_CASE("D4 coefficients: invariance and flat match") {
  auto r = verify_d4_coefficients();
  CHECK_FALSE(has_failures(r));
  CHECK(r.checks.size() == 20);
  // coweights, Bourbaki: Lambda_3 = (e1 + e2 + e3 - e4)/2
  Vars mu = make_vars({"mu1", "mu2", "mu3", "mu4"});
  auto xi = d4_xi_from_mu(mu);
  Ring M(mu);
  CHECK(xi[3] == (M("mu3") - M("mu4")) * Scalar::frac(1, 2));
  CHECK(xi[0] == -M("mu1") - M("mu2") - (M("mu3") + M("mu4")) * Scalar::frac(1, 2));
}

TEST_CASE("E6 coefficients against the golden list") {
  std::ifstream in(std::string(SINGWB_GOLDEN_DIR) + "/e6_coeffs.json");
  REQUIRE(in.good());
  json g = json::parse(in);
  Vars psi = make_vars({"psi2", "psi5", "psi6", "psi8", "psi9", "psi12"});
  std::map<std::string, Scalar> consts{{"s6", Scalar::sqrt(6)}};
  auto stored = e6_flat_coefficients();
  REQUIRE(stored.size() == g.size());
  for (const auto& c : stored) {
    INFO(c.name);
    MPoly want = parse_poly(psi, g.at(c.name).get<std::string>(), consts);
    CHECK(c.poly == want);
  }
}

TEST_CASE("Frame coweights") {
  auto cw = fundamental_coweights(build_root_system({'E', 6}));
  Scalar r6 = Scalar::sqrt(6), r2 = Scalar::sqrt(2);
  std::vector<Scalar> l1 = {-r6 / Scalar(6), r2 / Scalar(2), r6 / Scalar(6), -r2 / Scalar(2), 0, 0};
  std::vector<Scalar> l6 = {0, 0, r6 / Scalar(2), Scalar(-3) / r2, 0, 0};
  CHECK(cw[0] == l1);
  CHECK(cw[5] == l6);
}

TEST_CASE("quiver samples satisfy the family equations") {
  for (const auto& t : {"A3", "A5", "D4"}) {
    INFO(t);
    CHECK_FALSE(has_failures(verify_family_samples(parse_type(t), 30, 5)));
  }
}

TEST_CASE("Example fibres") {
  auto f = example_family();
  auto r0 = analyze_fibre(f, {{"v", Scalar(0)}, {"t", Scalar(1)}});
  REQUIRE(r0.points.size() == 1);
  CHECK(r0.points[0].tjurina == 1);
  CHECK(r0.points[0].ade == "A1");
  CHECK(std::abs(r0.points[0].coords[0]) < 1e-12);
  auto r1 = analyze_fibre(f, {{"v", Scalar::frac(4, 27)}, {"t", Scalar(1)}});
  REQUIRE(r1.points.size() == 3);
  CHECK(r1.global_tjurina == 3);
  CHECK(r1.exact);
  // sorted by x: (-1/3, -1/sqrt3), (-1/3, 1/sqrt3), (2/3, 0)
  CHECK(std::abs(r1.points[2].coords[0] - 2.0 / 3) < 1e-12);
  CHECK(std::abs(r1.points[0].coords[1] + 1 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(r1.points[1].coords[1] - 1 / std::sqrt(3.0)) < 1e-12);
  for (const auto& p : r1.points) {
    CHECK(p.tjurina == 1);
    CHECK(p.ade == "A1");
  }
  auto r2 = analyze_fibre(f, {});
  REQUIRE(r2.points.size() == 1);
  CHECK(r2.points[0].tjurina == 4);
  CHECK(r2.points[0].ade == "D4");
  auto smooth = analyze_fibre(f, {{"v", Scalar(1)}, {"t", Scalar(1)}});
  CHECK(smooth.smooth);
  CHECK(smooth.points.empty());
}

TEST_CASE("numeric fibre analysis") {
  auto f = example_family();
  auto r = analyze_fibre_numeric(f, {{"v", 4.0 / 27}, {"t", 1.0}}, 3);
  REQUIRE(r.points.size() == 3);
  CHECK(std::abs(r.points[2].coords[0] - 2.0 / 3) < 1e-8);
  for (const auto& p : r.points) CHECK(p.ade == "A1");
  CHECK(analyze_fibre_numeric(f, {{"v", 1.0}, {"t", 1.0}}, 3).smooth);
}

TEST_CASE("ADE classifier on normal forms") {
  Ring R({"x", "y", "z"});
  MPoly x = R("x"), y = R("y"), z = R("z");
  std::vector<std::string> a = {"x", "y", "z"};
  std::vector<Scalar> o(3, Scalar(0));
  CHECK(classify_ade(x * x + y * y + z.pow(5), a, o, 4) == "A4");
  CHECK(classify_ade(x * x * y + y.pow(4) + z * z, a, o, 5) == "D5");
  CHECK(classify_ade(x.pow(3) + y.pow(4) + z * z, a, o, 6) == "E6");
  CHECK(classify_ade(x.pow(3) + x * y.pow(3) + z * z, a, o, 7) == "E7");
  CHECK(classify_ade(x.pow(3) + y.pow(5) + z * z, a, o, 8) == "E8");
  CHECK(classify_ade(x.pow(4) + y.pow(4) + z.pow(4), a, o, 27) == "unclassified");
  auto b2 = analyze_fibre(family("B2"), {});
  REQUIRE(b2.points.size() == 1);
  CHECK(b2.points[0].ade == "A3");
  auto c3 = analyze_fibre(family("C3"), {});
  CHECK(c3.points[0].ade == "D4");
  CHECK(c3.points[0].tjurina == 4);
}

TEST_CASE("E6 coefficient invariance") {
  auto r = verify_e6_coefficients(e6_flat_coefficients());
  CHECK_FALSE(has_failures(r));
  CHECK(r.checks.size() == 36);
}
