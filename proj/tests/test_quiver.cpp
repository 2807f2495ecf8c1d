#include <cmath>

#include "doctest.h"
#include "singwb/error.hpp"
#include "singwb/quiver.hpp"

using namespace swb;

namespace {

Vars pair_ring(const McKayQuiver& q) {
  auto n = rep_symbol_names(q, "p");
  auto m = rep_symbol_names(q, "s");
  n.insert(n.end(), m.begin(), m.end());
  return make_vars(n);
}

// lambda_i determined by the central value alone (c_0 = 0 normalization).
std::vector<ComplexF> lambdas_from_mu(const std::vector<ComplexF>& mu) {
  size_t m = mu.size();
  std::vector<ComplexF> c(m);
  for (size_t i = 1; i < m; ++i) c[i] = c[i - 1] - mu[i];
  ComplexF mean = 0;
  for (auto v : c) mean += v;
  mean /= double(m);
  std::vector<ComplexF> lam;
  for (auto v : c) lam.push_back(mean - v);
  return lam;
}

}  // namespace

TEST_CASE("mckay quiver structure") {
  auto a3 = build_mckay_quiver(parse_type("A3"));
  CHECK(a3.dims.size() == 4);
  CHECK(a3.arrows.size() == 8);
  CHECK(a3.dims == std::vector<int>{1, 1, 1, 1});
  CHECK(build_mckay_quiver(parse_type("D4")).dims == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(build_mckay_quiver(parse_type("E6")).dims == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  for (const char* s : {"A1", "A2", "A5", "D4", "D5", "D7", "E6", "E7", "E8"}) {
    INFO(s);
    auto q = build_mckay_quiver(parse_type(s));
    // balanced dimension vector: 2 d_i = sum over neighbours
    std::vector<int> nb(q.dims.size());
    for (const auto& a : q.arrows) {
      nb[a.target] += q.dims[a.source];
      CHECK(a.eps * q.arrows[a.bar].eps == -1);
      CHECK(q.arrows[a.bar].bar == int(&a - &q.arrows[0]));
    }
    for (size_t i = 0; i < nb.size(); ++i) CHECK(nb[i] == 2 * q.dims[i]);
  }
  CHECK_THROWS_AS(build_mckay_quiver(parse_type("B3")), Error);
}

TEST_CASE("symplectic form is antisymmetric") {
  for (const char* s : {"A3", "D4", "E6"}) {
    auto q = build_mckay_quiver(parse_type(s));
    Vars v = pair_ring(q);
    auto phi = symbolic_rep(q, "p", v), psi = symbolic_rep(q, "s", v);
    CHECK(symplectic_form(q, phi, phi).is_zero());
    CHECK((symplectic_form(q, phi, psi) + symplectic_form(q, psi, phi)).is_zero());
  }
}

TEST_CASE("symplectic form on a single arrow") {
  auto q = build_mckay_quiver(parse_type("A3"));
  Vars v = pair_ring(q);
  auto phi = symbolic_rep(q, "p", v), psi = symbolic_rep(q, "s", v);
  for (size_t k = 1; k < phi.size(); ++k) phi[k].e[0] = MPoly(v);
  MPoly f = symplectic_form(q, phi, psi);
  CHECK(f == MPoly::var(v, "pa0_00") * MPoly::var(v, "sb0_00"));
}

TEST_CASE("moment map") {
  auto q = build_mckay_quiver(parse_type("D4"));
  Vars v = pair_ring(q);
  auto phi = symbolic_rep(q, "p", v);
  auto mu = moment_map(q, phi);
  MPoly tr(v);
  for (const auto& m : mu)
    for (size_t i = 0; i < m.rows; ++i) tr += m.at(i, i);
  CHECK(tr.is_zero());
  // centre vertex, entry (0,0): sum of phi_i^a[0] phi_i^b[0]
  MPoly want(v);
  for (int i : {0, 1, 3, 4}) {
    std::string s = std::to_string(i);
    want += MPoly::var(v, "pf" + s + "a_00") * MPoly::var(v, "pf" + s + "b_00");
  }
  CHECK(mu[2].at(0, 0) == want);
  CHECK(mu[0].at(0, 0) == -(MPoly::var(v, "pf0b_00") * MPoly::var(v, "pf0a_00") +
                            MPoly::var(v, "pf0b_01") * MPoly::var(v, "pf0a_10")));
  auto zero = phi;
  for (auto& m : zero)
    for (auto& e : m.e) e = MPoly(v);
  for (const auto& m : moment_map(q, zero))
    for (const auto& e : m.e) CHECK(e.is_zero());
}

TEST_CASE("admissibility of the reference actions") {
  auto a3 = build_mckay_quiver(parse_type("A3"));
  auto sig = make_action(a3, "sigma");
  CHECK(check_action_admissible(a3, sig).ok());
  CHECK(orientation_behavior(a3, sig) == OrientationBehavior::Reverses);
  std::map<std::string, Scalar> ones;
  for (int i = 0; i < 4; ++i) ones["lambda" + std::to_string(i)] = ones["delta" + std::to_string(i)] = 1;
  CHECK_FALSE(check_action_admissible(a3, make_action(a3, "sigma", ones)).ok());

  auto a5 = build_mckay_quiver(parse_type("A5"));
  CHECK(check_action_admissible(a5, make_action(a5, "sigma")).ok());

  auto d4 = build_mckay_quiver(parse_type("D4"));
  CHECK(check_action_admissible(d4, make_action(d4, "rho", {}, true)).ok());
  auto g2sig = make_action(d4, "sigma", {{"alpha3", 1}, {"beta3", -1}, {"alpha4", 1}, {"beta4", -1}}, true);
  CHECK(check_action_admissible(d4, g2sig).ok());
  CHECK(check_action_admissible(d4, make_action(d4, "sigma")).ok());
  auto d5 = build_mckay_quiver(parse_type("D5"));
  CHECK(check_action_admissible(d5, make_action(d5, "sigma")).ok());
  auto e6 = build_mckay_quiver(parse_type("E6"));
  CHECK(check_action_admissible(e6, make_action(e6, "sigma")).ok());
}

TEST_CASE("symplecticity") {
  auto a3 = build_mckay_quiver(parse_type("A3"));
  CHECK(verify_symplectic_action(a3, make_action(a3, "sigma")));
  CHECK(verify_symplectic_action(a3, identity_action(a3)));
  CHECK_FALSE(verify_symplectic_action(a3, make_action(a3, "sigma", {{"lambda0", 1}})));
  auto d4 = build_mckay_quiver(parse_type("D4"));
  CHECK(verify_symplectic_action(d4, make_action(d4, "rho", {}, true)));
  CHECK(verify_symplectic_action(d4, make_action(d4, "sigma", {}, true)));
  CHECK(verify_symplectic_action(d4, make_action(d4, "sigma")));
  // the literal G2 row of the special-fibre table breaks symplecticity
  CHECK_FALSE(verify_symplectic_action(
      d4, make_action(d4, "sigma", {{"alpha3", 1}, {"beta3", -1}, {"alpha4", 1}, {"beta4", -1}}, true)));
  auto e6 = build_mckay_quiver(parse_type("E6"));
  CHECK(verify_symplectic_action(e6, make_action(e6, "sigma")));
  CHECK(action_order(d4, make_action(d4, "rho", {}, true)) == 3);
}

TEST_CASE("A fibre sampling") {
  for (const char* s : {"A3", "A5"}) {
    auto q = build_mckay_quiver(parse_type(s));
    size_t m = q.dims.size();
    std::vector<ComplexF> mu(m);
    for (size_t i = 1; i < m; ++i) mu[i] = ComplexF(0.3 * double(i), -0.1);
    for (size_t i = 1; i < m; ++i) mu[0] -= mu[i];
    auto lam = lambdas_from_mu(mu);
    for (uint64_t k = 0; k < 100; ++k) {
      auto phi = sample_moment_fibre(q, mu, 42 + k);
      CHECK(moment_residual(q, phi, mu) < 1e-10);
      auto inv = invariants_at_point(q, phi, mu);
      ComplexF lhs = 1;
      for (auto l : lam) lhs *= inv.z - l;
      CHECK(std::abs(lhs - inv.x * inv.y) <= 1e-8 * std::max(1.0, std::abs(lhs)));
    }
  }
  auto q = build_mckay_quiver(parse_type("A3"));
  std::vector<ComplexF> zero(4);
  auto phi = sample_moment_fibre(q, zero, 3);
  auto inv = invariants_at_point(q, phi, zero);
  CHECK(std::abs(inv.z - phi[0].e[0] * phi[4].e[0]) < 1e-12);
  auto again = sample_moment_fibre(q, zero, 3);
  CHECK(again[0].e[0] == phi[0].e[0]);
  CHECK_THROWS_AS(sample_moment_fibre(q, {1, 0, 0, 0}, 1), Error);
}

TEST_CASE("D4 fibre sampling and trace identities") {
  auto q = build_mckay_quiver(parse_type("D4"));
  std::vector<ComplexF> mu = {1, 1, -2, 1, 1};
  for (uint64_t k = 0; k < 50; ++k) {
    auto phi = sample_moment_fibre(q, mu, 7 + k);
    CHECK(moment_residual(q, phi, mu) < 1e-10);
    ComplexF lhs = d4_p(phi, q, 0, 1) + d4_p(phi, q, 0, 3) + d4_p(phi, q, 0, 4);
    CHECK(std::abs(lhs + mu[0] * (mu[0] + mu[2])) < 1e-9);
  }
  std::vector<ComplexF> mu2 = {ComplexF(0.3, 0.2), -0.7, ComplexF(0.1, -0.4), 0.9, 0};
  mu2[4] = -(mu2[0] + mu2[1] + 2.0 * mu2[2] + mu2[3]);
  auto phi = sample_moment_fibre(q, mu2, 11);
  CHECK(moment_residual(q, phi, mu2) < 1e-10);
  // q_{iji} = -mu_i p_ij
  for (auto [i, j] : {std::pair{3, 0}, std::pair{0, 4}, std::pair{1, 3}})
    CHECK(std::abs(d4_cycle_trace(phi, q, {i, j, i}) + mu2[i] * d4_p(phi, q, i, j)) < 1e-9);
  CHECK(std::abs(d4_p(phi, q, 0, 3) - d4_p(phi, q, 3, 0)) < 1e-12);
  auto again = sample_moment_fibre(q, mu2, 11);
  CHECK(again[1].e[0] == phi[1].e[0]);
}

TEST_CASE("moment map equivariance") {
  auto a3 = build_mckay_quiver(parse_type("A3"));
  CHECK(verify_moment_equivariance_numeric(a3, make_action(a3, "sigma"), 1, 100).ok());
  auto id = verify_moment_equivariance_numeric(a3, identity_action(a3), 1, 5);
  CHECK(id.checks[0].witness["max_residual"].get<double>() == 0.0);
  auto d4 = build_mckay_quiver(parse_type("D4"));
  CHECK(verify_moment_equivariance_numeric(d4, make_action(d4, "rho", {}, true), 1, 100).ok());
  CHECK(verify_moment_equivariance_numeric(d4, make_action(d4, "sigma", {}, true), 1, 100).ok());
  auto e6 = build_mckay_quiver(parse_type("E6"));
  CHECK(verify_moment_equivariance_numeric(e6, make_action(e6, "sigma"), 1, 20).ok());
}
