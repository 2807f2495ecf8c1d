#include <chrono>

#include "doctest.h"
#include "singwb/error.hpp"
#include "singwb/flat.hpp"

using namespace swb;

namespace {

std::map<std::string, MPoly> bind_generators(const FlatSystem& fs) {
  std::map<std::string, MPoly> b;
  for (size_t i = 0; i < fs.generators.size(); ++i) b[fs.gen_ring->name(i)] = fs.generators[i];
  return b;
}

MPoly laplacian_xy(const MPoly& f) {
  MPoly out(f.vars());
  for (const auto& v : f.vars()->names()) out += f.derivative(v).derivative(v);
  return out;
}

}  // namespace

TEST_CASE("A flat coordinates") {
  auto fs = flat_coords_A(2);
  Ring G(fs.gen_ring);
  CHECK(fs.get("psi2").in_generators == G("e2"));
  CHECK(fs.get("psi4").in_generators == G.parse("e4 - 1/8*e2^2"));
  CHECK(fs.degrees() == std::vector<int>{2, 3, 4});
  for (int r = 2; r <= 4; ++r) {
    auto f = flat_coords_A(r);
    for (const auto& c : f.coords) {
      int d = 0;
      CHECK(c.in_coords.is_homogeneous());
      CHECK(c.in_coords.total_degree() == c.degree);
      CHECK(c.in_generators.constant_term().is_zero());
      CHECK(c.in_coords.is_weighted_homogeneous(std::vector<int>(2 * r, 1), &d));
    }
  }
  // generator expansion agrees with the coordinate expansion
  auto b = bind_generators(fs);
  for (const auto& c : fs.coords) CHECK(c.in_generators.substitute(b, fs.coord_ring) == c.in_coords);
}

TEST_CASE("epsilon from psi round trip") {
  auto e = epsilon_from_psi(2);
  Ring P(e[0].vars());
  CHECK(e[0] == P("psi2"));
  CHECK(e[2] == P.parse("psi4 + 1/8*psi2^2"));
  for (int r = 2; r <= 3; ++r) {
    auto fs = flat_coords_A(r);
    auto eps = epsilon_from_psi(r);
    std::map<std::string, MPoly> b;
    for (const auto& c : fs.coords) b[c.name] = c.in_generators;
    for (int i = 2; i <= 2 * r; ++i)
      CHECK(eps[i - 2].substitute(b, fs.gen_ring) == MPoly::var(fs.gen_ring, "e" + std::to_string(i)));
  }
}

TEST_CASE("D flat coordinates") {
  auto fs = flat_coords_D(3);
  Ring G(fs.gen_ring);
  CHECK(fs.get("psi2").in_generators == G("x2"));
  CHECK(fs.get("psi4").in_generators == G.parse("x4 - 1/4*x2^2"));
  CHECK(fs.get("psi6").in_generators == G.parse("x6 - 1/6*x2*x4 + 7/216*x2^3"));
  CHECK(fs.get("psi").in_coords.evaluate_exact({1, 1, 1, 1}) == Scalar(1));
  CHECK(fs.degrees() == std::vector<int>{2, 4, 6, 4});
  CHECK(verify_w_invariance(fs, default_w_generators(fs)).ok());
  CHECK(verify_w_invariance(flat_coords_D(4), default_w_generators(flat_coords_D(4))).ok());
  // a single sign change flips psi only
  Matrix flip = identity_matrix(4);
  flip[3][3] = -1;
  auto r = verify_w_invariance(fs, {flip});
  CHECK(r.find("w_invariance.s1.psi")->status == Status::Fail);
  CHECK(r.failures() == 1);
  CHECK(act_linear(flip, fs.get("psi").in_coords) == -fs.get("psi").in_coords);
  Matrix even = identity_matrix(4);
  even[2][2] = even[3][3] = -1;
  CHECK(verify_w_invariance(fs, {even}).ok());
}

TEST_CASE("A invariance and sigma parity") {
  for (int r = 2; r <= 3; ++r) {
    auto fs = flat_coords_A(r);
    CHECK(verify_w_invariance(fs, default_w_generators(fs)).ok());
    size_t n = 2 * r;
    Matrix rev(n, std::vector<Scalar>(n, 0));
    for (size_t i = 0; i < n; ++i) rev[i][n - 1 - i] = -1;
    for (const auto& c : fs.coords) {
      MPoly img = act_linear(rev, c.in_coords);
      CHECK(img == (c.degree % 2 ? -c.in_coords : c.in_coords));
    }
  }
}

TEST_CASE("E6 flat coordinates") {
  auto t0 = std::chrono::steady_clock::now();
  auto fs = flat_coords_E6();
  Ring G(fs.gen_ring);
  CHECK(fs.get("psi2").in_generators == G.parse("p1 + p2 + p3"));
  CHECK(fs.degrees() == std::vector<int>{2, 5, 6, 8, 9, 12});
  for (const auto& c : fs.coords) {
    INFO(c.name);
    CHECK(c.in_coords.is_homogeneous());
    CHECK(c.in_coords.total_degree() == c.degree);
  }
  // the (p, q) form of Delta agrees with the Laplacian in (x, y)
  auto b = bind_generators(fs);
  MPoly B = fs.get("psi5").in_generators;
  MPoly H = e6_theta(B);
  CHECK(e6_delta(H).substitute(b, fs.coord_ring) == laplacian_xy(H.substitute(b, fs.coord_ring)));
  // s_{3,3,3}: x_i -> x_i - 2/3 (x1 + x2 + x3)
  Matrix s333 = identity_matrix(6);
  for (int i : {0, 2, 4})
    for (int j : {0, 2, 4}) s333[i][j] = s333[i][j] - Scalar::frac(2, 3);
  CHECK(verify_w_invariance(fs, {s333}).ok());
  Matrix s300 = identity_matrix(6);
  s300[1][1] = -1;
  CHECK(verify_w_invariance(fs, {s300}).ok());
  MESSAGE("E6 flat build+checks ms: "
          << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
}

TEST_CASE("E6 flat coordinates under all Frame generators") {
  auto t0 = std::chrono::steady_clock::now();
  auto fs = flat_coords_E6();
  auto r = verify_w_invariance(fs, default_w_generators(fs));
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.status == Status::Pass);
  }
  MESSAGE("E6 W-invariance ms: "
          << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
}

TEST_CASE("flat unsupported") {
  CHECK_THROWS_AS(flat_coords(parse_type("A4")), Error);
  CHECK_THROWS_AS(flat_coords(parse_type("E7")), Error);
}
