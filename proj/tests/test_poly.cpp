#include <random>

#include "doctest.h"
#include "singwb/groebner.hpp"

using namespace swb;

namespace {

MPoly random_poly(std::mt19937_64& rng, const Vars& v, int deg, int nterms) {
  std::uniform_int_distribution<int> e(0, deg), c(-9, 9);
  std::vector<Term> ts;
  for (int k = 0; k < nterms; ++k) {
    Exp ex(v->size());
    int left = deg;
    for (auto& x : ex) {
      x = static_cast<uint16_t>(std::uniform_int_distribution<int>(0, left)(rng));
      left -= x;
    }
    ts.push_back({ex, Scalar(Rational(c(rng), 1 + (e(rng) & 3)))});
  }
  return MPoly::from_terms(v, ts);
}

std::vector<std::string> as_strings(const std::vector<MPoly>& b) {
  std::vector<std::string> s;
  for (auto& p : b) s.push_back(p.str());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("substitute and derivative") {
  Ring R({"z", "x", "y", "y'"});
  CHECK(R("z").pow(2).substitute({{"z", -R("z")}}) == R("z").pow(2));
  CHECK((R("x") + R("y")).substitute({{"x", R("y'")}, {"y", R("y'")}}) == 2 * R("y'"));
  CHECK(R("z").pow(2).derivative("z") == 2 * R("z"));
  CHECK(R.c(Scalar(5)).derivative("x").is_zero());
  CHECK_THROWS_AS(R("z").substitute({{"w", R("x")}}), Error);
  CHECK_THROWS_AS(R("z").derivative("w"), Error);

  Ring K({"X", "Y", "Z"});
  Ring Z({"z1", "z2"});
  MPoly rel = K.parse("X^4 - Y*Z");
  MPoly img = rel.substitute({{"X", Z("z1") * Z("z2")}, {"Y", Z("z1").pow(4)}, {"Z", Z("z2").pow(4)}});
  CHECK(img.is_zero());
  CHECK(img.vars() == Z.vars());
}

TEST_CASE("parser") {
  Ring R({"x", "y", "t2"});
  MPoly p = R.parse("1/2*x^2 - (x+y)*(x-y) + t2/4");
  CHECK(p == Scalar::frac(1, 2) * R("x").pow(2) - R("x").pow(2) + R("y").pow(2) + Scalar::frac(1, 4) * R("t2"));
  CHECK(R.parse("i*x", {{"i", Scalar::i()}}).terms()[0].c == Scalar::i());
  CHECK_THROWS_AS(R.parse("x/y"), Error);
  CHECK_THROWS_AS(R.parse("q+1"), Error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(1);
  Vars v = make_vars({"a", "b", "c"});
  for (int t = 0; t < 30; ++t) {
    MPoly p = random_poly(rng, v, 3, 5), q = random_poly(rng, v, 3, 5), r = random_poly(rng, v, 2, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("numeric evaluation commutes with substitution") {
  std::mt19937_64 rng(2);
  Vars v = make_vars({"a", "b", "c"});
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 20; ++t) {
    MPoly p = random_poly(rng, v, 4, 6);
    std::map<std::string, MPoly> m{{"a", random_poly(rng, v, 2, 3)}, {"b", random_poly(rng, v, 2, 3)}};
    std::vector<ComplexF> pt{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    ComplexF lhs = p.substitute(m).evaluate(pt);
    std::vector<ComplexF> pt2{m["a"].evaluate(pt), m["b"].evaluate(pt), pt[2]};
    ComplexF rhs = p.evaluate(pt2);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
  Ring R({"x", "y", "z"});
  CHECK(std::abs(R.parse("x+y").evaluate({{"x", 1.0}, {"y", 2.0}}) - 3.0) < 1e-15);
  MPoly f = R.parse("z^2 - x^3 + 3*x*y^2 + x^2 + y^2 - 4/27");
  CHECK(std::abs(f.evaluate({{"x", 2.0 / 3}, {"y", 0.0}, {"z", 0.0}})) < 1e-12);
  CHECK(std::abs(R.zero().evaluate(std::vector<ComplexF>{1.0, 2.0, 3.0})) == 0.0);
}

TEST_CASE("groebner basics") {
  Ring R({"x", "y", "z"});
  Ideal I({R("x"), R("y")});
  CHECK(as_strings(I.basis()) == std::vector<std::string>{"x", "y"});
  Ideal U({R.c(Scalar(1))});
  CHECK(U.is_unit());
  CHECK(U.quotient_dimension() == 0u);
  CHECK(Ideal({R("x"), R("y"), R("z")}).quotient_dimension() == 1u);
  CHECK(!Ideal({R("x"), R("y")}).quotient_dimension().has_value());
  Ring S({"x"});
  CHECK(Ideal({S("x").pow(2)}).quotient_dimension() == 2u);
}

TEST_CASE("jacobian quotient dimensions") {
  Ring R({"x", "y", "z"});
  MPoly d4 = R.parse("z^2 - x^3 + 3*x*y^2");
  CHECK(jacobian_ideal(d4, {"x", "y", "z"}).quotient_dimension() == 4u);
  MPoly ex0 = R.parse("z^2 - x^3 + 3*x*y^2 + x^2 + y^2");
  CHECK(jacobian_ideal(ex0, {"x", "y", "z"}).quotient_dimension() == 1u);
  MPoly e6 = R.parse("x^4 + y^3 + z^2");
  CHECK(jacobian_ideal(e6, {"x", "y", "z"}).quotient_dimension() == 6u);
  MPoly e7 = R.parse("x^3*y + y^3 + z^2");
  CHECK(jacobian_ideal(e7, {"x", "y", "z"}).quotient_dimension() == 7u);
}

TEST_CASE("normal forms") {
  std::mt19937_64 rng(5);
  Ring R({"z", "q", "w"});
  MPoly f = R.parse("z^2 - q");
  Ideal I({f}, MonomialOrder::lex());
  CHECK(I.normal_form(R("z").pow(4)) == R("q").pow(2));
  for (int t = 0; t < 10; ++t) {
    MPoly g = random_poly(rng, R.vars(), 3, 4);
    CHECK(I.normal_form(g * f).is_zero());
    MPoly h = random_poly(rng, R.vars(), 4, 6);
    CHECK(I.normal_form(I.normal_form(h)) == I.normal_form(h));
  }
  Ring C({"Xs", "t2", "t4", "t6"});
  MPoly cubic = C.parse("108*Xs^3 - 108*Xs^2*t2 + (108*t4 + 27*t2^2)*Xs - t2^3 - 18*t2*t4 - 108*t6");
  Ideal K({cubic}, MonomialOrder::lex());
  CHECK(K.normal_form(cubic * C.parse("Xs^2 + t2*t6 - 3")).is_zero());
}

TEST_CASE("groebner bases do not depend on generator order") {
  std::mt19937_64 rng(9);
  Vars v = make_vars({"a", "b", "c"});
  for (int t = 0; t < 20; ++t) {
    std::vector<MPoly> g;
    int n = 2 + t % 3;
    for (int k = 0; k < n; ++k) g.push_back(random_poly(rng, v, 1 + (k + t) % 3, 3));
    std::vector<MPoly> h(g.rbegin(), g.rend());
    Ideal A(g), B(h);
    CHECK(as_strings(A.basis()) == as_strings(B.basis()));
    for (auto& p : g) CHECK(A.contains(p));
  }
}

TEST_CASE("budget") {
  Ring R({"x", "y", "z"});
  Ideal I({R.parse("x^5 + y^4 + z^3 - 1"), R.parse("x^3 + y^3 + z^2 - 1"), R.parse("x*y*z - 2")},
          MonomialOrder::grevlex(), 10);
  CHECK_THROWS_AS(I.basis(), Error);
}

TEST_CASE("minimal polynomial and local tjurina") {
  Ring R({"x", "y", "z"});
  MPoly f = R.parse("z^2 - x^3 + 3*x*y^2 + x^2 + y^2 - 4/27");
  Ideal J = jacobian_ideal(f, {"x", "y", "z"});
  CHECK(J.quotient_dimension() == 3u);
  auto mp = minimal_polynomial(J, "x");
  // (x - 2/3)(x + 1/3)
  REQUIRE(mp.size() == 3);
  CHECK(mp[0] == Scalar::frac(-2, 9));
  CHECK(mp[1] == Scalar::frac(-1, 3));
  MPoly d4 = R.parse("z^2 - x^3 + 3*x*y^2");
  CHECK(local_tjurina(d4, {"x", "y", "z"}, {0, 0, 0}) == 4u);
  CHECK(local_tjurina(f, {"x", "y", "z"}, {Scalar::frac(2, 3), 0, 0}) == 1u);
  CHECK(local_tjurina(f, {"x", "y", "z"}, {1, 1, 1}) == 0u);
}
