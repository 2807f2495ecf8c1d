#include <random>

#include "doctest.h"
#include "singwb/exact.hpp"

using namespace swb;

namespace {

Scalar random_cyclo(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<Rational> v(euler_phi(n));
  for (auto& x : v) x = Rational(d(rng), 1 + (d(rng) & 7));
  return Scalar(Cyclo(n, v));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Scalar::frac(1, 2) + Scalar::frac(1, 3) == Scalar::frac(5, 6));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(rational_str(Rational(-3, 1)) == "-3");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_poly(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(24) == 8);
}

TEST_CASE("roots of unity") {
  Scalar z3 = Scalar::zeta(3);
  CHECK(z3 * z3 * z3 == Scalar(1));
  CHECK(Scalar::zeta(4) * Scalar::zeta(4) == Scalar(-1));
  CHECK(Scalar::zeta(8).pow(4) == Scalar(-1));
  CHECK(Scalar::zeta(8) * Scalar::zeta(3) == Scalar::zeta(24, 11));
  for (long m : {2L, 3L, 6L, -1L, -2L, -3L, -6L}) CHECK(Scalar::sqrt(m) * Scalar::sqrt(m) == Scalar(m));
  auto e = embed_complex(Scalar::sqrt(2));
  CHECK(e.real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(e.imag()) < 1e-15);
  auto i = embed_complex(Scalar::i());
  CHECK(std::abs(i - ComplexF(0, 1)) < 1e-15);
}

TEST_CASE("radicals") {
  Scalar u = Scalar::radical(3, Cyclo(4));
  CHECK(u * u * u == Scalar(4));
  CHECK(!(u * u).is_cyclo());
  CHECK(std::abs(embed_complex(u) - std::cbrt(4.0)) < 1e-14);
  Scalar inv = Scalar(1) / (u + Scalar(1));
  CHECK(inv * (u + Scalar(1)) == Scalar(1));
  Scalar v = Scalar::radical(3, Cyclo(2));
  CHECK_THROWS_AS(u + v, Error);
  Scalar r = Scalar::sqrt_rational(Rational(4, 27));
  CHECK(r * r == Scalar(Rational(4, 27)));
  Scalar s5 = Scalar::sqrt_rational(Rational(5));
  CHECK(s5 * s5 == Scalar(5));
  CHECK(std::abs(embed_complex(s5) - std::sqrt(5.0)) < 1e-14);
  // principal square root of a cyclotomic c
  Scalar w = Scalar::radical(2, Cyclo::sqrt_int(2));
  CHECK(std::abs(embed_complex(w) - std::pow(2.0, 0.25)) < 1e-14);
}

TEST_CASE("canonical zero and homomorphism") {
  std::mt19937_64 rng(7);
  const int ns[] = {1, 3, 4, 8, 12, 24, 5};
  double worst = 0;
  for (int t = 0; t < 10000; ++t) {
    Scalar a = random_cyclo(rng, ns[t % 7]), b = random_cyclo(rng, ns[(t / 7) % 7]);
    Scalar d = a - a;
    REQUIRE(d.is_zero());
    REQUIRE(d.is_rational());
    if (t % 10 == 0) {
      ComplexF ea = embed_complex(a), eb = embed_complex(b), eab = embed_complex(a * b);
      double rel = std::abs(eab - ea * eb) / std::max(1.0, std::abs(ea) * std::abs(eb));
      worst = std::max(worst, rel);
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("conductor coercion round trip") {
  std::mt19937_64 rng(11);
  for (int n : {3, 4, 8, 12}) {
    for (int m : {2, 3, 5}) {
      Cyclo a = random_cyclo(rng, n).cyclo();
      Cyclo up = a.lift(n * m);
      auto back = up.restrict_to(n);
      REQUIRE(back.has_value());
      CHECK(*back == a);
      CHECK(back->conductor() == a.conductor());
    }
  }
  CHECK(!Cyclo::zeta(8).restrict_to(4).has_value());
}

TEST_CASE("division in cyclotomic fields") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_cyclo(rng, 24), b = random_cyclo(rng, 12);
    if (b.is_zero()) continue;
    CHECK((a / b) * b == a);
  }
}

#include "singwb/serialize.hpp"

TEST_CASE("scalar and polynomial json round trip") {
  CHECK(scalar_to_json(Scalar::frac(-3, 4)) == "-3/4");
  CHECK(scalar_to_json(Scalar(7)) == "7");
  json z = scalar_to_json(Scalar::zeta(4));
  CHECK(z.dump() == R"({"conductor":4,"coords":["0","1"]})");
  for (Scalar s : {Scalar::sqrt(6), Scalar::radical(3, Cyclo(4)) * Scalar::i(), Scalar::frac(5, 7)})
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  Ring R({"x", "y"});
  MPoly p = R.parse("x^2*y - 1/3*y + 2", {});
  json j = poly_to_json(p);
  CHECK(j.dump() == R"({"vars":["x","y"],"terms":[{"c":"1","e":[2,1]},{"c":"-1/3","e":[0,1]},{"c":"2","e":[0,0]}]})");
  MPoly q = poly_from_json(j);
  CHECK(q.str() == p.str());
  CHECK(complex_to_json(ComplexF(1, -2)).dump() == "[1.0,-2.0]");
}
