#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singwb/error.hpp"

namespace swb {

using Rational = mpq_class;
using ComplexF = std::complex<double>;

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_poly(int n);
int euler_phi(int n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1).
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1) {}
  Cyclo(const Rational& q) : n_(1), c_{q} { c_[0].canonicalize(); }  // NOLINT
  Cyclo(long v) : n_(1), c_{Rational(v)} {}   // NOLINT
  Cyclo(int n, std::vector<Rational> coords);

  static Cyclo zeta(int n, long k = 1);
  static Cyclo sqrt_int(long m);  // m squarefree with primes in {2,3}, or m = -1

  int conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  const Rational& rational() const { return c_[0]; }

  Cyclo lift(int N) const;
  std::optional<Cyclo> restrict_to(int n) const;
  Cyclo conj() const;
  Cyclo inv() const;
  ComplexF embed() const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo operator-() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  int n_;
  std::vector<Rational> c_;
};

// u^k = c.
struct Radical {
  int k;
  Cyclo c;
  bool same(const Radical& o) const { return k == o.k && c == o.c; }
};

// The universal coefficient: rational fast path, otherwise a polynomial in u
// of degree < k with cyclotomic coefficients.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(const Rational& q) : q_(q) { q_.canonicalize(); }  // NOLINT
  Scalar(long v) : q_(v) {}              // NOLINT
  Scalar(int v) : q_(v) {}               // NOLINT
  Scalar(const Cyclo& c);                // NOLINT
  Scalar(std::shared_ptr<const Radical> rel, std::vector<Cyclo> parts);

  static Scalar frac(long p, long q) { return Scalar(Rational(p, q)); }
  static Scalar zeta(int n, long k = 1) { return Scalar(Cyclo::zeta(n, k)); }
  static Scalar i() { return zeta(4); }
  static Scalar sqrt(long m) { return Scalar(Cyclo::sqrt_int(m)); }
  // The generator u of the extension u^k = c (principal root on embedding).
  static Scalar radical(int k, const Cyclo& c);
  // Square root of a rational; stays cyclotomic when possible, else a radical.
  static Scalar sqrt_rational(const Rational& q);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return !ext_; }
  const Rational& rational() const { return q_; }
  bool is_cyclo() const;
  Cyclo cyclo() const;
  std::shared_ptr<const Radical> radical_rel() const;
  std::vector<Cyclo> parts() const;

  Scalar conj_cyclo() const;  // complex conjugation when no radical is present
  ComplexF embed() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(long e) const;
  std::string str() const;

 private:
  struct Ext {
    std::shared_ptr<const Radical> rel;  // null: plain cyclotomic
    std::vector<Cyclo> parts;
  };
  static Scalar from_ext(std::shared_ptr<const Radical> rel, std::vector<Cyclo> parts);
  std::vector<Cyclo> as_parts(int k) const;

  Rational q_;
  std::shared_ptr<const Ext> ext_;
};

ComplexF embed_complex(const Scalar& s);

}  // namespace swb
