#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "singwb/exact.hpp"

namespace swb {

class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }
  size_t size() const { return names_.size(); }
  int index(const std::string& name) const;  // -1 when absent
  const std::string& name(size_t i) const { return names_[i]; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> idx_;
};

using Vars = std::shared_ptr<const VarTable>;
Vars make_vars(std::vector<std::string> names);
// Union of two tables, a's names first.
Vars merge_vars(const Vars& a, const Vars& b);

using Exp = std::vector<uint16_t>;

struct ExpHash {
  size_t operator()(const Exp& e) const noexcept {
    size_t h = 1469598103934665603ull;
    for (auto x : e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct Term {
  Exp e;
  Scalar c;
};

// true when a > b in graded reverse lexicographic order
bool grevlex_greater(const Exp& a, const Exp& b);
int exp_degree(const Exp& e);

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(Vars v) : vars_(std::move(v)) {}
  MPoly(Vars v, const Scalar& c);

  static MPoly var(const Vars& v, const std::string& name);
  static MPoly monomial(const Vars& v, Exp e, Scalar c = Scalar(1));
  // Combines equal exponents and sorts.
  static MPoly from_terms(const Vars& v, std::vector<Term> t);

  const Vars& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coeff(const Exp& e) const;
  int total_degree() const;
  int degree_in(const std::string& v) const;
  bool is_homogeneous() const;
  bool is_weighted_homogeneous(const std::vector<int>& w, int* degree = nullptr) const;
  bool is_rational() const;

  MPoly& operator+=(const MPoly& b);
  MPoly& operator-=(const MPoly& b);
  MPoly& operator*=(const MPoly& b);
  MPoly& operator*=(const Scalar& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend MPoly operator*(const Scalar& s, MPoly a) { return a *= s; }
  friend MPoly operator+(MPoly a, const Scalar& s) { return a += MPoly(a.vars_, s); }
  friend MPoly operator+(const Scalar& s, MPoly a) { return a += MPoly(a.vars_, s); }
  friend MPoly operator-(MPoly a, const Scalar& s) { return a -= MPoly(a.vars_, s); }
  friend MPoly operator-(const Scalar& s, const MPoly& a) { return MPoly(a.vars_, s) - a; }
  MPoly operator-() const;
  MPoly pow(unsigned e) const;
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly derivative(const std::string& v) const;
  // Bindings may live in another ring; the result lives in `target` (default:
  // the common ring of the bindings, else this ring). Unbound variables are
  // carried over by name.
  MPoly substitute(const std::map<std::string, MPoly>& bindings, Vars target = nullptr) const;
  MPoly substitute_scalars(const std::map<std::string, Scalar>& values) const;
  MPoly to_ring(const Vars& target) const;

  ComplexF evaluate(const std::map<std::string, ComplexF>& point) const;
  ComplexF evaluate(const std::vector<ComplexF>& point) const;
  // All variables bound to exact scalars.
  Scalar evaluate_exact(const std::vector<Scalar>& point) const;

  // Coefficients with respect to the listed variables: exponent pattern on
  // those variables -> polynomial in the remaining ones (same ring).
  std::map<Exp, MPoly> coefficients_in(const std::vector<std::string>& vs) const;
  // Homogeneous component of the given total degree in the listed variables.
  MPoly component(const std::vector<std::string>& vs, int degree) const;
  std::vector<std::string> support_vars() const;

  std::string str() const;

 private:
  Vars vars_;
  std::vector<Term> terms_;  // grevlex descending, no zero coefficients
};

// Recursive-descent parser: integers, p/q literals, variables, + - * / ^ and
// parentheses. Names found in `consts` become scalars.
MPoly parse_poly(const Vars& v, const std::string& text,
                 const std::map<std::string, Scalar>& consts = {});

// Small convenience wrapper around a VarTable.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : vars_(make_vars(std::move(names))) {}
  explicit Ring(Vars v) : vars_(std::move(v)) {}
  MPoly operator()(const std::string& name) const { return MPoly::var(vars_, name); }
  MPoly c(const Scalar& s) const { return MPoly(vars_, s); }
  MPoly parse(const std::string& text, const std::map<std::string, Scalar>& consts = {}) const {
    return parse_poly(vars_, text, consts);
  }
  MPoly zero() const { return MPoly(vars_); }
  const Vars& vars() const { return vars_; }

 private:
  Vars vars_;
};

}  // namespace swb
