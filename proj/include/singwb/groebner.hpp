#pragma once

#include <mutex>
#include <optional>

#include "singwb/poly.hpp"

namespace swb {

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Weighted };
  Kind kind = Kind::Grevlex;
  std::vector<int> weights;  // Weighted only; ties broken by grevlex

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder weighted(std::vector<int> w) { return {Kind::Weighted, std::move(w)}; }
  bool greater(const Exp& a, const Exp& b) const;
};

constexpr size_t kDefaultBudget = 1000000;

class Ideal {
 public:
  Ideal(std::vector<MPoly> gens, MonomialOrder order = MonomialOrder::grevlex(),
        size_t budget = kDefaultBudget);
  Ideal(const Ideal& o);

  const std::vector<MPoly>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const Vars& vars() const { return vars_; }

  // Reduced, monic Groebner basis, sorted by leading monomial (descending).
  const std::vector<MPoly>& basis() const;
  bool has_basis() const;
  // Leading exponent of a polynomial under this ideal's order.
  Exp leading(const MPoly& p) const;

  MPoly normal_form(const MPoly& p) const;
  bool contains(const MPoly& p) const { return normal_form(p).is_zero(); }
  bool is_unit() const;
  // Standard monomials (empty optional when infinitely many).
  std::optional<std::vector<Exp>> standard_monomials() const;
  std::optional<size_t> quotient_dimension() const;

 private:
  std::vector<MPoly> gens_;
  MonomialOrder order_;
  size_t budget_;
  Vars vars_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::vector<MPoly>> gb_;
};

// Minimal polynomial of variable v in the (zero-dimensional) quotient ring,
// as coefficients c_0..c_k (monic, c_k = 1). Empty when not zero-dimensional.
std::vector<Scalar> minimal_polynomial(const Ideal& I, const std::string& v);

// dim of (f, df) + m^N localized at `point` (translated to the origin),
// stabilized in N. Returns nullopt when the point is not isolated within the cap.
std::optional<size_t> local_tjurina(const MPoly& f, const std::vector<std::string>& ambient,
                                    const std::vector<Scalar>& point, size_t budget = kDefaultBudget,
                                    int max_power = 24);

// Ideal generated by f and its partials in the ambient variables.
Ideal jacobian_ideal(const MPoly& f, const std::vector<std::string>& ambient,
                     size_t budget = kDefaultBudget);

}  // namespace swb
