#include "singwb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace swb {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!idx_.emplace(names_[i], static_cast<int>(i)).second)
      throw Error(Err::VariableMismatch, "duplicate variable " + names_[i]);
  }
}

int VarTable::index(const std::string& name) const {
  auto it = idx_.find(name);
  return it == idx_.end() ? -1 : it->second;
}

Vars make_vars(std::vector<std::string> names) { return std::make_shared<VarTable>(std::move(names)); }

Vars merge_vars(const Vars& a, const Vars& b) {
  std::vector<std::string> n = a->names();
  for (auto& s : b->names())
    if (a->index(s) < 0) n.push_back(s);
  return make_vars(n);
}

int exp_degree(const Exp& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grevlex_greater(const Exp& a, const Exp& b) {
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

struct GrevlexDesc {
  bool operator()(const Term& x, const Term& y) const { return grevlex_greater(x.e, y.e); }
};

void check_same(const Vars& a, const Vars& b) {
  if (a != b && !(a && b && a->names() == b->names()))
    throw Error(Err::VariableMismatch, "polynomials live in different rings");
}

}  // namespace

MPoly::MPoly(Vars v, const Scalar& c) : vars_(std::move(v)) {
  if (!c.is_zero()) terms_.push_back({Exp(vars_->size(), 0), c});
}

MPoly MPoly::var(const Vars& v, const std::string& name) {
  int i = v->index(name);
  if (i < 0) throw Error(Err::VariableMismatch, "unknown variable " + name);
  Exp e(v->size(), 0);
  e[i] = 1;
  return monomial(v, e);
}

MPoly MPoly::monomial(const Vars& v, Exp e, Scalar c) {
  MPoly p(v);
  if (e.size() != v->size()) throw Error(Err::VariableMismatch, "exponent length");
  if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

MPoly MPoly::from_terms(const Vars& v, std::vector<Term> t) {
  std::unordered_map<Exp, Scalar, ExpHash> acc;
  acc.reserve(t.size());
  for (auto& x : t) {
    if (x.e.size() != v->size()) throw Error(Err::VariableMismatch, "exponent length");
    auto it = acc.find(x.e);
    if (it == acc.end())
      acc.emplace(std::move(x.e), std::move(x.c));
    else
      it->second += x.c;
  }
  MPoly p(v);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({e, c});
  std::sort(p.terms_.begin(), p.terms_.end(), GrevlexDesc{});
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_[0].e) == 0);
}

Scalar MPoly::constant_term() const {
  if (terms_.empty()) return Scalar(0);
  const Term& t = terms_.back();
  return exp_degree(t.e) == 0 ? t.c : Scalar(0);
}

Scalar MPoly::coeff(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, Scalar(0)}, GrevlexDesc{});
  if (it != terms_.end() && it->e == e) return it->c;
  return Scalar(0);
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : exp_degree(terms_.front().e); }

int MPoly::degree_in(const std::string& v) const {
  int i = vars_->index(v);
  if (i < 0) throw Error(Err::VariableMismatch, "unknown variable " + v);
  int d = terms_.empty() ? -1 : 0;
  for (auto& t : terms_) d = std::max<int>(d, t.e[i]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = exp_degree(terms_.front().e);
  for (auto& t : terms_)
    if (exp_degree(t.e) != d) return false;
  return true;
}

bool MPoly::is_weighted_homogeneous(const std::vector<int>& w, int* degree) const {
  if (w.size() != vars_->size()) throw Error(Err::DimensionMismatch, "weight vector length");
  long d0 = 0;
  bool first = true;
  for (auto& t : terms_) {
    long d = 0;
    for (size_t i = 0; i < w.size(); ++i) d += static_cast<long>(w[i]) * t.e[i];
    if (first) {
      d0 = d;
      first = false;
    } else if (d != d0) {
      return false;
    }
  }
  if (degree) *degree = static_cast<int>(d0);
  return true;
}

bool MPoly::is_rational() const {
  for (auto& t : terms_)
    if (!t.c.is_rational()) return false;
  return true;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  if (b.terms_.empty()) return *this;
  if (!vars_) vars_ = b.vars_;
  check_same(vars_, b.vars_);
  if (terms_.empty()) {
    terms_ = b.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < b.terms_.size()) {
    const Exp& ea = terms_[i].e;
    const Exp& eb = b.terms_[j].e;
    if (ea == eb) {
      Scalar c = terms_[i].c + b.terms_[j].c;
      if (!c.is_zero()) out.push_back({ea, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_greater(ea, eb)) {
      out.push_back(std::move(terms_[i++]));
    } else {
      out.push_back(b.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MPoly& MPoly::operator-=(const MPoly& b) { return *this += -b; }

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& t : terms_) t.c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return MPoly(a.vars_ ? a.vars_ : b.vars_);
  check_same(a.vars_, b.vars_);
  size_t n = a.vars_->size();
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const MPoly& m = a.terms_.size() == 1 ? a : b;
    const MPoly& o = a.terms_.size() == 1 ? b : a;
    const Term& t = m.terms_[0];
    MPoly r(a.vars_);
    r.terms_.reserve(o.terms_.size());
    for (auto& u : o.terms_) {
      Exp e(n);
      for (size_t k = 0; k < n; ++k) e[k] = static_cast<uint16_t>(t.e[k] + u.e[k]);
      Scalar c = t.c * u.c;
      if (!c.is_zero()) r.terms_.push_back({std::move(e), std::move(c)});
    }
    return r;  // multiplication by a monomial preserves the order
  }
  std::unordered_map<Exp, Scalar, ExpHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exp e(n);
  for (auto& x : a.terms_) {
    for (auto& y : b.terms_) {
      for (size_t k = 0; k < n; ++k) e[k] = static_cast<uint16_t>(x.e[k] + y.e[k]);
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, x.c * y.c);
      else
        it->second += x.c * y.c;
    }
  }
  MPoly r(a.vars_);
  r.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({ex, c});
  std::sort(r.terms_.begin(), r.terms_.end(), GrevlexDesc{});
  return r;
}

MPoly& MPoly::operator*=(const MPoly& b) {
  *this = *this * b;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(vars_, Scalar(1)), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  check_same(a.vars_, b.vars_);
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

MPoly MPoly::derivative(const std::string& v) const {
  int i = vars_->index(v);
  if (i < 0) throw Error(Err::VariableMismatch, "unknown variable " + v);
  MPoly r(vars_);
  for (auto& t : terms_) {
    if (t.e[i] == 0) continue;
    Term u{t.e, t.c * Scalar(static_cast<long>(t.e[i]))};
    u.e[i] -= 1;
    r.terms_.push_back(std::move(u));
  }
  // lowering one exponent keeps the relative grevlex order within a degree
  std::sort(r.terms_.begin(), r.terms_.end(), GrevlexDesc{});
  return r;
}

namespace {

struct SubstCtx {
  const Vars* target;
  std::vector<int> bound;               // source indices of bound variables
  std::vector<MPoly> images;            // images in target ring
  std::vector<int> carry;               // source index -> target index (or -1)
  std::vector<std::map<int, MPoly>> pw;  // cached powers of images

  const MPoly& power(size_t j, int k) {
    auto it = pw[j].find(k);
    if (it != pw[j].end()) return it->second;
    return pw[j].emplace(k, images[j].pow(k)).first->second;
  }

  MPoly rest(const std::vector<const Term*>& ts) {
    std::vector<Term> out;
    out.reserve(ts.size());
    size_t n = (*target)->size();
    for (auto* t : ts) {
      Exp e(n, 0);
      for (size_t k = 0; k < t->e.size(); ++k) {
        if (t->e[k] == 0 || carry[k] == -2) continue;
        if (carry[k] < 0) throw Error(Err::VariableMismatch, "variable missing from target ring");
        e[carry[k]] = static_cast<uint16_t>(e[carry[k]] + t->e[k]);
      }
      out.push_back({std::move(e), t->c});
    }
    return MPoly::from_terms(*target, std::move(out));
  }

  MPoly run(const std::vector<const Term*>& ts, size_t depth) {
    if (depth == bound.size()) return rest(ts);
    int vi = bound[depth];
    std::map<int, std::vector<const Term*>, std::greater<int>> groups;
    for (auto* t : ts) groups[t->e[vi]].push_back(t);
    MPoly acc(*target);
    int prev = -1;
    for (auto& [k, g] : groups) {
      if (prev >= 0) acc = acc * power(depth, prev - k);
      acc += run(g, depth + 1);
      prev = k;
    }
    if (prev > 0) acc = acc * power(depth, prev);
    return acc;
  }
};

}  // namespace

MPoly MPoly::to_ring(const Vars& target) const {
  if (target == vars_) return *this;
  return substitute({}, target);
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& bindings, Vars target) const {
  if (!target) {
    for (auto& [name, img] : bindings) {
      if (!img.vars_) continue;
      if (!target) {
        target = img.vars_;
      } else if (target != img.vars_ && target->names() != img.vars_->names()) {
        target = nullptr;
        break;
      }
    }
    if (!target) target = vars_;
  }
  if (!vars_) return MPoly(target);
  SubstCtx ctx;
  ctx.target = &target;
  ctx.carry.assign(vars_->size(), -1);
  for (size_t k = 0; k < vars_->size(); ++k) ctx.carry[k] = target->index(vars_->name(k));
  for (auto& [name, img] : bindings) {
    int i = vars_->index(name);
    if (i < 0) throw Error(Err::VariableMismatch, "binding for unknown variable " + name);
    ctx.bound.push_back(i);
    ctx.carry[i] = -2;
    ctx.images.push_back(img.vars_ ? img.to_ring(target) : MPoly(target));
  }
  ctx.pw.resize(ctx.bound.size());
  // Horner order: bound variables sorted by index for determinism
  std::vector<size_t> order(ctx.bound.size());
  for (size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return ctx.bound[a] < ctx.bound[b]; });
  std::vector<int> nb;
  std::vector<MPoly> ni;
  for (auto j : order) {
    nb.push_back(ctx.bound[j]);
    ni.push_back(ctx.images[j]);
  }
  ctx.bound = nb;
  ctx.images = ni;
  std::vector<const Term*> ts;
  ts.reserve(terms_.size());
  for (auto& t : terms_) ts.push_back(&t);
  return ctx.run(ts, 0);
}

MPoly MPoly::substitute_scalars(const std::map<std::string, Scalar>& values) const {
  std::map<std::string, MPoly> b;
  for (auto& [k, v] : values) b.emplace(k, MPoly(vars_, v));
  return substitute(b, vars_);
}

ComplexF MPoly::evaluate(const std::map<std::string, ComplexF>& point) const {
  std::vector<ComplexF> pt(vars_ ? vars_->size() : 0, ComplexF(0, 0));
  std::vector<bool> seen(pt.size(), false);
  for (auto& [k, v] : point) {
    int i = vars_->index(k);
    if (i >= 0) {
      pt[i] = v;
      seen[i] = true;
    }
  }
  for (auto& t : terms_)
    for (size_t k = 0; k < t.e.size(); ++k)
      if (t.e[k] && !seen[k]) throw Error(Err::VariableMismatch, "unbound variable " + vars_->name(k));
  return evaluate(pt);
}

ComplexF MPoly::evaluate(const std::vector<ComplexF>& point) const {
  ComplexF s(0, 0);
  for (auto& t : terms_) {
    ComplexF m = t.c.embed();
    for (size_t k = 0; k < t.e.size(); ++k)
      if (t.e[k]) m *= std::pow(point[k], static_cast<int>(t.e[k]));
    s += m;
  }
  return s;
}

Scalar MPoly::evaluate_exact(const std::vector<Scalar>& point) const {
  if (point.size() != (vars_ ? vars_->size() : 0)) throw Error(Err::DimensionMismatch, "point arity");
  std::vector<std::map<int, Scalar>> cache(point.size());
  auto pw = [&](size_t k, int e) -> const Scalar& {
    auto it = cache[k].find(e);
    if (it != cache[k].end()) return it->second;
    return cache[k].emplace(e, point[k].pow(e)).first->second;
  };
  Scalar s(0);
  for (auto& t : terms_) {
    Scalar m = t.c;
    for (size_t k = 0; k < t.e.size(); ++k)
      if (t.e[k]) m *= pw(k, t.e[k]);
    s += m;
  }
  return s;
}

std::map<Exp, MPoly> MPoly::coefficients_in(const std::vector<std::string>& vs) const {
  std::vector<int> idx;
  for (auto& v : vs) {
    int i = vars_->index(v);
    if (i < 0) throw Error(Err::VariableMismatch, "unknown variable " + v);
    idx.push_back(i);
  }
  std::map<Exp, std::vector<Term>> groups;
  for (auto& t : terms_) {
    Exp key(idx.size());
    Exp rest = t.e;
    for (size_t j = 0; j < idx.size(); ++j) {
      key[j] = t.e[idx[j]];
      rest[idx[j]] = 0;
    }
    groups[key].push_back({rest, t.c});
  }
  std::map<Exp, MPoly> out;
  for (auto& [k, ts] : groups) out.emplace(k, from_terms(vars_, std::move(ts)));
  return out;
}

MPoly MPoly::component(const std::vector<std::string>& vs, int degree) const {
  std::vector<int> idx;
  for (auto& v : vs) idx.push_back(vars_->index(v));
  MPoly r(vars_);
  for (auto& t : terms_) {
    int d = 0;
    for (int i : idx) d += t.e[i];
    if (d == degree) r.terms_.push_back(t);
  }
  return r;
}

std::vector<std::string> MPoly::support_vars() const {
  std::vector<bool> used(vars_ ? vars_->size() : 0, false);
  for (auto& t : terms_)
    for (size_t k = 0; k < t.e.size(); ++k)
      if (t.e[k]) used[k] = true;
  std::vector<std::string> out;
  for (size_t k = 0; k < used.size(); ++k)
    if (used[k]) out.push_back(vars_->name(k));
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    std::string c = t.c.str();
    bool mono = exp_degree(t.e) > 0;
    bool neg = t.c.is_rational() && sgn(t.c.rational()) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (neg) c = (-t.c).str();
    bool paren = !t.c.is_rational();
    if (!mono) {
      os << (paren ? "(" + c + ")" : c);
      continue;
    }
    if (c != "1") os << (paren ? "(" + c + ")" : c) << "*";
    bool fm = true;
    for (size_t k = 0; k < t.e.size(); ++k) {
      if (!t.e[k]) continue;
      if (!fm) os << "*";
      fm = false;
      os << vars_->name(k);
      if (t.e[k] > 1) os << "^" << t.e[k];
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(const Vars& v, const std::string& s, const std::map<std::string, Scalar>& c)
      : v_(v), s_(s), consts_(c) {}

  MPoly parse() {
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Err::Parse, what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MPoly expr() {
    MPoly r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  MPoly term() {
    MPoly r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
        r *= Scalar(1) / d.constant_term();
      } else {
        return r;
      }
    }
  }
  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  MPoly power() {
    MPoly b = atom();
    if (eat('^')) {
      skip();
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(st, pos_ - st))));
    }
    return b;
  }
  MPoly atom() {
    skip();
    if (eat('(')) {
      MPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly(v_, Scalar(Rational(mpz_class(s_.substr(st, pos_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(st, pos_ - st);
      auto it = consts_.find(name);
      if (it != consts_.end()) return MPoly(v_, it->second);
      if (v_->index(name) < 0) fail("unknown name '" + name + "'");
      return MPoly::var(v_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const Vars& v_;
  const std::string& s_;
  const std::map<std::string, Scalar>& consts_;
  size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const Vars& v, const std::string& text, const std::map<std::string, Scalar>& consts) {
  return Parser(v, text, consts).parse();
}

}  // namespace swb
