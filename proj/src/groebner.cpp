#include "singwb/groebner.hpp"

#include <algorithm>
#include <functional>

#include "singwb/linalg.hpp"

namespace swb {

bool MonomialOrder::greater(const Exp& a, const Exp& b) const {
  switch (kind) {
    case Kind::Lex:
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    case Kind::Weighted: {
      long wa = 0, wb = 0;
      for (size_t i = 0; i < a.size(); ++i) {
        wa += static_cast<long>(weights[i]) * a[i];
        wb += static_cast<long>(weights[i]) * b[i];
      }
      if (wa != wb) return wa > wb;
      return grevlex_greater(a, b);
    }
    case Kind::Grevlex:
    default:
      return grevlex_greater(a, b);
  }
}

namespace {

using GPoly = std::vector<Term>;

bool divides(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp lcm_exp(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

class Engine {
 public:
  Engine(const MonomialOrder& o, size_t budget) : ord_(o), budget_(budget) {}

  GPoly from(const MPoly& p) const {
    GPoly g = p.terms();
    std::sort(g.begin(), g.end(), [&](const Term& x, const Term& y) { return ord_.greater(x.e, y.e); });
    return g;
  }

  void make_monic(GPoly& g) const {
    if (g.empty() || g[0].c.is_one()) return;
    Scalar inv = Scalar(1) / g[0].c;
    for (auto& t : g) t.c *= inv;
  }

  // p - c * x^m * g, with both sorted by the order.
  GPoly sub_mul(const GPoly& p, const Scalar& c, const Exp& m, const GPoly& g) const {
    GPoly out;
    out.reserve(p.size() + g.size());
    size_t i = 0, j = 0;
    size_t n = m.size();
    Exp e(n);
    auto shifted = [&](size_t k) {
      for (size_t v = 0; v < n; ++v) e[v] = static_cast<uint16_t>(g[k].e[v] + m[v]);
    };
    bool have = false;
    while (i < p.size() || j < g.size()) {
      if (j < g.size() && !have) {
        shifted(j);
        have = true;
      }
      if (j >= g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      if (i >= p.size() || ord_.greater(e, p[i].e)) {
        out.push_back({e, -(c * g[j].c)});
        ++j;
        have = false;
        continue;
      }
      if (p[i].e == e) {
        Scalar s = p[i].c - c * g[j].c;
        if (!s.is_zero()) out.push_back({e, std::move(s)});
        ++i;
        ++j;
        have = false;
        continue;
      }
      out.push_back(p[i++]);
    }
    return out;
  }

  void tick() {
    if (++steps_ > budget_)
      throw Error(Err::BudgetExceeded, "reduction budget of " + std::to_string(budget_) + " steps exhausted");
  }

  // Full reduction of p modulo the polynomials in `basis` selected by `active`.
  GPoly reduce(GPoly p, const std::vector<GPoly>& polys, const std::vector<int>& active, bool full = true) {
    GPoly rem;
    size_t n = p.empty() ? 0 : p[0].e.size();
    Exp m(n);
    while (!p.empty()) {
      const Term& lt = p[0];
      int hit = -1;
      for (int k : active) {
        if (divides(polys[k][0].e, lt.e)) {
          hit = k;
          break;
        }
      }
      if (hit < 0) {
        if (!full) {
          rem.insert(rem.end(), p.begin(), p.end());
          break;
        }
        rem.push_back(lt);
        p.erase(p.begin());
        continue;
      }
      tick();
      const GPoly& g = polys[hit];
      for (size_t v = 0; v < n; ++v) m[v] = static_cast<uint16_t>(lt.e[v] - g[0].e[v]);
      Scalar c = lt.c / g[0].c;
      p = sub_mul(p, c, m, g);
    }
    return rem;
  }

  std::vector<GPoly> buchberger(const std::vector<MPoly>& gens) {
    std::vector<GPoly> polys;
    std::vector<int> G;
    struct Pair {
      int i, j;
      Exp lcm;
    };
    std::vector<Pair> B;

    auto update = [&](int h) {
      const Exp& lh = polys[h][0].e;
      std::vector<Pair> C, D;
      for (int g : G) C.push_back({h, g, lcm_exp(lh, polys[g][0].e)});
      while (!C.empty()) {
        Pair p = C.front();
        C.erase(C.begin());
        bool keep = coprime(lh, polys[p.j][0].e);
        if (!keep) {
          keep = true;
          for (auto& q : C)
            if (divides(q.lcm, p.lcm)) keep = false;
          for (auto& q : D)
            if (keep && divides(q.lcm, p.lcm)) keep = false;
        }
        if (keep) D.push_back(p);
      }
      std::vector<Pair> E;
      for (auto& p : D)
        if (!coprime(lh, polys[p.j][0].e)) E.push_back(p);
      std::vector<Pair> B2;
      for (auto& p : B) {
        bool drop = divides(lh, p.lcm) && lcm_exp(polys[p.i][0].e, lh) != p.lcm &&
                    lcm_exp(polys[p.j][0].e, lh) != p.lcm;
        if (!drop) B2.push_back(p);
      }
      for (auto& p : E) B2.push_back(p);
      B = std::move(B2);
      std::vector<int> G2;
      for (int g : G)
        if (!divides(lh, polys[g][0].e)) G2.push_back(g);
      G2.push_back(h);
      G = std::move(G2);
    };

    auto add = [&](GPoly p) -> bool {
      make_monic(p);
      polys.push_back(std::move(p));
      int h = static_cast<int>(polys.size()) - 1;
      if (exp_degree(polys[h][0].e) == 0) return true;  // unit ideal
      update(h);
      return false;
    };

    // Feed generators in increasing leading monomial order for stability.
    std::vector<GPoly> start;
    for (auto& g : gens)
      if (!g.is_zero()) start.push_back(from(g));
    std::sort(start.begin(), start.end(), [&](const GPoly& a, const GPoly& b) { return ord_.greater(b[0].e, a[0].e); });
    for (auto& g : start) {
      GPoly r = reduce(g, polys, G);
      if (r.empty()) continue;
      if (add(std::move(r))) return unit(polys.back());
    }
    while (!B.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < B.size(); ++k) {
        if (ord_.greater(B[best].lcm, B[k].lcm)) best = k;
      }
      Pair p = B[best];
      B.erase(B.begin() + static_cast<long>(best));
      const GPoly& f = polys[p.i];
      const GPoly& g = polys[p.j];
      size_t n = p.lcm.size();
      Exp mf(n), mg(n);
      for (size_t v = 0; v < n; ++v) {
        mf[v] = static_cast<uint16_t>(p.lcm[v] - f[0].e[v]);
        mg[v] = static_cast<uint16_t>(p.lcm[v] - g[0].e[v]);
      }
      tick();
      GPoly s = sub_mul(GPoly{}, Scalar(-1), mf, f);
      s = sub_mul(s, Scalar(1), mg, g);
      GPoly r = reduce(std::move(s), polys, G);
      if (r.empty()) continue;
      if (add(std::move(r))) return unit(polys.back());
    }
    // interreduce
    std::vector<GPoly> out;
    for (size_t a = 0; a < G.size(); ++a) {
      std::vector<int> others;
      for (size_t b = 0; b < G.size(); ++b)
        if (b != a) others.push_back(G[b]);
      GPoly r = reduce(polys[G[a]], polys, others);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) { return ord_.greater(a[0].e, b[0].e); });
    return out;
  }

 private:
  std::vector<GPoly> unit(const GPoly& one) {
    GPoly u{{Exp(one[0].e.size(), 0), Scalar(1)}};
    return {u};
  }

  const MonomialOrder& ord_;
  size_t budget_;
  size_t steps_ = 0;
};

}  // namespace

Ideal::Ideal(std::vector<MPoly> gens, MonomialOrder order, size_t budget)
    : gens_(std::move(gens)), order_(std::move(order)), budget_(budget) {
  for (auto& g : gens_) {
    if (!g.vars()) continue;
    if (!vars_) vars_ = g.vars();
    else if (vars_ != g.vars() && vars_->names() != g.vars()->names())
      throw Error(Err::VariableMismatch, "ideal generators in different rings");
  }
  if (!vars_) throw Error(Err::VariableMismatch, "ideal without a ring");
  for (auto& g : gens_)
    if (!g.vars()) g = MPoly(vars_);
  if (order_.kind == MonomialOrder::Kind::Weighted && order_.weights.size() != vars_->size())
    throw Error(Err::DimensionMismatch, "weight vector length");
}

Ideal::Ideal(const Ideal& o) : gens_(o.gens_), order_(o.order_), budget_(o.budget_), vars_(o.vars_) {
  std::lock_guard<std::mutex> lk(o.mu_);
  gb_ = o.gb_;
}

const std::vector<MPoly>& Ideal::basis() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (gb_) return *gb_;
  Engine eng(order_, budget_);
  auto raw = eng.buchberger(gens_);
  auto out = std::make_shared<std::vector<MPoly>>();
  for (auto& g : raw) out->push_back(MPoly::from_terms(vars_, g));
  gb_ = out;
  return *gb_;
}

bool Ideal::has_basis() const {
  std::lock_guard<std::mutex> lk(mu_);
  return static_cast<bool>(gb_);
}

Exp Ideal::leading(const MPoly& p) const {
  if (p.is_zero()) throw Error(Err::DivisionByZero, "leading term of zero");
  const Exp* best = &p.terms()[0].e;
  for (auto& t : p.terms())
    if (order_.greater(t.e, *best)) best = &t.e;
  return *best;
}

MPoly Ideal::normal_form(const MPoly& p) const {
  const auto& G = basis();
  Engine eng(order_, budget_);
  std::vector<GPoly> polys;
  std::vector<int> act;
  for (auto& g : G) {
    polys.push_back(eng.from(g));
    act.push_back(static_cast<int>(polys.size()) - 1);
  }
  MPoly q = p.vars() == vars_ ? p : p.to_ring(vars_);
  GPoly r = eng.reduce(eng.from(q), polys, act);
  return MPoly::from_terms(vars_, r);
}

bool Ideal::is_unit() const {
  const auto& G = basis();
  return G.size() == 1 && G[0].is_constant() && !G[0].is_zero();
}

std::optional<std::vector<Exp>> Ideal::standard_monomials() const {
  const auto& G = basis();
  size_t n = vars_->size();
  std::vector<Exp> lts;
  for (auto& g : G) lts.push_back(leading(g));
  std::vector<int> bound(n, -1);
  for (auto& e : lts) {
    int nz = -1, cnt = 0;
    for (size_t i = 0; i < n; ++i)
      if (e[i]) {
        nz = static_cast<int>(i);
        ++cnt;
      }
    if (cnt == 0) return std::vector<Exp>{};
    if (cnt == 1 && (bound[nz] < 0 || e[nz] < bound[nz])) bound[nz] = e[nz];
  }
  for (size_t i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;
  std::vector<Exp> out;
  Exp cur(n, 0);
  auto divisible = [&](const Exp& e) {
    for (auto& l : lts)
      if (divides(l, e)) return true;
    return false;
  };
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      cur[i] = static_cast<uint16_t>(k);
      if (divisible(cur)) break;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

std::optional<size_t> Ideal::quotient_dimension() const {
  auto sm = standard_monomials();
  if (!sm) return std::nullopt;
  return sm->size();
}

std::vector<Scalar> minimal_polynomial(const Ideal& I, const std::string& v) {
  auto sm = I.standard_monomials();
  if (!sm) return {};
  std::map<Exp, size_t> pos;
  for (size_t k = 0; k < sm->size(); ++k) pos[(*sm)[k]] = k;
  size_t dim = sm->size();
  MPoly x = MPoly::var(I.vars(), v);
  MPoly pw(I.vars(), Scalar(1));
  std::vector<std::vector<Scalar>> cols;
  for (size_t k = 0; k <= dim; ++k) {
    MPoly nf = I.normal_form(pw);
    std::vector<Scalar> col(dim, Scalar(0));
    for (auto& t : nf.terms()) col[pos.at(t.e)] = t.c;
    cols.push_back(col);
    // dependency among cols[0..k]?
    Matrix M(dim, std::vector<Scalar>(cols.size()));
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < cols.size(); ++c) M[r][c] = cols[c][r];
    auto ns = nullspace(M);
    if (!ns.empty()) {
      auto& w = ns[0];
      Scalar lead = w.back();
      std::vector<Scalar> out;
      for (auto& c : w) out.push_back(c / lead);
      return out;
    }
    pw = nf * x;
  }
  return {};
}

Ideal jacobian_ideal(const MPoly& f, const std::vector<std::string>& ambient, size_t budget) {
  std::vector<MPoly> g{f};
  for (auto& v : ambient) g.push_back(f.derivative(v));
  return Ideal(g, MonomialOrder::grevlex(), budget);
}

std::optional<size_t> local_tjurina(const MPoly& f, const std::vector<std::string>& ambient,
                                    const std::vector<Scalar>& point, size_t budget, int max_power) {
  Vars R = make_vars(ambient);
  std::map<std::string, MPoly> shift;
  for (size_t i = 0; i < ambient.size(); ++i)
    shift.emplace(ambient[i], MPoly::var(R, ambient[i]) + MPoly(R, point[i]));
  MPoly g = f.substitute(shift, R);
  std::vector<MPoly> base{g};
  for (auto& v : ambient) base.push_back(g.derivative(v));
  std::optional<size_t> prev;
  size_t n = ambient.size();
  for (int N = 1; N <= max_power; ++N) {
    std::vector<MPoly> gens = base;
    // monomials of degree N
    Exp e(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
      if (i + 1 == n) {
        e[i] = static_cast<uint16_t>(left);
        gens.push_back(MPoly::monomial(R, e));
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = static_cast<uint16_t>(k);
        rec(i + 1, left - k);
      }
    };
    rec(0, N);
    Ideal I(gens, MonomialOrder::grevlex(), budget);
    auto d = I.quotient_dimension();
    if (prev && d && *prev == *d) return d;
    prev = d;
  }
  return std::nullopt;
}

}  // namespace swb
