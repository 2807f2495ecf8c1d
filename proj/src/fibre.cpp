#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "singwb/deform.hpp"
#include "singwb/groebner.hpp"
#include "singwb/linalg.hpp"

namespace swb {

namespace {

// Univariate polynomials, low degree first.
using UPoly = std::vector<Scalar>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly deriv(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(long(i)));
  trim(d);
  return d;
}

// Remainder of a by b; quotient in *quo when requested.
UPoly urem(UPoly a, const UPoly& b, UPoly* quo = nullptr) {
  trim(a);
  if (quo) quo->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar(0));
  Scalar inv = Scalar(1) / b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t s = a.size() - b.size();
    Scalar c = a.back() * inv;
    if (quo) (*quo)[s] = c;
    for (size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly monic(UPoly p) {
  trim(p);
  Scalar inv = Scalar(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly squarefree(const UPoly& p) {
  UPoly d = deriv(p);
  if (d.empty()) return monic(p);
  UPoly g = ugcd(p, d);
  UPoly quo;
  urem(p, g, &quo);
  return monic(quo);
}

Scalar horner(const UPoly& p, const Scalar& x) {
  Scalar v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<ComplexF> numeric_roots(const UPoly& p) {
  size_t n = p.size() - 1;
  if (n == 0) return {};
  std::vector<ComplexF> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = embed_complex(p[i]);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (size_t i = 1; i < n; ++i) M(i, i - 1) = 1;
  for (size_t i = 0; i < n; ++i) M(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
  std::vector<ComplexF> out;
  for (size_t i = 0; i < n; ++i) {
    ComplexF z = es.eigenvalues()(i);
    for (int it = 0; it < 20; ++it) {  // Newton polish on the squarefree poly
      ComplexF v = 0, dv = 0;
      for (size_t k = c.size(); k-- > 0;) {
        dv = dv * z + v;
        v = v * z + c[k];
      }
      if (std::abs(dv) < 1e-300) break;
      ComplexF step = v / dv;
      z -= step;
      if (std::abs(step) < 1e-15 * (1 + std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

std::optional<Rational> rationalize(double x, long max_den = 1000000) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued fraction convergents
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int k = 0; k < 40; ++k) {
    double a = std::floor(v);
    if (std::abs(a) > 1e12) break;
    long ai = long(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(double(p1) / double(q1) - x) < 1e-12 * (1 + std::abs(x))) return Rational(p1, q1);
    double frac = v - a;
    if (std::abs(frac) < 1e-14) break;
    v = 1.0 / frac;
  }
  if (q1 != 0 && std::abs(double(p1) / double(q1) - x) < 1e-12 * (1 + std::abs(x))) return Rational(p1, q1);
  return std::nullopt;
}

std::optional<Rational> rationalize(ComplexF z) {
  if (std::abs(z.imag()) > 1e-9 * (1 + std::abs(z))) return std::nullopt;
  return rationalize(z.real());
}

// Exact value of a root of p near `approx`: rational, or a quadratic
// irrationality s/2 +- sqrt(s^2/4 - m) whose conjugate is another root.
std::optional<Scalar> recognize_root(const UPoly& p, ComplexF approx, const std::vector<ComplexF>& roots) {
  if (auto r = rationalize(approx); r && horner(p, Scalar(*r)).is_zero()) return Scalar(*r);
  for (const auto& other : roots) {
    if (std::abs(other - approx) < 1e-9) continue;
    auto s = rationalize(approx + other);
    auto m = rationalize(approx * other);
    if (!s || !m) continue;
    UPoly quad = {Scalar(*m), Scalar(-*s), Scalar(1)};
    if (!urem(p, quad).empty()) continue;
    Rational disc = (*s) * (*s) / 4 - *m;
    Scalar root = Scalar::sqrt_rational(disc);
    Scalar half = Scalar(Rational(*s / 2));
    Scalar a = half + root, b = half - root;
    return std::abs(embed_complex(a) - approx) <= std::abs(embed_complex(b) - approx) ? a : b;
  }
  return std::nullopt;
}

Matrix hessian_at(const MPoly& f, const std::vector<std::string>& ambient, const std::vector<Scalar>& pt) {
  size_t n = ambient.size();
  Matrix H(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) H[i][j] = f.derivative(ambient[i]).derivative(ambient[j]).evaluate_exact(pt);
  return H;
}

bool coord_less(const std::vector<ComplexF>& a, const std::vector<ComplexF>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > 1e-9) return a[i].real() < b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > 1e-9) return a[i].imag() < b[i].imag();
  }
  return false;
}

std::string ade_name(char fam, long tau) { return std::string(1, fam) + std::to_string(tau); }

}  // namespace

std::string classify_ade(const MPoly& f, const std::vector<std::string>& ambient,
                         const std::vector<Scalar>& point, long tau) {
  MPoly g = f.to_ring(make_vars(ambient));
  size_t n = ambient.size();
  Matrix H = hessian_at(g, ambient, point);
  size_t corank = n - rank(H);
  if (corank == 0) return tau == 1 ? "A1" : "unclassified";
  if (corank == 1) return tau >= 1 ? ade_name('A', tau) : "unclassified";
  if (corank != 2) return "unclassified";
  // Cubic part of the shifted germ restricted to ker H.
  std::map<std::string, MPoly> shift;
  for (size_t i = 0; i < n; ++i) shift[ambient[i]] = MPoly::var(g.vars(), ambient[i]) + point[i];
  MPoly cubic = g.substitute(shift, g.vars()).component(ambient, 3);
  auto ker = nullspace(H);
  Ring B({"s", "u"});
  std::map<std::string, MPoly> lin;
  for (size_t i = 0; i < n; ++i) lin[ambient[i]] = B("s") * ker[0][i] + B("u") * ker[1][i];
  MPoly c = cubic.substitute(lin, B.vars());
  if (c.is_zero()) return "unclassified";
  auto co = [&](int a) { return c.coeff(Exp{uint16_t(3 - a), uint16_t(a)}); };
  Scalar a = co(0), b = co(1), cc = co(2), d = co(3);
  Scalar disc = b * b * cc * cc - Scalar(4) * a * cc.pow(3) - Scalar(4) * b.pow(3) * d -
                Scalar(27) * a * a * d * d + Scalar(18) * a * b * cc * d;
  if (!disc.is_zero()) return tau == 4 ? "D4" : "unclassified";
  bool triple = b * b == Scalar(3) * a * cc && cc * cc == Scalar(3) * b * d && b * cc == Scalar(9) * a * d;
  if (triple) return tau >= 6 && tau <= 8 ? ade_name('E', tau) : "unclassified";
  return tau >= 5 ? ade_name('D', tau) : "unclassified";
}

json singularity_json(const SingularityReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    json c = json::array();
    for (size_t i = 0; i < p.coords.size(); ++i)
      c.push_back(p.exact ? scalar_to_json((*p.exact)[i]) : complex_to_json(p.coords[i]));
    pts.push_back({{"coords", c}, {"tjurina", p.tjurina}, {"ade", p.ade}});
  }
  return {{"points", pts}, {"global_tjurina", r.global_tjurina}, {"smooth", r.smooth}, {"exact", r.exact}};
}

SingularityReport analyze_hypersurface(const MPoly& f_in, const std::vector<std::string>& ambient,
                                       size_t budget) {
  Vars av = make_vars(ambient);
  MPoly f = f_in.to_ring(av);
  Ideal J = jacobian_ideal(f, ambient, budget);
  SingularityReport rep;
  auto dim = J.quotient_dimension();
  if (!dim) throw Error(Err::UnclassifiedSingularity, "singular locus is not zero-dimensional");
  rep.global_tjurina = long(*dim);
  rep.smooth = *dim == 0;
  if (rep.smooth) return rep;

  // Coordinates from the squarefree minimal polynomial of each variable.
  std::vector<UPoly> sq;
  std::vector<std::vector<ComplexF>> roots;
  for (const auto& v : ambient) {
    UPoly m = minimal_polynomial(J, v);
    if (m.empty()) throw Error(Err::UnclassifiedSingularity, "no minimal polynomial for " + v);
    sq.push_back(squarefree(m));
    roots.push_back(numeric_roots(sq.back()));
  }
  const auto& gb = J.basis();
  std::vector<std::vector<ComplexF>> cand = {{}};
  for (const auto& rs : roots) {
    std::vector<std::vector<ComplexF>> next;
    for (const auto& c : cand)
      for (auto r : rs) {
        auto e = c;
        e.push_back(r);
        next.push_back(e);
      }
    cand = std::move(next);
  }
  std::vector<std::vector<ComplexF>> pts;
  for (const auto& c : cand) {
    double worst = 0;
    for (const auto& g : gb) worst = std::max(worst, std::abs(g.evaluate(c)));
    if (worst > 1e-6) continue;
    bool dup = false;
    for (const auto& p : pts) {
      double d = 0;
      for (size_t i = 0; i < p.size(); ++i) d = std::max(d, std::abs(p[i] - c[i]));
      if (d < 1e-6) dup = true;
    }
    if (!dup) pts.push_back(c);
  }
  std::sort(pts.begin(), pts.end(), coord_less);
  long accounted = 0;
  for (const auto& c : pts) {
    SingularPoint sp;
    sp.coords = c;
    std::vector<Scalar> ex;
    for (size_t i = 0; i < ambient.size(); ++i) {
      auto v = recognize_root(sq[i], c[i], roots[i]);
      if (!v) break;
      ex.push_back(*v);
    }
    bool exact = ex.size() == ambient.size();
    if (exact)
      for (const auto& g : gb)
        if (!g.evaluate_exact(ex).is_zero()) exact = false;
    if (exact) {
      sp.exact = ex;
      for (size_t i = 0; i < ex.size(); ++i) sp.coords[i] = embed_complex(ex[i]);
      auto tau = local_tjurina(f, ambient, ex, budget);
      if (tau) {
        sp.tjurina = long(*tau);
        accounted += sp.tjurina;
        sp.ade = classify_ade(f, ambient, ex, sp.tjurina);
      }
    } else {
      rep.exact = false;
    }
    rep.points.push_back(sp);
  }
  // A single undetermined point carries the remaining multiplicity.
  long open = 0;
  for (const auto& p : rep.points) open += p.tjurina < 0;
  if (open == 1)
    for (auto& p : rep.points)
      if (p.tjurina < 0) {
        p.tjurina = rep.global_tjurina - accounted;
        if (p.tjurina == 1) p.ade = "A1";
      }
  return rep;
}

SingularityReport analyze_fibre(const DeformationFamily& f, const std::map<std::string, Scalar>& params,
                                size_t budget) {
  for (const auto& [k, v] : params)
    if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
      throw Error(Err::VariableMismatch, "unknown parameter " + k + " for " + f.label);
  std::map<std::string, Scalar> full;
  for (const auto& p : f.params) {
    auto it = params.find(p);
    full[p] = it == params.end() ? Scalar(0) : it->second;
  }
  return analyze_hypersurface(f.equation.substitute_scalars(full), f.ambient, budget);
}

SingularityReport analyze_fibre_numeric(const DeformationFamily& f, const std::map<std::string, double>& params,
                                        uint64_t seed) {
  for (const auto& [k, v] : params)
    if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
      throw Error(Err::VariableMismatch, "unknown parameter " + k + " for " + f.label);
  std::map<std::string, ComplexF> base;
  for (const auto& p : f.params) base[p] = params.count(p) ? params.at(p) : 0.0;
  const auto& amb = f.ambient;
  size_t n = amb.size();
  std::vector<MPoly> sys = {f.equation};
  for (const auto& v : amb) sys.push_back(f.equation.derivative(v));
  std::vector<std::vector<MPoly>> jac(sys.size());
  for (size_t i = 0; i < sys.size(); ++i)
    for (const auto& v : amb) jac[i].push_back(sys[i].derivative(v));
  auto eval = [&](const std::vector<ComplexF>& x, const MPoly& p) {
    auto m = base;
    for (size_t i = 0; i < n; ++i) m[amb[i]] = x[i];
    return p.evaluate(m);
  };
  double scale = 1;
  for (const auto& [k, v] : base) scale = std::max(scale, std::abs(v));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<std::vector<ComplexF>> found;
  for (int start = 0; start < 300; ++start) {
    std::vector<ComplexF> x(n);
    for (auto& c : x) c = ComplexF(N(rng), N(rng)) * scale;
    double res = 1e300;
    for (int it = 0; it < 100; ++it) {
      Eigen::VectorXcd F(sys.size());
      Eigen::MatrixXcd Jm(sys.size(), n);
      for (size_t i = 0; i < sys.size(); ++i) {
        F(i) = eval(x, sys[i]);
        for (size_t j = 0; j < n; ++j) Jm(i, j) = eval(x, jac[i][j]);
      }
      res = F.norm();
      if (res < 1e-13) break;
      Eigen::VectorXcd step = Jm.completeOrthogonalDecomposition().solve(F);
      for (size_t j = 0; j < n; ++j) x[j] -= step(j);
      if (step.norm() < 1e-15) break;
    }
    if (res > 1e-8) continue;
    bool dup = false;
    for (const auto& p : found) {
      double d = 0;
      for (size_t i = 0; i < n; ++i) d = std::max(d, std::abs(p[i] - x[i]));
      if (d < 1e-6) dup = true;
    }
    if (!dup) found.push_back(x);
  }
  std::sort(found.begin(), found.end(), coord_less);
  SingularityReport rep;
  rep.exact = false;
  rep.smooth = found.empty();
  for (const auto& x : found) {
    SingularPoint sp;
    sp.coords = x;
    Eigen::MatrixXcd H(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) H(i, j) = eval(x, f.equation.derivative(amb[i]).derivative(amb[j]));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H);
    double smax = svd.singularValues()(0);
    long corank = 0;
    for (long i = 0; i < long(n); ++i)
      if (svd.singularValues()(i) < 1e-8 * std::max(1.0, smax)) ++corank;
    if (corank == 0) {
      sp.tjurina = 1;
      sp.ade = "A1";
      rep.global_tjurina += 1;
    }
    rep.points.push_back(sp);
  }
  return rep;
}

}  // namespace swb
