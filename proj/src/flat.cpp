#include "singwb/flat.hpp"

#include "singwb/error.hpp"

namespace swb {

namespace {

std::string idx(const char* stem, int i) { return std::string(stem) + std::to_string(i); }

// coefficient of T^i in (sum_{j in I} g_j T^j)^d, for all i <= top
std::vector<std::vector<MPoly>> composition_sums(const std::vector<MPoly>& g, int top, const Vars& v) {
  // g[j] is the generator of degree j (zero when j not in I)
  std::vector<std::vector<MPoly>> X(top + 1);  // X[d][i]
  std::vector<MPoly> base(top + 1, MPoly(v));
  for (int j = 0; j <= top && j < int(g.size()); ++j) base[j] = g[j];
  X[1] = base;
  for (int d = 2; d <= top; ++d) {
    X[d].assign(top + 1, MPoly(v));
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= i; ++j)
        if (!X[d - 1][i - j].is_zero() && !base[j].is_zero()) X[d][i] += X[d - 1][i - j] * base[j];
  }
  return X;
}

// psi_i = sum_d (-1)^{d-1} ((h-i+1)/h, d-1)/d! X_i^d
MPoly saito_flat(const std::vector<std::vector<MPoly>>& X, int i, int h, const Vars& v) {
  MPoly out(v);
  Rational a(h - i + 1, h);
  a.canonicalize();
  Rational fact = 1;
  for (int d = 1; d <= i; ++d) {
    fact *= d;
    if (X[d][i].is_zero()) continue;
    Rational c = pochhammer(a, d - 1) / fact;
    if (d % 2 == 0) c = -c;
    out += X[d][i] * Scalar(c);
  }
  return out;
}

MPoly elementary(const std::vector<MPoly>& vars, int k, const Vars& v) {
  std::vector<MPoly> e(k + 1, MPoly(v));
  e[0] = MPoly(v, 1);
  for (const auto& x : vars)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

}  // namespace

Rational pochhammer(const Rational& a, int n) {
  Rational out = 1;
  for (int k = 0; k < n; ++k) out *= a + k;
  return out;
}

const FlatCoord& FlatSystem::get(const std::string& name) const {
  for (const auto& c : coords)
    if (c.name == name) return c;
  throw Error(Err::VariableMismatch, "no flat coordinate " + name);
}

std::vector<int> FlatSystem::degrees() const {
  std::vector<int> d;
  for (const auto& c : coords) d.push_back(c.degree);
  return d;
}

FlatSystem flat_coords_A(int r) {
  if (r < 1) throw Error(Err::UnsupportedType, "A_{2r-1} needs r >= 1");
  int n = 2 * r;
  FlatSystem fs;
  fs.dtype = {'A', n - 1};
  fs.coxeter_number = n;
  std::vector<std::string> gn, cn;
  for (int i = 2; i <= n; ++i) gn.push_back(idx("e", i));
  for (int i = 1; i <= n; ++i) cn.push_back(idx("l", i));
  fs.gen_ring = make_vars(gn);
  fs.coord_ring = make_vars(cn);
  std::vector<MPoly> lam;
  for (const auto& s : cn) lam.push_back(MPoly::var(fs.coord_ring, s));
  std::map<std::string, MPoly> bind;
  std::vector<MPoly> g(n + 1, MPoly(fs.gen_ring));
  for (int i = 2; i <= n; ++i) {
    g[i] = MPoly::var(fs.gen_ring, idx("e", i));
    fs.generators.push_back(elementary(lam, i, fs.coord_ring));
    bind[idx("e", i)] = fs.generators.back();
  }
  auto X = composition_sums(g, n, fs.gen_ring);
  for (int i = 2; i <= n; ++i) {
    MPoly p = saito_flat(X, i, n, fs.gen_ring);
    fs.coords.push_back({idx("psi", i), i, p, p.substitute(bind, fs.coord_ring)});
  }
  return fs;
}

FlatSystem flat_coords_D(int r) {
  if (r < 3) throw Error(Err::UnsupportedType, "D_{r+1} needs r >= 3");
  int h = 2 * r;
  FlatSystem fs;
  fs.dtype = {'D', r + 1};
  fs.coxeter_number = h;
  std::vector<std::string> gn, cn;
  for (int i = 1; i <= r; ++i) gn.push_back(idx("x", 2 * i));
  gn.push_back("p");
  for (int i = 1; i <= r + 1; ++i) cn.push_back(idx("xi", i));
  fs.gen_ring = make_vars(gn);
  fs.coord_ring = make_vars(cn);
  std::vector<MPoly> xi, sq;
  for (const auto& s : cn) {
    xi.push_back(MPoly::var(fs.coord_ring, s));
    sq.push_back(xi.back() * xi.back());
  }
  std::map<std::string, MPoly> bind;
  std::vector<MPoly> g(h + 1, MPoly(fs.gen_ring));
  for (int i = 1; i <= r; ++i) {
    g[2 * i] = MPoly::var(fs.gen_ring, idx("x", 2 * i));
    fs.generators.push_back(elementary(sq, i, fs.coord_ring));
    bind[idx("x", 2 * i)] = fs.generators.back();
  }
  MPoly prod(fs.coord_ring, 1);
  for (const auto& x : xi) prod *= x;
  fs.generators.push_back(prod);
  bind["p"] = prod;
  auto X = composition_sums(g, h, fs.gen_ring);
  for (int i = 1; i <= r; ++i) {
    MPoly p = saito_flat(X, 2 * i, h, fs.gen_ring);
    fs.coords.push_back({idx("psi", 2 * i), 2 * i, p, p.substitute(bind, fs.coord_ring)});
  }
  fs.coords.push_back({"psi", r + 1, MPoly::var(fs.gen_ring, "p"), prod});
  return fs;
}

namespace {

const Vars& pq_ring() {
  static const Vars v = make_vars({"p1", "q1", "p2", "q2", "p3", "q3"});
  return v;
}

}  // namespace

MPoly e6_theta(const MPoly& f) {
  const Vars& v = pq_ring();
  MPoly g = f.to_ring(v);
  MPoly out(v);
  auto P = [&](int i) { return MPoly::var(v, idx("p", i)); };
  auto Q = [&](int i) { return MPoly::var(v, idx("q", i)); };
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : cyc) {
    int i = c[0], j = c[1], k = c[2];
    MPoly cp = Q(i) * (P(j) - P(k)) * Scalar(3) - P(i) * (Q(j) - Q(k)) * Scalar(2);
    MPoly cq = P(i) * P(i) * (P(j) - P(k)) * Scalar::frac(1, 2) - Q(i) * (Q(j) - Q(k)) * Scalar(3);
    out += cp * g.derivative(idx("p", i)) + cq * g.derivative(idx("q", i));
  }
  return out;
}

MPoly e6_delta(const MPoly& f) {
  const Vars& v = pq_ring();
  MPoly g = f.to_ring(v);
  MPoly out(v);
  for (int i = 1; i <= 3; ++i) {
    std::string p = idx("p", i), q = idx("q", i);
    MPoly P = MPoly::var(v, p), Q = MPoly::var(v, q);
    MPoly gp = g.derivative(p);
    out += (gp + P * gp.derivative(p)) * Scalar(4);
    out += Q * gp.derivative(q) * Scalar(12);
    out += P * P * g.derivative(q).derivative(q);
  }
  return out;
}

FlatSystem flat_coords_E6() {
  FlatSystem fs;
  fs.dtype = {'E', 6};
  fs.coxeter_number = 12;
  fs.gen_ring = pq_ring();
  fs.coord_ring = make_vars({"x1", "y1", "x2", "y2", "x3", "y3"});
  std::map<std::string, MPoly> bind;
  for (int i = 1; i <= 3; ++i) {
    MPoly x = MPoly::var(fs.coord_ring, idx("x", i)), y = MPoly::var(fs.coord_ring, idx("y", i));
    MPoly p = x * x + y * y;
    MPoly q = x * x * x * Scalar::frac(1, 3) - x * y * y;
    fs.generators.push_back(p);
    fs.generators.push_back(q);
    bind[idx("p", i)] = p;
    bind[idx("q", i)] = q;
  }
  const Vars& v = fs.gen_ring;
  MPoly A = MPoly::var(v, "p1") + MPoly::var(v, "p2") + MPoly::var(v, "p3");
  MPoly B = e6_theta(A) * Scalar::frac(1, 5);
  MPoly H = e6_theta(B);
  MPoly C = e6_delta(H) * Scalar::frac(1, 16);
  MPoly J = (e6_theta(C) - A * A * B * Scalar(3)) * Scalar::frac(1, 9);
  MPoly K = e6_theta(J) * Scalar::frac(2, 3);
  std::vector<std::pair<int, MPoly>> psi = {
      {2, A},
      {5, B},
      {6, C - A.pow(3) * Scalar::frac(1, 8)},
      {8, H - A * C * Scalar::frac(1, 4) + A.pow(4) * Scalar::frac(5, 192)},
      {9, J},
      {12, K - A * A * H * Scalar::frac(1, 8) - C * C * Scalar::frac(1, 8) +
               A.pow(3) * C * Scalar::frac(5, 96) - A * B * B - A.pow(6) * Scalar::frac(1, 256)}};
  for (auto& [d, p] : psi) fs.coords.push_back({idx("psi", d), d, p, p.substitute(bind, fs.coord_ring)});
  return fs;
}

FlatSystem flat_coords(const DynkinType& t) {
  if (t.family == 'A' && t.rank % 2 == 1) return flat_coords_A((t.rank + 1) / 2);
  if (t.family == 'D' && t.rank >= 4) return flat_coords_D(t.rank - 1);
  if (t == DynkinType{'E', 6}) return flat_coords_E6();
  throw Error(Err::UnsupportedType, "flat coordinates cover A_{2r-1}, D_{r+1}, E6; got " + t.str());
}

std::vector<MPoly> epsilon_from_psi(int r) {
  int n = 2 * r;
  std::vector<std::string> names;
  for (int i = 2; i <= n; ++i) names.push_back(idx("psi", i));
  Vars v = make_vars(names);
  std::vector<MPoly> g(n + 1, MPoly(v));
  for (int i = 2; i <= n; ++i) g[i] = MPoly::var(v, idx("psi", i));
  auto Y = composition_sums(g, n, v);
  std::vector<MPoly> out;
  for (int i = 2; i <= n; ++i) {
    MPoly e(v);
    Rational fact = 1, hp = 1;
    for (int d = 1; d <= i; ++d) {
      fact *= d;
      if (d > 1) hp *= n;
      if (Y[d][i].is_zero()) continue;
      e += Y[d][i] * Scalar(pochhammer(Rational(n - i + 1), d - 1) / (fact * hp));
    }
    out.push_back(e);
  }
  return out;
}

MPoly act_linear(const Matrix& M, const MPoly& f) {
  const Vars& v = f.vars();
  std::map<std::string, MPoly> bind;
  for (size_t j = 0; j < M.size(); ++j) {
    MPoly img(v);
    for (size_t k = 0; k < M[j].size(); ++k)
      if (!M[j][k].is_zero()) img += MPoly::var(v, v->name(k)) * M[j][k];
    bind[v->name(j)] = img;
  }
  return f.substitute(bind, v);
}

std::vector<Matrix> default_w_generators(const FlatSystem& fs) {
  size_t n = fs.coord_ring->size();
  std::vector<Matrix> gens;
  if (fs.dtype.family == 'A' || fs.dtype.family == 'D') {
    for (size_t i = 0; i + 1 < n; ++i) {
      Matrix M = identity_matrix(n);
      M[i][i] = M[i + 1][i + 1] = 0;
      M[i][i + 1] = M[i + 1][i] = 1;
      gens.push_back(M);
    }
    if (fs.dtype.family == 'D') {
      Matrix M = identity_matrix(n);
      M[n - 2][n - 2] = M[n - 1][n - 1] = 0;
      M[n - 2][n - 1] = M[n - 1][n - 2] = -1;
      gens.push_back(M);
    }
    return gens;
  }
  RootSystem rs = build_root_system(fs.dtype);
  return weyl_generators(rs).orthonormal;
}

Report verify_w_invariance(const FlatSystem& fs, const std::vector<Matrix>& gens) {
  Report rep;
  for (size_t g = 0; g < gens.size(); ++g)
    for (const auto& c : fs.coords) {
      MPoly img = act_linear(gens[g], c.in_coords);
      bool ok = img == c.in_coords;
      json w = nullptr;
      if (!ok) w = {{"generator", g}, {"coordinate", c.name}, {"difference_terms", (img - c.in_coords).size()}};
      rep.add("w_invariance.s" + std::to_string(g + 1) + "." + c.name, ok, w);
    }
  return rep;
}

}  // namespace swb
