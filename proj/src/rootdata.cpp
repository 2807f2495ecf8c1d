#include "singwb/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace swb {

void validate_type(const DynkinType& t) {
  bool ok = false;
  switch (t.family) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 2; break;
    case 'C': ok = t.rank >= 3; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: break;
  }
  if (!ok) throw Error(Err::UnsupportedType, "invalid Dynkin type " + t.str());
}

DynkinType parse_type(const std::string& s) {
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])))
    throw Error(Err::UnsupportedType, "invalid Dynkin type '" + s + "'");
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error(Err::UnsupportedType, "invalid Dynkin type '" + s + "'");
  if (s.size() > 4) throw Error(Err::UnsupportedType, "rank too large in '" + s + "'");
  DynkinType t{s[0], std::stoi(s.substr(1))};
  validate_type(t);
  return t;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Err::DimensionMismatch, "dot product of vectors of different length");
  Scalar s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

namespace {

int as_int(const Scalar& s) {
  if (!s.is_rational() || s.rational().get_den() != 1)
    throw Error(Err::UnsupportedType, "non-integral Cartan entry " + s.str());
  return static_cast<int>(s.rational().get_num().get_si());
}

Vec unit(int n, int i, const Scalar& c = Scalar(1)) {
  Vec v(n, Scalar(0));
  v[i] = c;
  return v;
}

std::vector<Vec> e8_simple() {
  // Bourbaki realization in R^8
  std::vector<Vec> a;
  Vec a1(8, Scalar::frac(-1, 2));
  a1[0] = Scalar::frac(1, 2);
  a1[7] = Scalar::frac(1, 2);
  a.push_back(a1);
  Vec a2 = unit(8, 0);
  a2[1] = 1;
  a.push_back(a2);
  Vec a3 = unit(8, 1);
  a3[0] = -1;
  a.push_back(a3);
  for (int k = 2; k <= 6; ++k) {
    Vec v = unit(8, k);
    v[k - 1] = -1;
    a.push_back(v);
  }
  return a;
}

std::vector<Vec> e6_frame_simple() {
  Scalar r2 = Scalar::sqrt(2), r6 = Scalar::sqrt(6);
  Scalar h6 = r6 / Scalar(2), h2 = r2 / Scalar(2), t6 = r6 / Scalar(3);
  std::vector<Vec> a(6, Vec(6, Scalar(0)));
  a[0][1] = r2;                       // sqrt2 D_{3,0,0}
  a[1][5] = r2;                       // sqrt2 D_{0,0,3}
  a[2][2] = -h6, a[2][3] = -h2;       // sqrt2 D_{0,1,0}
  a[3][0] = -h6, a[3][1] = -h2;       // sqrt2 D_{1,0,0}
  a[4][4] = -h6, a[4][5] = -h2;       // sqrt2 D_{0,0,1}
  a[5][0] = t6, a[5][2] = t6, a[5][4] = t6;  // sqrt2 D_{3,3,3}
  return a;
}

std::vector<int> reflect(const std::vector<int>& b, int i, const IntMatrix& C) {
  int pair = 0;
  for (size_t j = 0; j < b.size(); ++j) pair += b[j] * C[j][i];
  std::vector<int> r = b;
  r[i] -= pair;
  return r;
}

}  // namespace

IntMatrix cartan_from_vectors(const std::vector<Vec>& v) {
  size_t n = v.size();
  IntMatrix C(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) C[i][j] = as_int(Scalar(2) * dot(v[i], v[j]) / dot(v[j], v[j]));
  return C;
}

RootSystem build_root_system(const DynkinType& t) {
  validate_type(t);
  RootSystem rs;
  rs.dtype = t;
  int r = t.rank;
  switch (t.family) {
    case 'A':
      rs.ambient_dim = r + 1;
      for (int i = 0; i < r; ++i) {
        Vec v = unit(r + 1, i);
        v[i + 1] = -1;
        rs.simple_roots.push_back(v);
      }
      break;
    case 'D':
      rs.ambient_dim = r;
      for (int i = 0; i < r - 1; ++i) {
        Vec v = unit(r, i);
        v[i + 1] = -1;
        rs.simple_roots.push_back(v);
      }
      {
        Vec v = unit(r, r - 2);
        v[r - 1] = 1;
        rs.simple_roots.push_back(v);
      }
      break;
    case 'E':
      if (r == 6) {
        rs.ambient_dim = 6;
        rs.simple_roots = e6_frame_simple();
      } else {
        rs.ambient_dim = 8;
        auto e8 = e8_simple();
        rs.simple_roots.assign(e8.begin(), e8.begin() + r);
      }
      break;
    default:
      throw Error(Err::UnsupportedType, t.str() + " is only available as a folded label");
  }
  rs.cartan = cartan_from_vectors(rs.simple_roots);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && rs.cartan[i][j] != 0 && rs.cartan[i][j] != -1)
        throw Error(Err::UnsupportedType, "unexpected Cartan entry");

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> todo;
  for (int i = 0; i < r; ++i) {
    std::vector<int> b(r, 0);
    b[i] = 1;
    seen.insert(b);
    todo.push_back(b);
  }
  while (!todo.empty()) {
    auto b = todo.front();
    todo.pop_front();
    for (int i = 0; i < r; ++i) {
      auto c = reflect(b, i, rs.cartan);
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<std::vector<int>> pos;
  for (auto& b : seen)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.positive_coeffs = pos;
  for (auto& b : pos) {
    Vec v(rs.ambient_dim, Scalar(0));
    for (int i = 0; i < r; ++i)
      if (b[i])
        for (int k = 0; k < rs.ambient_dim; ++k) v[k] += Scalar(b[i]) * rs.simple_roots[i][k];
    rs.positive_roots.push_back(v);
  }
  return rs;
}

DynkinType identify_type(const std::vector<Vec>& simple) {
  int n = static_cast<int>(simple.size());
  IntMatrix C = cartan_from_vectors(simple);
  std::vector<Scalar> norms;
  for (auto& v : simple) norms.push_back(dot(v, v));
  std::vector<std::vector<int>> adj(n);
  bool triple = false, dbl = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || C[i][j] == 0) continue;
      adj[i].push_back(j);
      int m = C[i][j] * C[j][i];
      if (m == 3) triple = true;
      if (m == 2) dbl = true;
      if (m > 3) throw Error(Err::UnsupportedType, "affine or hyperbolic Cartan matrix");
    }
  // connectivity
  std::vector<bool> vis(n, false);
  std::function<void(int)> dfs = [&](int u) {
    vis[u] = true;
    for (int w : adj[u])
      if (!vis[w]) dfs(w);
  };
  dfs(0);
  if (std::find(vis.begin(), vis.end(), false) != vis.end())
    throw Error(Err::UnsupportedType, "disconnected diagram");
  int edges = 0;
  for (auto& a : adj) edges += static_cast<int>(a.size());
  if (edges / 2 != n - 1) throw Error(Err::UnsupportedType, "diagram is not a tree");

  if (triple) {
    if (n != 2) throw Error(Err::UnsupportedType, "triple bond outside rank 2");
    return {'G', 2};
  }
  if (!dbl) {
    std::vector<int> branch;
    for (int i = 0; i < n; ++i)
      if (adj[i].size() > 2) branch.push_back(i);
    if (branch.empty()) return {'A', n};
    if (branch.size() > 1 || adj[branch[0]].size() != 3) throw Error(Err::UnsupportedType, "not a finite type");
    std::vector<int> arms;
    for (int s : adj[branch[0]]) {
      int len = 1, prev = branch[0], cur = s;
      while (adj[cur].size() == 2) {
        int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nx;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {'E', n};
    throw Error(Err::UnsupportedType, "not a finite type");
  }
  Scalar longest = norms[0];
  for (auto& x : norms)
    if (!(x - longest).is_zero() && (x / longest).rational() > 1) longest = x;
  int nlong = 0;
  for (auto& x : norms)
    if (x == longest) ++nlong;
  int nshort = n - nlong;
  if (n == 2) return {'B', 2};
  if (n == 4 && nlong == 2) return {'F', 4};
  if (nshort == 1) return {'B', n};
  if (nlong == 1) return {'C', n};
  throw Error(Err::UnsupportedType, "unrecognized non-simply-laced diagram");
}

bool is_automorphism(const IntMatrix& C, const Perm& p) {
  size_t n = C.size();
  if (p.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : p) {
    if (x < 0 || static_cast<size_t>(x) >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (C[p[i]][p[j]] != C[i][j]) return false;
  return true;
}

std::vector<Perm> diagram_automorphisms(const IntMatrix& C) {
  Perm p(C.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (is_automorphism(C, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

OmegaGroup close_group(const RootSystem& rs, const std::vector<Perm>& gens, const std::string& name) {
  for (auto& g : gens)
    if (!is_automorphism(rs.cartan, g))
      throw Error(Err::InvalidAutomorphism, "permutation does not preserve the Cartan matrix of " + rs.dtype.str());
  OmegaGroup G;
  G.name = name;
  G.generators = gens;
  Perm id(rs.rank());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::deque<Perm> todo{id};
  while (!todo.empty()) {
    Perm a = todo.front();
    todo.pop_front();
    for (auto& g : gens) {
      Perm c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = g[a[i]];
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  G.elements.assign(seen.begin(), seen.end());
  return G;
}

OmegaGroup make_omega(const RootSystem& rs, const std::string& name) {
  int r = rs.rank();
  Perm id(r);
  std::iota(id.begin(), id.end(), 0);
  if (name == "trivial" || name == "1") return close_group(rs, {}, "trivial");
  const DynkinType& t = rs.dtype;
  if (name == "z2") {
    Perm p = id;
    if (t.family == 'A' && r >= 2) {
      for (int i = 0; i < r; ++i) p[i] = r - 1 - i;
    } else if (t.family == 'D') {
      std::swap(p[r - 2], p[r - 1]);
    } else if (t.family == 'E' && r == 6) {
      std::swap(p[0], p[1]);
      std::swap(p[3], p[4]);
    } else {
      throw Error(Err::InvalidAutomorphism, t.str() + " has no order-2 diagram automorphism");
    }
    return close_group(rs, {p}, "z2");
  }
  if ((name == "z3" || name == "s3") && t.family == 'D' && r == 4) {
    Perm rho = {2, 1, 3, 0};  // (1 3 4)
    if (name == "z3") return close_group(rs, {rho}, "z3");
    Perm sigma = {0, 1, 3, 2};  // (3 4)
    return close_group(rs, {sigma, rho}, "s3");
  }
  throw Error(Err::InvalidAutomorphism, "omega '" + name + "' does not act on " + t.str());
}

DynkinType dual_type(const DynkinType& t) {
  if (t.family == 'B' && t.rank >= 3) return {'C', t.rank};
  if (t.family == 'C') return {'B', t.rank};
  return t;
}

FoldResult fold(const RootSystem& rs, const OmegaGroup& omega) {
  int r = rs.rank();
  std::vector<int> orbit_of(r, -1);
  FoldResult res;
  for (int i = 0; i < r; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::set<int> orb;
    for (auto& g : omega.elements) orb.insert(g[i]);
    for (int k : orb) orbit_of[k] = static_cast<int>(res.orbits.size());
    res.orbits.emplace_back(orb.begin(), orb.end());
  }
  std::vector<Vec> beta;
  for (auto& o : res.orbits) {
    Vec v(rs.ambient_dim, Scalar(0));
    for (auto& g : omega.elements)
      for (int k = 0; k < rs.ambient_dim; ++k) v[k] += rs.simple_roots[g[o[0]]][k];
    beta.push_back(v);
  }
  res.orbit_sum_cartan = cartan_from_vectors(beta);
  res.orbit_sum_type = identify_type(beta);
  res.folded = dual_type(res.orbit_sum_type);
  size_t n = beta.size();
  res.folded_cartan = res.orbit_sum_cartan;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) res.folded_cartan[i][j] = res.orbit_sum_cartan[j][i];
  return res;
}

DynkinType fold(const DynkinType& t, const std::string& omega) {
  RootSystem rs = build_root_system(t);
  return fold(rs, make_omega(rs, omega)).folded;
}

Vec mat_apply(const Matrix& M, const Vec& v) {
  Vec out(M.size(), Scalar(0));
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!M[i][j].is_zero() && !v[j].is_zero()) out[i] += M[i][j] * v[j];
  return out;
}

WeylGenerators weyl_generators(const RootSystem& rs) {
  WeylGenerators W;
  int n = rs.ambient_dim, r = rs.rank();
  for (int j = 0; j < r; ++j) {
    const Vec& a = rs.simple_roots[j];
    Scalar f = Scalar(2) / dot(a, a);
    Matrix M = identity_matrix(n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (!a[p].is_zero() && !a[q].is_zero()) M[p][q] -= f * a[p] * a[q];
    W.orthonormal.push_back(M);
    Matrix U = identity_matrix(r);
    for (int k = 0; k < r; ++k) U[k][j] -= Scalar(rs.cartan[j][k]);
    W.mu.push_back(U);
  }
  return W;
}

std::vector<size_t> vanishing_roots(const RootSystem& rs, const Vec& h) {
  if (static_cast<int>(h.size()) != rs.ambient_dim)
    throw Error(Err::DimensionMismatch, "h has length " + std::to_string(h.size()) + ", expected " +
                                            std::to_string(rs.ambient_dim));
  std::vector<size_t> out;
  for (size_t k = 0; k < rs.positive_roots.size(); ++k)
    if (dot(rs.positive_roots[k], h).is_zero()) out.push_back(k);
  return out;
}

Vec simple_coordinates(const RootSystem& rs, const Vec& h) {
  if (static_cast<int>(h.size()) != rs.ambient_dim) throw Error(Err::DimensionMismatch, "vector length");
  Matrix M(rs.ambient_dim, Vec(rs.rank()));
  for (int k = 0; k < rs.ambient_dim; ++k)
    for (int i = 0; i < rs.rank(); ++i) M[k][i] = rs.simple_roots[i][k];
  bool ok = false;
  Vec c = solve(M, h, &ok);
  if (!ok) throw Error(Err::DimensionMismatch, "vector is not in the span of the roots");
  return c;
}

Vec act_on_cartan(const RootSystem& rs, const Perm& p, const Vec& h) {
  Vec c = simple_coordinates(rs, h);
  Vec out(rs.ambient_dim, Scalar(0));
  for (int i = 0; i < rs.rank(); ++i)
    if (!c[i].is_zero())
      for (int k = 0; k < rs.ambient_dim; ++k) out[k] += c[i] * rs.simple_roots[p[i]][k];
  return out;
}

Vec omega_average(const RootSystem& rs, const OmegaGroup& omega, const Vec& h) {
  Vec acc(rs.ambient_dim, Scalar(0));
  for (auto& g : omega.elements) {
    Vec v = act_on_cartan(rs, g, h);
    for (int k = 0; k < rs.ambient_dim; ++k) acc[k] += v[k];
  }
  Scalar inv = Scalar(1) / Scalar(static_cast<long>(omega.elements.size()));
  for (auto& x : acc) x *= inv;
  return acc;
}

std::vector<Vec> omega_fixed_basis(const RootSystem& rs, const OmegaGroup& omega) {
  auto fr = fold(rs, omega);
  std::vector<Vec> out;
  for (auto& o : fr.orbits) {
    Vec v(rs.ambient_dim, Scalar(0));
    for (int i : o)
      for (int k = 0; k < rs.ambient_dim; ++k) v[k] += rs.simple_roots[i][k];
    out.push_back(v);
  }
  return out;
}

std::vector<int> mckay_dimension_vector(const DynkinType& t) {
  validate_type(t);
  int r = t.rank;
  switch (t.family) {
    case 'A':
      return std::vector<int>(r + 1, 1);
    case 'D': {
      std::vector<int> d(r + 1, 2);
      d[0] = d[1] = d[r - 1] = d[r] = 1;
      return d;
    }
    case 'E':
      if (r == 6) return {1, 1, 1, 2, 2, 2, 3};
      if (r == 7) return {1, 2, 2, 3, 4, 3, 2, 1};
      return {1, 2, 3, 4, 6, 5, 4, 3, 2};
    default:
      throw Error(Err::UnsupportedType, t.str() + " is not homogeneous");
  }
}

std::vector<std::vector<Rational>> coweights_in_roots(const RootSystem& rs) {
  int r = rs.rank();
  Matrix C(r, Vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) C[i][j] = Scalar(rs.cartan[i][j]);
  // invert: [C | I]
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) C[i].push_back(Scalar(i == j ? 1 : 0));
  rref(C);
  std::vector<std::vector<Rational>> out(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i][j] = C[i][r + j].rational();
  return out;
}

std::vector<Vec> fundamental_coweights(const RootSystem& rs) {
  if (!rs.dtype.simply_laced()) throw Error(Err::UnsupportedType, "coweights need an ADE type");
  auto inv = coweights_in_roots(rs);
  std::vector<Vec> out;
  for (int j = 0; j < rs.rank(); ++j) {
    Vec v(rs.ambient_dim, Scalar(0));
    for (int k = 0; k < rs.rank(); ++k)
      if (sgn(inv[j][k]) != 0)
        for (int m = 0; m < rs.ambient_dim; ++m) v[m] += Scalar(inv[j][k]) * rs.simple_roots[k][m];
    out.push_back(v);
  }
  return out;
}

int e6_label_to_bourbaki(int label) {
  static const int map[7] = {0, 1, 6, 2, 3, 5, 4};
  if (label < 1 || label > 6) throw Error(Err::UnsupportedLabel, "E6 labels are 1..6");
  return map[label];
}

std::string root_label(const std::vector<int>& coeffs) {
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i]) continue;
    if (!s.empty()) s += "+";
    if (coeffs[i] != 1) s += std::to_string(coeffs[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace swb
