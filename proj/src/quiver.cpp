#include "singwb/quiver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "singwb/error.hpp"

namespace swb {

namespace {

using Edge = std::pair<int, int>;  // positive arrow u -> v

void add_pair(McKayQuiver& q, const std::string& stem, int u, int v) {
  int k = static_cast<int>(q.arrows.size());
  q.arrows.push_back({stem + "a", u, v, 1, k + 1});
  q.arrows.push_back({stem + "b", v, u, -1, k});
}

PMat pmul(const PMat& A, const PMat& B) {
  if (A.cols != B.rows) throw Error(Err::ShapeMismatch, "matrix product shape");
  PMat C{A.rows, B.cols, {}};
  const Vars& v = A.e.empty() ? B.e.front().vars() : A.e.front().vars();
  C.e.assign(A.rows * B.cols, MPoly(v));
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < B.cols; ++j)
      for (size_t k = 0; k < A.cols; ++k) C.at(i, j) += A.at(i, k) * B.at(k, j);
  return C;
}

CMat cmul(const CMat& A, const CMat& B) {
  CMat C{A.rows, B.cols, std::vector<ComplexF>(A.rows * B.cols)};
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < B.cols; ++j)
      for (size_t k = 0; k < A.cols; ++k) C.at(i, j) += A.at(i, k) * B.at(k, j);
  return C;
}

ComplexF ctrace(const CMat& A) {
  ComplexF t = 0;
  for (size_t i = 0; i < A.rows; ++i) t += A.at(i, i);
  return t;
}

ComplexF annulus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rad(0.5, 2.0), ang(0.0, 2 * M_PI);
  return std::polar(rad(rng), ang(rng));
}

std::string pname(const char* stem, int i) { return std::string(stem) + std::to_string(i); }

Scalar param(const std::map<std::string, Scalar>& p, const std::string& k, const Scalar& dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

void swap_arrows(const McKayQuiver& q, OmegaActionOnM& act, int i, int j) {
  // new phi_i = (lambda_j phi_j^a, delta_j phi_j^b)
  int ia = q.arrow_index("f" + std::to_string(i) + "a"), ib = ia + 1;
  int ja = q.arrow_index("f" + std::to_string(j) + "a"), jb = ja + 1;
  act.source[ia] = ja;
  act.source[ib] = jb;
  act.coeff[ia] = param(act.params, pname("lambda", j), 1);
  act.coeff[ib] = param(act.params, pname("delta", j), 1);
}

}  // namespace

int McKayQuiver::arrow_index(const std::string& name) const {
  for (size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].name == name) return static_cast<int>(k);
  throw Error(Err::ShapeMismatch, "no arrow " + name);
}

McKayQuiver build_mckay_quiver(const DynkinType& t) {
  validate_type(t);
  McKayQuiver q;
  q.base_type = t;
  q.dims = mckay_dimension_vector(t);
  int n = t.rank;
  if (t.family == 'A') {
    int m = n + 1;
    for (int i = 0; i < m; ++i) q.arrows.push_back({pname("a", i), i, (i + 1) % m, 1, 0});
    for (int i = 0; i < m; ++i) q.arrows.push_back({pname("b", i), (i + 1) % m, i, -1, 0});
    for (int i = 0; i < m; ++i) {
      q.arrows[i].bar = m + i;
      q.arrows[m + i].bar = i;
    }
    q.full_support = n % 2 == 1;
    return q;
  }
  if (t.family == 'D') {
    // leaves 0, 1 on vertex 2; leaves n-1, n on vertex n-2; chain 2..n-2
    add_pair(q, "f0", 0, 2);
    add_pair(q, "f1", 1, 2);
    for (int j = 2; j < n - 2; ++j) add_pair(q, pname("f", j), j, j + 1);
    add_pair(q, pname("f", n - 1), n - 1, n - 2);
    add_pair(q, pname("f", n), n, n - 2);
    q.full_support = n == 4;
    return q;
  }
  if (t == DynkinType{'E', 6}) {
    // arms 0-3-6, 2-5-6, 1-4-6, phi^a pointing to the centre
    for (auto [u, v] : std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}})
      add_pair(q, pname("f", u), u, v);
    q.full_support = true;
    return q;
  }
  if (t.family == 'E') {
    std::vector<Edge> edges =
        n == 7 ? std::vector<Edge>{{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}
               : std::vector<Edge>{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}};
    for (auto [u, v] : edges) add_pair(q, "e" + std::to_string(u) + std::to_string(v), u, v);
    return q;
  }
  throw Error(Err::UnsupportedType, "McKay quiver needs a simply laced type, got " + t.str());
}

std::vector<std::string> rep_symbol_names(const McKayQuiver& q, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& a : q.arrows)
    for (int i = 0; i < q.dims[a.target]; ++i)
      for (int j = 0; j < q.dims[a.source]; ++j)
        out.push_back(prefix + a.name + "_" + std::to_string(i) + std::to_string(j));
  return out;
}

SymbolicRep symbolic_rep(const McKayQuiver& q, const std::string& prefix, const Vars& ring) {
  SymbolicRep rep;
  for (const auto& a : q.arrows) {
    PMat m{size_t(q.dims[a.target]), size_t(q.dims[a.source]), {}};
    for (size_t i = 0; i < m.rows; ++i)
      for (size_t j = 0; j < m.cols; ++j)
        m.e.push_back(MPoly::var(ring, prefix + a.name + "_" + std::to_string(i) + std::to_string(j)));
    rep.push_back(std::move(m));
  }
  return rep;
}

MPoly symplectic_form(const McKayQuiver& q, const SymbolicRep& phi, const SymbolicRep& psi) {
  if (phi.size() != q.arrows.size() || psi.size() != q.arrows.size())
    throw Error(Err::ShapeMismatch, "representation does not match the quiver");
  MPoly acc(phi.front().e.front().vars());
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const auto& a = q.arrows[k];
    const PMat& A = phi[k];
    const PMat& B = psi[a.bar];
    if (A.rows != B.cols || A.cols != B.rows) throw Error(Err::ShapeMismatch, "arrow " + a.name);
    MPoly tr(acc.vars());
    for (size_t i = 0; i < A.rows; ++i)
      for (size_t j = 0; j < A.cols; ++j) tr += A.at(i, j) * B.at(j, i);
    acc += tr * Scalar(a.eps);
  }
  return acc;
}

std::vector<PMat> moment_map(const McKayQuiver& q, const SymbolicRep& phi) {
  if (phi.size() != q.arrows.size()) throw Error(Err::ShapeMismatch, "representation size");
  const Vars& v = phi.front().e.front().vars();
  std::vector<PMat> mu;
  for (int d : q.dims) mu.push_back({size_t(d), size_t(d), std::vector<MPoly>(d * d, MPoly(v))});
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const auto& a = q.arrows[k];
    PMat p = pmul(phi[k], phi[a.bar]);
    PMat& m = mu[a.target];
    for (size_t i = 0; i < p.e.size(); ++i) m.e[i] += p.e[i] * Scalar(a.eps);
  }
  return mu;
}

OrientationBehavior orientation_behavior(const McKayQuiver& q, const OmegaActionOnM& a) {
  bool same = true, opposite = true;
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    int e1 = q.arrows[k].eps, e2 = q.arrows[a.source[k]].eps;
    if (e1 == e2) opposite = false;
    else same = false;
  }
  if (same) return OrientationBehavior::Preserves;
  if (opposite) return OrientationBehavior::Reverses;
  return OrientationBehavior::Mixed;
}

OmegaActionOnM identity_action(const McKayQuiver& q) {
  OmegaActionOnM a;
  a.generator = "id";
  for (size_t i = 0; i < q.dims.size(); ++i) a.vertex_perm.push_back(int(i));
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    a.source.push_back(int(k));
    a.coeff.push_back(1);
  }
  return a;
}

OmegaActionOnM make_action(const McKayQuiver& q, const std::string& generator,
                           const std::map<std::string, Scalar>& params, bool s3) {
  if (!q.full_support && !(q.base_type.family == 'D'))
    throw Error(Err::UnsupportedType, "no reference action on " + q.base_type.str());
  OmegaActionOnM act = identity_action(q);
  act.generator = generator;
  act.params = params;
  const DynkinType& t = q.base_type;
  auto& perm = act.vertex_perm;

  if (t.family == 'A') {
    if (t.rank % 2 == 0 || generator != "sigma")
      throw Error(Err::InvalidAutomorphism, "A_{2r-1} admits only sigma");
    int m = t.rank + 1, r = m / 2;
    act.folded = "B";
    for (int i = 0; i < m; ++i) {
      perm[i] = (m - i) % m;
      Scalar lam = param(params, pname("lambda", i), i < r ? -1 : 1);
      Scalar del = param(params, pname("delta", i), i < r ? 1 : -1);
      act.params[pname("lambda", i)] = lam;
      act.params[pname("delta", i)] = del;
      act.source[i] = m + (m - 1 - i);
      act.coeff[i] = lam;
      act.source[m + i] = m - 1 - i;
      act.coeff[m + i] = del;
    }
    return act;
  }

  if (t.family == 'D') {
    int n = t.rank;
    auto set_defaults = [&](std::initializer_list<const char*> stems, std::initializer_list<int> idx) {
      for (const char* s : stems)
        for (int i : idx)
          if (!act.params.count(pname(s, i))) act.params[pname(s, i)] = 1;
    };
    if (!s3) {
      if (generator != "sigma") throw Error(Err::InvalidAutomorphism, "D_{r+1} admits only sigma");
      int r = n - 1;
      act.folded = "C";
      set_defaults({"lambda", "delta"}, {r, r + 1});
      std::swap(perm[r], perm[r + 1]);
      swap_arrows(q, act, r, r + 1);
      swap_arrows(q, act, r + 1, r);
      return act;
    }
    if (n != 4) throw Error(Err::InvalidAutomorphism, "S3 acts only on D4");
    act.folded = "G";
    if (generator == "rho") {
      set_defaults({"lambda", "delta"}, {1, 3, 4});
      perm[1] = 3;
      perm[3] = 4;
      perm[4] = 1;
      swap_arrows(q, act, 1, 3);
      swap_arrows(q, act, 3, 4);
      swap_arrows(q, act, 4, 1);
      return act;
    }
    if (generator == "sigma") {
      set_defaults({"alpha", "beta"}, {3, 4});
      std::swap(perm[3], perm[4]);
      for (auto [i, j] : {std::pair{3, 4}, std::pair{4, 3}}) {
        int ia = q.arrow_index(pname("f", i) + "a"), ja = q.arrow_index(pname("f", j) + "a");
        act.source[ia] = ja;
        act.source[ia + 1] = ja + 1;
        act.coeff[ia] = act.params[pname("alpha", j)];
        act.coeff[ia + 1] = act.params[pname("beta", j)];
      }
      return act;
    }
    throw Error(Err::InvalidAutomorphism, "unknown generator " + generator);
  }

  if (t == DynkinType{'E', 6}) {
    if (generator != "sigma") throw Error(Err::InvalidAutomorphism, "E6 admits only sigma");
    act.folded = "F";
    for (int i : {1, 2, 4, 5})
      for (const char* s : {"lambda", "delta"})
        if (!act.params.count(pname(s, i))) act.params[pname(s, i)] = 1;
    std::swap(perm[1], perm[2]);
    std::swap(perm[4], perm[5]);
    swap_arrows(q, act, 1, 2);
    swap_arrows(q, act, 2, 1);
    swap_arrows(q, act, 4, 5);
    swap_arrows(q, act, 5, 4);
    return act;
  }
  throw Error(Err::UnsupportedType, "no reference action on " + t.str());
}

SymbolicRep apply_action(const McKayQuiver& q, const OmegaActionOnM& a, const SymbolicRep& phi) {
  SymbolicRep out(q.arrows.size());
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    out[k] = phi[a.source[k]];
    for (auto& e : out[k].e) e *= a.coeff[k];
    if (out[k].rows != phi[k].rows || out[k].cols != phi[k].cols)
      throw Error(Err::ShapeMismatch, "action does not respect the dimension vector");
  }
  return out;
}

int action_order(const McKayQuiver& q, const OmegaActionOnM& a) {
  std::vector<int> src = a.source;
  std::vector<Scalar> c = a.coeff;
  for (int k = 1; k <= 12; ++k) {
    bool id = true;
    for (size_t i = 0; i < src.size() && id; ++i)
      if (src[i] != int(i) || !c[i].is_one()) id = false;
    if (id) return k;
    std::vector<int> ns(src.size());
    std::vector<Scalar> nc(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
      ns[i] = src[a.source[i]];
      nc[i] = a.coeff[i] * c[a.source[i]];
    }
    src = std::move(ns);
    c = std::move(nc);
  }
  (void)q;
  return 0;
}

Report check_action_admissible(const McKayQuiver& q, const OmegaActionOnM& a) {
  Report rep;
  auto P = [&](const std::string& stem, int i) { return param(a.params, pname(stem.c_str(), i), 1); };
  auto eps_leaf = [&](int i) { return q.arrows[q.arrow_index(pname("f", i) + "a")].eps; };
  auto prod_is = [&](const std::string& name, const Scalar& v, const Scalar& want) {
    rep.add(name, v == want, json{{"value", v.str()}, {"expected", want.str()}});
  };
  OrientationBehavior ob = orientation_behavior(q, a);
  int expected_order = 2;

  if (a.folded == "B") {
    int m = int(q.dims.size()), r = m / 2;
    Scalar pl = 1, pd = 1, sign = r % 2 ? -1 : 1;
    for (int i = 0; i < m; ++i) {
      Scalar ld = P("lambda", i) * P("delta", i);
      prod_is("table8.lambda" + std::to_string(i) + "delta" + std::to_string(i), ld, -1);
      int e = q.arrows[i].eps * q.arrows[m + (m - 1 - i)].eps;
      prod_is("table9.eps_a" + std::to_string(i) + "eps_b" + std::to_string(m - 1 - i), ld, e);
      pl *= P("lambda", i);
      pd *= P("delta", i);
    }
    prod_is("table8.prod_lambda", pl, sign);
    prod_is("table8.prod_delta", pd, sign);
    rep.add("orientation.reverses", ob == OrientationBehavior::Reverses);
  } else if (a.folded == "C") {
    int r = q.base_type.rank - 1;
    Scalar l0 = P("lambda", r) * P("delta", r), l1 = P("lambda", r + 1) * P("delta", r + 1);
    prod_is("table8.lambda" + std::to_string(r) + "delta" + std::to_string(r), l0, 1);
    prod_is("table8.lambda" + std::to_string(r + 1) + "delta" + std::to_string(r + 1), l1, 1);
    Scalar e = eps_leaf(r) * eps_leaf(r + 1);
    prod_is("table9.first", l0, e);
    prod_is("table9.second", l1, e);
    rep.add("orientation.preserves", ob == OrientationBehavior::Preserves);
  } else if (a.folded == "F") {
    Scalar l1 = P("lambda", 1) * P("delta", 1), l2 = P("lambda", 2) * P("delta", 2);
    Scalar l4 = P("lambda", 4) * P("delta", 4), l5 = P("lambda", 5) * P("delta", 5);
    prod_is("table8.lambda4delta4", l4, 1);
    rep.add("table8.lambda5delta5", l5 == 1 || l5 == -1, json{{"value", l5.str()}});
    Scalar e12 = eps_leaf(1) * eps_leaf(2), e45 = eps_leaf(4) * eps_leaf(5);
    prod_is("table9.lambda1delta1", l1, e12);
    prod_is("table9.lambda2delta2", l2, e12);
    prod_is("table9.lambda4delta4", l4, e45);
    prod_is("table9.lambda5delta5", l5, e45);
    rep.add("orientation.preserves", ob == OrientationBehavior::Preserves);
  } else if (a.folded == "G") {
    if (a.generator == "rho") {
      expected_order = 3;
      for (int i : {1, 3, 4})
        prod_is("table8.lambda" + std::to_string(i) + "delta" + std::to_string(i),
                P("lambda", i) * P("delta", i), 1);
      prod_is("table9.lambda1delta1", P("lambda", 1) * P("delta", 1), eps_leaf(1) * eps_leaf(4));
      prod_is("table9.lambda3delta3", P("lambda", 3) * P("delta", 3), eps_leaf(1) * eps_leaf(3));
      prod_is("table9.lambda4delta4", P("lambda", 4) * P("delta", 4), eps_leaf(3) * eps_leaf(4));
    } else {
      prod_is("table8.alpha3beta3", P("alpha", 3) * P("beta", 3), -1);
      prod_is("table8.alpha4beta4", P("alpha", 4) * P("beta", 4), -1);
    }
    rep.add("orientation.preserves", ob == OrientationBehavior::Preserves);
  } else {
    rep.add("known_folding", false, json{{"folded", a.folded}});
  }
  int ord = action_order(q, a);
  rep.add("group_relation", ord == expected_order,
          json{{"order", ord}, {"expected", expected_order}});
  return rep;
}

bool verify_symplectic_action(const McKayQuiver& q, const OmegaActionOnM& a) {
  auto names = rep_symbol_names(q, "p");
  auto more = rep_symbol_names(q, "s");
  names.insert(names.end(), more.begin(), more.end());
  Vars ring = make_vars(names);
  SymbolicRep phi = symbolic_rep(q, "p", ring), psi = symbolic_rep(q, "s", ring);
  MPoly before = symplectic_form(q, phi, psi);
  MPoly after = symplectic_form(q, apply_action(q, a, phi), apply_action(q, a, psi));
  return before == after;
}

std::vector<CMat> moment_map_numeric(const McKayQuiver& q, const NumRep& phi) {
  std::vector<CMat> mu;
  for (int d : q.dims) mu.push_back({size_t(d), size_t(d), std::vector<ComplexF>(d * d)});
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const auto& a = q.arrows[k];
    CMat p = cmul(phi[k], phi[a.bar]);
    for (size_t i = 0; i < p.e.size(); ++i) mu[a.target].e[i] += double(a.eps) * p.e[i];
  }
  return mu;
}

NumRep apply_action_numeric(const McKayQuiver& q, const OmegaActionOnM& a, const NumRep& phi) {
  NumRep out(q.arrows.size());
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    out[k] = phi[a.source[k]];
    ComplexF c = a.coeff[k].embed();
    for (auto& e : out[k].e) e *= c;
  }
  return out;
}

NumRep random_rep(const McKayQuiver& q, uint64_t seed) {
  std::mt19937_64 rng(seed);
  NumRep rep;
  for (const auto& a : q.arrows) {
    CMat m{size_t(q.dims[a.target]), size_t(q.dims[a.source]), {}};
    for (size_t i = 0; i < m.rows * m.cols; ++i) m.e.push_back(annulus(rng));
    rep.push_back(std::move(m));
  }
  return rep;
}

double moment_residual(const McKayQuiver& q, const NumRep& phi, const std::vector<ComplexF>& mu) {
  auto m = moment_map_numeric(q, phi);
  double worst = 0;
  for (size_t v = 0; v < m.size(); ++v)
    for (size_t i = 0; i < m[v].rows; ++i)
      for (size_t j = 0; j < m[v].cols; ++j)
        worst = std::max(worst, std::abs(m[v].at(i, j) - (i == j ? mu[v] : ComplexF(0))));
  return worst;
}

namespace {

void check_central(const McKayQuiver& q, const std::vector<ComplexF>& mu) {
  if (mu.size() != q.dims.size())
    throw Error(Err::DimensionMismatch, "central value needs one entry per vertex");
  ComplexF s = 0;
  double scale = 1;
  for (size_t i = 0; i < mu.size(); ++i) {
    s += double(q.dims[i]) * mu[i];
    scale = std::max(scale, std::abs(mu[i]));
  }
  if (std::abs(s) > 1e-12 * scale)
    throw Error(Err::DimensionMismatch, "central value must satisfy sum d_i mu_i = 0");
}

}  // namespace

NumRep sample_moment_fibre(const McKayQuiver& q, const std::vector<ComplexF>& mu, uint64_t seed) {
  check_central(q, mu);
  std::mt19937_64 rng(seed);
  const DynkinType& t = q.base_type;
  if (t.family == 'A' && t.rank % 2 == 1) {
    int m = t.rank + 1;
    std::vector<ComplexF> c(m);
    c[0] = annulus(rng);
    for (int i = 1; i < m; ++i) c[i] = c[i - 1] - mu[i];
    NumRep rep(2 * m);
    for (int i = 0; i < m; ++i) {
      ComplexF a = annulus(rng);
      rep[i] = {1, 1, {a}};
      rep[m + i] = {1, 1, {c[i] / a}};
    }
    return rep;
  }
  if (t == DynkinType{'D', 4}) {
    const int leaves[4] = {0, 1, 3, 4};
    for (int attempt = 0; attempt < 10; ++attempt) {
      NumRep rep(q.arrows.size());
      Eigen::Matrix<std::complex<double>, 8, 8> M = Eigen::Matrix<std::complex<double>, 8, 8>::Zero();
      Eigen::Matrix<std::complex<double>, 8, 1> rhs;
      std::vector<std::array<ComplexF, 2>> col(4);
      for (int l = 0; l < 4; ++l) col[l] = {annulus(rng), annulus(rng)};
      // unknowns: row of phi_l^b at 2l, 2l+1
      for (int l = 0; l < 4; ++l) {
        M(l, 2 * l) = col[l][0];
        M(l, 2 * l + 1) = col[l][1];
        rhs(l) = -mu[leaves[l]];
      }
      for (int r = 0; r < 2; ++r)
        for (int cc = 0; cc < 2; ++cc) {
          int eq = 4 + 2 * r + cc;
          for (int l = 0; l < 4; ++l) M(eq, 2 * l + cc) = col[l][r];
          rhs(eq) = r == cc ? mu[2] : ComplexF(0);
        }
      Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<std::complex<double>, 8, 8>> cod(M);
      Eigen::Matrix<std::complex<double>, 8, 1> x = cod.solve(rhs);
      for (int l = 0; l < 4; ++l) {
        int ia = q.arrow_index(pname("f", leaves[l]) + "a");
        rep[ia] = {2, 1, {col[l][0], col[l][1]}};
        rep[ia + 1] = {1, 2, {x(2 * l), x(2 * l + 1)}};
      }
      if (moment_residual(q, rep, mu) <= 1e-10) return rep;
    }
    throw Error(Err::SingularSystem, "no consistent D4 draw after 10 attempts");
  }
  throw Error(Err::UnsupportedType, "fibre sampling covers A_{2r-1} and D4 only");
}

ComplexF d4_cycle_trace(const NumRep& phi, const McKayQuiver& q, const std::vector<int>& vs) {
  CMat acc{2, 2, {1, 0, 0, 1}};
  for (int v : vs) {
    int ia = q.arrow_index(pname("f", v) + "a");
    acc = cmul(acc, cmul(phi[ia], phi[ia + 1]));
  }
  return ctrace(acc);
}

ComplexF d4_p(const NumRep& phi, const McKayQuiver& q, int i, int j) {
  return d4_cycle_trace(phi, q, {i, j});
}

ComplexF d4_q034(const NumRep& phi, const McKayQuiver& q) { return d4_cycle_trace(phi, q, {0, 4, 3}); }

Invariants3 invariants_at_point(const McKayQuiver& q, const NumRep& phi,
                                const std::vector<ComplexF>& mu) {
  const DynkinType& t = q.base_type;
  if (t.family == 'A' && t.rank % 2 == 1) {
    int m = t.rank + 1;
    Invariants3 out{1, 1, 0};
    for (int i = 0; i < m; ++i) {
      out.x *= phi[i].e[0];
      out.y *= phi[m + i].e[0];
      out.z += phi[i].e[0] * phi[m + i].e[0];
    }
    out.z /= double(m);
    return out;
  }
  if (t == DynkinType{'D', 4}) {
    ComplexF p03 = d4_p(phi, q, 0, 3), p34 = d4_p(phi, q, 3, 4), q034 = d4_q034(phi, q);
    ComplexF C = mu[3] * (mu[2] + mu[3]) * (mu[1] + mu[2] + mu[3]);
    Invariants3 out;
    out.x = p34 + 0.25 * (mu[3] - mu[4]) * (mu[3] - mu[4]);
    out.y = p03 + 0.25 * (mu[3] - mu[0]) * (mu[3] - mu[0]);
    out.z = q034 - 0.5 * (p03 * (mu[3] - mu[4]) + p34 * (mu[3] - mu[0]) + C);
    return out;
  }
  throw Error(Err::UnsupportedType, "invariants are provided for A_{2r-1} and D4");
}

Report verify_moment_equivariance_numeric(const McKayQuiver& q, const OmegaActionOnM& a,
                                          uint64_t seed, int trials) {
  double worst = 0;
  for (int k = 0; k < trials; ++k) {
    NumRep phi = random_rep(q, seed + uint64_t(k));
    auto mu = moment_map_numeric(q, phi);
    auto mu2 = moment_map_numeric(q, apply_action_numeric(q, a, phi));
    for (size_t v = 0; v < mu.size(); ++v) {
      const CMat& want = mu[a.vertex_perm[v]];
      for (size_t i = 0; i < want.e.size(); ++i)
        worst = std::max(worst, std::abs(mu2[v].e[i] - want.e[i]));
    }
  }
  Report rep;
  rep.add("moment_equivariance." + a.generator, worst < 1e-9,
          json{{"trials", trials}, {"max_residual", worst}});
  return rep;
}

}  // namespace swb
