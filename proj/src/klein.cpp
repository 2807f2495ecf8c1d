#include "singwb/klein.hpp"

#include "singwb/error.hpp"

namespace swb {

namespace {

Mat2 m2(Scalar a, Scalar b, Scalar c, Scalar d) { return {{a, b}, {c, d}}; }
Mat2 diag2(const Scalar& a, const Scalar& b) { return m2(a, 0, 0, b); }

Matrix diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  return {{a, 0, 0}, {0, b, 0}, {0, 0, c}};
}

Mat2 flip_h() { return m2(0, Scalar::i(), Scalar::i(), 0); }

bool is_identity(const Matrix& m) { return mat_equal(m, identity_matrix(m.size())); }

}  // namespace

bool mat_equal(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

size_t SU2Group::expected_order() const {
  if (label == "T") return 24;
  if (label == "O") return 48;
  if (label == "I") return 120;
  int n = std::stoi(label.substr(1));
  return label[0] == 'C' ? size_t(n) : size_t(4 * n);
}

SU2Group cyclic_group(int n) {
  SU2Group g;
  g.label = "C" + std::to_string(n);
  g.generators = {diag2(Scalar::zeta(n), Scalar::zeta(n, -1))};
  g.generator_names = {"g"};
  return g;
}

SU2Group binary_dihedral_group(int n) {
  SU2Group g;
  g.label = "D" + std::to_string(n);
  g.generators = {diag2(Scalar::zeta(2 * n), Scalar::zeta(2 * n, -1)), flip_h()};
  g.generator_names = {"g", "h"};
  return g;
}

SU2Group tetrahedral_group() {
  Scalar i = Scalar::i(), half = Scalar::frac(1, 2);
  SU2Group g;
  g.label = "T";
  g.generators = {diag2(i, -i), m2(0, 1, -1, 0),
                  m2(half * (1 + i), half * (1 + i), half * (i - 1), half * (1 - i))};
  g.generator_names = {"a", "b", "c"};
  return g;
}

SU2Group octahedral_group() {
  SU2Group g = tetrahedral_group();
  g.label = "O";
  g.generators.push_back(diag2(Scalar::zeta(8, 3), Scalar::zeta(8, 5)));
  g.generator_names.push_back("g");
  return g;
}

SU2Group icosahedral_group() {
  auto e = [](long k) { return Scalar::zeta(5, k); };
  Scalar s5 = e(1) - e(2) - e(3) + e(4);  // sqrt(5)
  SU2Group g;
  g.label = "I";
  g.generators = {diag2(e(3), e(2)),
                  m2(-(e(1) - e(4)) / s5, (e(2) - e(3)) / s5, (e(2) - e(3)) / s5,
                     (e(1) - e(4)) / s5)};
  g.generator_names = {"s", "t"};
  return g;
}

const std::vector<Mat2>& enumerate_group(const SU2Group& g, size_t cap) {
  if (g.elements) return *g.elements;
  for (const auto& m : g.generators) {
    Scalar det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (!det.is_one()) throw Error(Err::InvalidAutomorphism, "generator not in SU2");
  }
  std::vector<Mat2> elems = {identity_matrix(2)};
  for (size_t k = 0; k < elems.size(); ++k) {
    for (const auto& gen : g.generators) {
      Mat2 p = mat_mul(elems[k], gen);
      bool seen = false;
      for (const auto& e : elems)
        if (mat_equal(e, p)) {
          seen = true;
          break;
        }
      if (seen) continue;
      elems.push_back(std::move(p));
      if (elems.size() > cap)
        throw Error(Err::ClosureBudgetExceeded,
                    "group " + g.label + " exceeds " + std::to_string(cap) + " elements");
    }
  }
  g.elements = std::move(elems);
  return *g.elements;
}

bool group_contains(const SU2Group& g, const Mat2& m) {
  for (const auto& e : enumerate_group(g))
    if (mat_equal(e, m)) return true;
  return false;
}

MPoly act(const Mat2& gamma, const MPoly& p) {
  const Vars& v = p.vars();
  MPoly z1 = MPoly::var(v, "z1"), z2 = MPoly::var(v, "z2");
  return p.substitute({{"z1", z1 * gamma[0][0] + z2 * gamma[1][0]},
                       {"z2", z1 * gamma[0][1] + z2 * gamma[1][1]}},
                      v);
}

KleinData klein_data(const DynkinType& t, const std::string& omega_in) {
  validate_type(t);
  KleinData kd;
  kd.gamma_type = t;
  kd.zring = make_vars({"z1", "z2"});
  kd.xring = make_vars({"X", "Y", "Z"});
  Ring Zr(kd.zring), Xr(kd.xring);
  MPoly z1 = Zr("z1"), z2 = Zr("z2");
  MPoly X = Xr("X"), Y = Xr("Y"), Z = Xr("Z");
  Scalar i = Scalar::i();
  std::string omega = omega_in;
  if (omega.empty()) omega = t == DynkinType{'D', 4} ? "s3" : "z2";
  kd.omega = omega;
  auto unsupported_omega = [&] {
    throw Error(Err::InvalidAutomorphism, "omega " + omega + " not available for " + t.str());
  };

  if (t.family == 'A') {
    if (omega != "z2") unsupported_omega();
    int n = t.rank;
    if (n % 2 == 1) {
      int r = (n + 1) / 2;
      kd.X = {"X", 1, z1 * z2};
      kd.Y = {"Y", 1, z1.pow(2 * r)};
      kd.Z = {"Z", 1, z2.pow(2 * r)};
      kd.relation = X.pow(2 * r) - Y * Z;
      kd.gamma = cyclic_group(2 * r);
      kd.gamma_prime = binary_dihedral_group(r);
      Scalar sg = r % 2 ? -1 : 1;
      kd.omega_action = {
          {"g^2", kd.gamma_prime.generators[0], identity_matrix(3)},
          {"h", flip_h(), {{-1, 0, 0}, {0, 0, sg}, {0, sg, 0}}}};
    } else {
      int r = n / 2;
      kd.X = {"X", 1, z1 * z2};
      kd.Y = {"Y", 1, z1.pow(2 * r + 1)};
      kd.Z = {"Z", 1, z2.pow(2 * r + 1)};
      kd.relation = X.pow(2 * r + 1) - Y * Z;
      kd.gamma = cyclic_group(2 * r + 1);
      kd.gamma_prime = cyclic_group(4 * r + 2);
      kd.omega_action = {{"g", kd.gamma_prime.generators[0], diag3(1, -1, -1)}};
      kd.valid_gamma_prime = false;
      kd.note = "no valid Gamma': the C_" + std::to_string(4 * r + 2) +
                " action fails to lift correctly";
    }
    return kd;
  }

  if (t.family == 'D' && omega == "z2") {
    int r = t.rank - 1;
    // u = 2^{1/r}: 4^{1/r} = u^2, 4^{-1/(2r)} = 1/u
    Scalar u = r % 2 ? Scalar::radical(r, Cyclo(2)) : Scalar::radical(r / 2, Cyclo::sqrt_int(2));
    int m = 2 * (r - 1);
    Scalar sY = r % 2 ? 1 : -1;  // (-1)^{r+1}
    kd.X = {"X", u * u, (z1 * z2).pow(2)};
    kd.Y = {"Y", Scalar(1) / u, z1.pow(m) + z2.pow(m) * sY};
    kd.Z = {"Z", i, z1 * z2 * (z1.pow(m) - z2.pow(m) * sY)};
    kd.relation = X * (Y * Y - X.pow(r - 1) * sY) + Z * Z;
    kd.gamma = binary_dihedral_group(r - 1);
    kd.gamma_prime = binary_dihedral_group(2 * (r - 1));
    kd.omega_action = {{"g", kd.gamma_prime.generators[0], diag3(1, -1, -1)},
                       {"h", flip_h(), identity_matrix(3)}};
    return kd;
  }

  if (t == DynkinType{'D', 4}) {
    if (omega != "s3" && omega != "z3") unsupported_omega();
    Scalar u = Scalar::radical(3, Cyclo(2));  // u^3 = 2
    kd.X = {"X", u * u, (z1 * z2).pow(2)};
    kd.Y = {"Y", u * u / 2, z1.pow(4) + z2.pow(4)};
    kd.Z = {"Z", i, z1 * z2 * (z1.pow(4) - z2.pow(4))};
    kd.relation = X * (Y * Y - X * X) + Z * Z;
    kd.gamma = binary_dihedral_group(2);
    auto e = [](long k) { return Scalar::zeta(8, k); };
    Scalar rt = Scalar(1) / Scalar::sqrt(2);
    Mat2 g = m2(rt * e(1), rt * e(3), rt * e(1), rt * e(7));
    Mat2 h = diag2(e(3), e(5));
    Matrix gx = {{Scalar::frac(-1, 2), Scalar::frac(1, 2), 0},
                 {Scalar::frac(-3, 2), Scalar::frac(-1, 2), 0},
                 {0, 0, 1}};
    kd.gamma_prime = kd.gamma;
    kd.gamma_prime.generators.push_back(g);
    kd.gamma_prime.generator_names.push_back("g");
    kd.omega_action = {{"g", g, gx}};
    if (omega == "s3") {
      kd.gamma_prime.label = "O";
      kd.gamma_prime.generators.push_back(h);
      kd.gamma_prime.generator_names.push_back("h");
      kd.omega_action.push_back({"h", h, diag3(1, -1, -1)});
    } else {
      kd.gamma_prime.label = "T";
    }
    return kd;
  }

  if (t == DynkinType{'E', 6}) {
    if (omega != "z2") unsupported_omega();
    Scalar u = Scalar::radical(2, Cyclo(6) * Cyclo::sqrt_int(3));  // u = 108^{1/4}
    MPoly a = z1.pow(4), b = z2.pow(4), p = (z1 * z2).pow(4);
    kd.X = {"X", u, z1 * z2 * (a - b)};
    kd.Y = {"Y", Scalar::zeta(6), a * a + b * b + p * 14};
    kd.Z = {"Z", 1, (a + b).pow(3) - p * (a + b) * 36};
    kd.relation = X.pow(4) + Y.pow(3) + Z * Z;
    kd.gamma = tetrahedral_group();
    kd.gamma_prime = octahedral_group();
    kd.omega_action = {{"g", kd.gamma_prime.generators.back(), diag3(-1, 1, -1)}};
    return kd;
  }

  throw Error(Err::UnsupportedType, "no Klein data with a folding for " + t.str());
}

Report verify_invariance(const KleinData& kd) {
  Report rep;
  const Invariant* inv[3] = {&kd.X, &kd.Y, &kd.Z};
  for (size_t g = 0; g < kd.gamma.generators.size(); ++g) {
    const auto& gamma = kd.gamma.generators[g];
    std::string gname = kd.gamma.label + "." + kd.gamma.generator_names[g];
    for (const Invariant* p : inv) {
      MPoly img = act(gamma, p->core);
      json w = nullptr;
      bool ok = img == p->core;
      if (!ok) w = {{"generator", gname}, {"polynomial", p->name}, {"image", img.str()}};
      rep.add("invariance." + gname + "." + p->name, ok, w);
    }
  }
  MPoly rel = kd.relation.substitute(
      {{"X", kd.X.full()}, {"Y", kd.Y.full()}, {"Z", kd.Z.full()}}, kd.zring);
  json w = nullptr;
  if (!rel.is_zero()) w = {{"residual", rel.str()}};
  rep.add("relation", rel.is_zero(), w);
  size_t order = enumerate_group(kd.gamma).size();
  rep.add("order." + kd.gamma.label, order == kd.gamma.expected_order(),
          json{{"order", order}, {"expected", kd.gamma.expected_order()}});
  return rep;
}

Report verify_omega_action(const KleinData& kd) {
  Report rep;
  const Invariant* inv[3] = {&kd.X, &kd.Y, &kd.Z};
  for (const auto& oa : kd.omega_action) {
    for (int k = 0; k < 3; ++k) {
      MPoly img = act(oa.gamma, inv[k]->full());
      MPoly expect(kd.zring);
      for (int j = 0; j < 3; ++j)
        if (!oa.on_xyz[k][j].is_zero()) expect += inv[j]->full() * oa.on_xyz[k][j];
      json w = nullptr;
      bool ok = img == expect;
      if (!ok) w = {{"generator", oa.generator}, {"polynomial", inv[k]->name}, {"image", img.str()}};
      rep.add("omega." + oa.generator + "." + inv[k]->name, ok, w);
    }
    // Order of the coset in Gamma'/Gamma against the order of the action matrix.
    int coset = 0, mat = 0;
    Mat2 p = oa.gamma;
    for (int k = 1; k <= 48 && !coset; ++k) {
      if (group_contains(kd.gamma, p)) coset = k;
      p = mat_mul(p, oa.gamma);
    }
    Matrix q = oa.on_xyz;
    for (int k = 1; k <= 48 && !mat; ++k) {
      if (is_identity(q)) mat = k;
      q = mat_mul(q, oa.on_xyz);
    }
    rep.add("omega." + oa.generator + ".order", coset == mat && coset > 0,
            json{{"coset", coset}, {"matrix", mat}});
  }
  if (!kd.valid_gamma_prime) rep.skip("omega.lift", json{{"note", kd.note}});
  return rep;
}

}  // namespace swb
