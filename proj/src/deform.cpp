#include "singwb/deform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "singwb/flat.hpp"
#include "singwb/quiver.hpp"

namespace swb {

namespace {

std::string idx(const std::string& p, int i) { return p + std::to_string(i); }

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

DeformationFamily base(const std::string& label, DynkinType src, std::vector<std::string> params) {
  DeformationFamily f;
  f.label = label;
  f.source = src;
  f.ambient = {"x", "y", "z"};
  f.params = std::move(params);
  std::vector<std::string> names = f.ambient;
  names.insert(names.end(), f.params.begin(), f.params.end());
  f.ring = make_vars(names);
  f.equation = MPoly(f.ring);
  return f;
}

// Identity images for every variable not listed.
CoordAction make_action(const DeformationFamily& f, const std::string& gen,
                        std::map<std::string, MPoly> images) {
  CoordAction a{gen, {}};
  for (const auto& n : f.ring->names()) {
    auto it = images.find(n);
    a.images[n] = it == images.end() ? MPoly::var(f.ring, n) : it->second;
  }
  return a;
}

DeformationFamily a_family(int r) {
  int n = 2 * r;
  std::vector<std::string> ps;
  for (int i = 2; i <= n; ++i) ps.push_back(idx("t", i));
  DeformationFamily f = base(idx("A", n - 1), {'A', n - 1}, ps);
  Ring R(f.ring);
  auto eps = epsilon_from_psi(r);
  std::map<std::string, MPoly> psi_to_t;
  for (int i = 2; i <= n; ++i) psi_to_t[idx("psi", i)] = R(idx("t", i));
  MPoly z = R("z");
  MPoly F = z.pow(n) - R("x") * R("y");
  for (int i = 2; i <= n; ++i) {
    MPoly fi = eps[i - 2].substitute(psi_to_t, f.ring);
    F += fi * z.pow(n - i) * Scalar(i % 2 ? -1 : 1);
  }
  f.equation = F;
  Scalar s = r % 2 ? -1 : 1;
  std::map<std::string, MPoly> im{{"x", R("y") * s}, {"y", R("x") * s}, {"z", -z}};
  for (int i = 3; i <= n; i += 2) im[idx("t", i)] = -R(idx("t", i));
  f.omega_action = {make_action(f, "sigma", im)};
  f.relations = {{{"sigma"}, 2}};
  return f;
}

DeformationFamily d4_family() {
  DeformationFamily f = base("D4", {'D', 4}, {"t2", "t4", "t6", "t"});
  Ring R(f.ring);
  MPoly x = R("x"), y = R("y"), z = R("z"), t2 = R("t2"), t4 = R("t4"), t6 = R("t6"), t = R("t");
  MPoly rhs = x * y * (x + y) - t2 * x * y * q(1, 2) - t * y - (t + t4 * q(1, 2)) * x * q(1, 2) +
              (t6 + t2 * t4 * q(1, 6) + t * t2 + t2.pow(3) * q(1, 108)) * q(1, 4);
  f.equation = z * z - rhs;
  MPoly ys = -x - y + t2 * q(1, 2);
  f.omega_action = {
      make_action(f, "sigma", {{"y", ys}, {"z", -z}, {"t", -t}}),
      make_action(f, "rho",
                  {{"x", y}, {"y", ys}, {"t4", t4 * q(-1, 2) + t * 3}, {"t", t4 * q(-1, 4) - t * q(1, 2)}})};
  f.relations = {{{"sigma"}, 2}, {{"rho"}, 3}, {{"sigma", "rho"}, 2}};
  return f;
}

DeformationFamily e6_family() {
  DeformationFamily f = base("E6", {'E', 6}, {"t2", "t5", "t6", "t8", "t9", "t12"});
  Ring R(f.ring);
  MPoly x = R("x"), y = R("y"), z = R("z");
  std::map<std::string, MPoly> psi_to_t;
  for (int d : {2, 5, 6, 8, 9, 12}) psi_to_t[idx("psi", d)] = R(idx("t", d));
  std::map<std::string, MPoly> mono{{"A0", R.c(1)}, {"Ax", x},       {"Ay", y},
                                    {"Ax2", x * x}, {"Axy", x * y}, {"Ax2y", x * x * y}};
  MPoly F = x.pow(4) * q(-1, 4) + y.pow(3) + z * z;
  for (const auto& c : e6_flat_coefficients())
    F += c.poly.substitute(psi_to_t, f.ring) * mono.at(c.name);
  f.equation = F;
  f.omega_action = {make_action(f, "sigma", {{"x", -x}, {"z", -z}, {"t5", -R("t5")}, {"t9", -R("t9")}})};
  f.relations = {{{"sigma"}, 2}};
  return f;
}

DeformationFamily restrict_family(const DeformationFamily& h, const std::string& label,
                                  const std::vector<std::string>& zeroed,
                                  const std::vector<std::string>& keep_gens) {
  std::vector<std::string> ps;
  for (const auto& p : h.params)
    if (std::find(zeroed.begin(), zeroed.end(), p) == zeroed.end()) ps.push_back(p);
  DeformationFamily f = base(label, h.source, ps);
  f.zeroed = zeroed;
  f.parent = h.label;
  f.restricted = true;
  std::map<std::string, Scalar> zero;
  for (const auto& p : zeroed) zero[p] = Scalar(0);
  auto down = [&](const MPoly& p) { return p.substitute_scalars(zero).to_ring(f.ring); };
  f.equation = down(h.equation);
  for (const auto& a : h.omega_action) {
    if (std::find(keep_gens.begin(), keep_gens.end(), a.generator) == keep_gens.end()) continue;
    CoordAction b{a.generator, {}};
    for (const auto& n : f.ring->names()) b.images[n] = down(a.images.at(n));
    f.omega_action.push_back(b);
  }
  for (const auto& rel : h.relations) {
    bool ok = true;
    for (const auto& g : rel.first)
      if (std::find(keep_gens.begin(), keep_gens.end(), g) == keep_gens.end()) ok = false;
    if (ok) f.relations.push_back(rel);
  }
  return f;
}

int parse_rank(const std::string& label) {
  if (label.size() < 2) return -1;
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return -1;
  if (label.size() > 4) return -1;
  return std::stoi(label.substr(1));
}

}  // namespace

const CoordAction& DeformationFamily::action(const std::string& gen) const {
  for (const auto& a : omega_action)
    if (a.generator == gen) return a;
  throw Error(Err::InvalidAutomorphism, "no generator " + gen + " on " + label);
}

MPoly DeformationFamily::special_fibre() const {
  std::map<std::string, Scalar> zero;
  for (const auto& p : params) zero[p] = Scalar(0);
  return equation.substitute_scalars(zero);
}

DeformationFamily family(const std::string& label) {
  int n = parse_rank(label);
  char c = label.empty() ? '?' : label[0];
  if (c == 'A' && n >= 3 && n % 2 == 1 && n <= 15) return a_family((n + 1) / 2);
  if (c == 'B' && n >= 2 && n <= 8) {
    auto h = a_family(n);
    std::vector<std::string> odd;
    for (int i = 3; i < 2 * n; i += 2) odd.push_back(idx("t", i));
    return restrict_family(h, label, odd, {"sigma"});
  }
  if (label == "D4") return d4_family();
  if (label == "C3") return restrict_family(d4_family(), "C3", {"t"}, {"sigma"});
  if (label == "G2") return restrict_family(d4_family(), "G2", {"t4", "t"}, {"sigma", "rho"});
  if (label == "E6") return e6_family();
  if (label == "F4") return restrict_family(e6_family(), "F4", {"t5", "t9"}, {"sigma"});
  throw Error(Err::UnsupportedLabel, "no family for label '" + label + "'");
}

std::vector<std::string> family_labels() {
  return {"A3", "A5", "B2", "B3", "C3", "D4", "E6", "F4", "G2"};
}

DeformationFamily example_family() {
  DeformationFamily f = base("example", {'D', 4}, {"v", "t"});
  Ring R(f.ring);
  MPoly x = R("x"), y = R("y");
  f.equation = R("z").pow(2) - x.pow(3) + x * y * y * 3 + R("t") * (x * x + y * y) - R("v");
  return f;
}

MPoly apply_action(const CoordAction& a, const MPoly& p) { return p.substitute(a.images, p.vars()); }

CoordAction compose(const CoordAction& outer, const CoordAction& inner) {
  // (outer o inner) on coordinates: substitute inner's images into outer's.
  CoordAction c{outer.generator + "*" + inner.generator, {}};
  for (const auto& [n, img] : inner.images) c.images[n] = apply_action(outer, img);
  return c;
}

Report verify_equivariance(const DeformationFamily& f) {
  Report rep;
  for (const auto& a : f.omega_action) {
    MPoly res = apply_action(a, f.equation) - f.equation;
    json w = nullptr;
    if (!res.is_zero()) w = json{{"residual", poly_to_json(res)}};
    rep.add("equivariance." + a.generator, res.is_zero(), w);
  }
  for (const auto& [word, order] : f.relations) {
    CoordAction w = f.action(word.back());
    for (int i = int(word.size()) - 2; i >= 0; --i) w = compose(f.action(word[i]), w);
    std::string name;
    for (const auto& g : word) name += (name.empty() ? "" : "*") + g;
    auto is_identity = [&](const CoordAction& a) {
      for (const auto& [n, img] : a.images)
        if (img != MPoly::var(f.ring, n)) return false;
      return true;
    };
    // w^order is the identity and no smaller power is
    CoordAction p = w;
    bool ok = true;
    for (int k = 1; k < order; ++k) {
      if (is_identity(p)) ok = false;
      p = compose(w, p);
    }
    ok = ok && is_identity(p);
    rep.add("relation.(" + name + ")^" + std::to_string(order), ok);
  }
  if (f.restricted) {
    // The zeroed parameters span a complement of the fixed locus of the
    // parent's linear parameter action.
    DeformationFamily h = family(f.parent);
    size_t np = h.params.size();
    Matrix M;
    for (const auto& a : h.omega_action) {
      bool keep = false;
      for (const auto& b : f.omega_action) keep = keep || b.generator == a.generator;
      if (!keep) continue;
      for (size_t i = 0; i < np; ++i) {
        std::vector<Scalar> row(np, Scalar(0));
        const MPoly& img = a.images.at(h.params[i]);
        for (size_t j = 0; j < np; ++j) {
          Exp e(h.ring->size(), 0);
          e[h.ring->index(h.params[j])] = 1;
          row[j] = img.coeff(e);
        }
        row[i] -= Scalar(1);
        M.push_back(row);
      }
    }
    auto fixed = nullspace(M);
    bool ok = fixed.size() == f.params.size();
    for (const auto& v : fixed)
      for (const auto& z : f.zeroed)
        if (!v[std::find(h.params.begin(), h.params.end(), z) - h.params.begin()].is_zero()) ok = false;
    rep.add("restriction.fixed_locus", ok,
            json{{"fixed_dim", fixed.size()}, {"kept", f.params}, {"zeroed", f.zeroed}});
  }
  return rep;
}

NormalForm special_fibre_normal_form(const DeformationFamily& f) {
  NormalForm nf;
  Ring R(f.ring);
  MPoly x = R("x"), y = R("y"), z = R("z");
  const DynkinType& t = f.source;
  if (t.family == 'A') {
    nf.klein = klein_data(t, "z2");
    nf.change = {{"X", z}, {"Y", x}, {"Z", y}};
    nf.generator_map = {{"sigma", "h"}};
  } else if (t == DynkinType{'D', 4}) {
    Scalar u = Scalar::radical(3, Cyclo(2));  // 4^{1/6} = u, 4^{-1/3} = u/2
    nf.change = {{"X", x * (-u / Scalar(2))}, {"Y", (y + x * q(1, 2)) * (-u)}, {"Z", z}};
    if (f.label == "C3") {
      nf.klein = klein_data(t, "z2");
      nf.generator_map = {{"sigma", "g"}};
    } else {
      nf.klein = klein_data(t, "s3");
      nf.generator_map = {{"rho", "g"}, {"sigma", "h"}};
    }
  } else if (t == DynkinType{'E', 6}) {
    nf.klein = klein_data(t, "z2");
    // X^4 = -x^4/4
    nf.change = {{"X", x * (Scalar::zeta(8) / Scalar::sqrt(2))}, {"Y", y}, {"Z", z}};
    nf.generator_map = {{"sigma", "g"}};
  } else {
    throw Error(Err::UnsupportedLabel, "no normal form for " + f.label);
  }
  MPoly F0 = f.special_fibre();
  MPoly pulled = nf.klein.relation.substitute(nf.change, f.ring);
  // pulled = scale * F0
  if (F0.is_zero()) throw Error(Err::NormalFormMismatch, "empty special fibre");
  const Term& lead = F0.terms().front();
  nf.scale = pulled.coeff(lead.e) / lead.c;
  if (nf.scale.is_zero() || pulled != F0 * nf.scale)
    throw Error(Err::NormalFormMismatch, f.label + ": relation does not pull back to the special fibre");
  return nf;
}

Report verify_normal_form(const DeformationFamily& f) {
  Report rep;
  NormalForm nf;
  try {
    nf = special_fibre_normal_form(f);
  } catch (const Error& e) {
    rep.add("normal_form.relation", false, json{{"error", e.what()}});
    return rep;
  }
  rep.add("normal_form.relation", true, json{{"scale", scalar_to_json(nf.scale)}});
  std::map<std::string, Scalar> zero;
  for (const auto& p : f.params) zero[p] = Scalar(0);
  const char* names[3] = {"X", "Y", "Z"};
  for (const auto& a : f.omega_action) {
    auto it = nf.generator_map.find(a.generator);
    if (it == nf.generator_map.end()) {
      rep.add("normal_form.action." + a.generator, false, json{{"error", "no Klein generator"}});
      continue;
    }
    const OmegaAction* ka = nullptr;
    for (const auto& o : nf.klein.omega_action)
      if (o.generator == it->second) ka = &o;
    if (!ka) {
      rep.add("normal_form.action." + a.generator, false, json{{"error", "missing " + it->second}});
      continue;
    }
    std::map<std::string, MPoly> at0;
    for (const auto& n : f.ambient) at0[n] = a.images.at(n).substitute_scalars(zero);
    bool ok = true;
    json rows = json::array();
    for (int k = 0; k < 3; ++k) {
      MPoly lhs = nf.change.at(names[k]).substitute(at0, f.ring);
      MPoly rhs(f.ring);
      json row = json::array();
      for (int j = 0; j < 3; ++j) {
        rhs += nf.change.at(names[j]) * ka->on_xyz[k][j];
        row.push_back(scalar_to_json(ka->on_xyz[k][j]));
      }
      rows.push_back(row);
      if (lhs != rhs) ok = false;
    }
    rep.add("normal_form.action." + a.generator, ok,
            json{{"klein_generator", it->second}, {"matrix", rows}});
  }
  return rep;
}

std::vector<NamedPoly> e6_flat_coefficients() {
  Ring P({"psi2", "psi5", "psi6", "psi8", "psi9", "psi12"});
  MPoly p2 = P("psi2"), p5 = P("psi5"), p6 = P("psi6"), p8 = P("psi8"), p9 = P("psi9"), p12 = P("psi12");
  Scalar s6 = Scalar::sqrt(6);
  return {
      {"A0", (p12 - p8 * p2 * p2 * q(1, 8) - p6 * p6 * q(1, 8) + p6 * p2.pow(3) * q(1, 96) - p5 * p5 * p2) *
                 q(1, 576)},
      {"Ax", (-p9 + p5 * p2 * p2 * q(1, 4)) * (s6 / Scalar(144))},
      {"Ay", (-p8 + p6 * p2 * q(1, 4) - p2.pow(4) * q(1, 192)) * q(1, 48)},
      {"Ax2", (p6 - p2.pow(3) * q(1, 8)) * q(1, 48)},
      {"Axy", p5 * (Scalar(1) / (Scalar(2) * s6))},
      {"Ax2y", p2 * q(-1, 4)},
  };
}

std::vector<NamedPoly> e6_mu_coefficients(const std::vector<NamedPoly>& flat) {
  FlatSystem fs = flat_coords_E6();
  RootSystem rs = build_root_system({'E', 6});
  auto cw = fundamental_coweights(rs);
  Vars mu = make_vars({"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"});
  std::map<std::string, MPoly> coord;
  for (size_t k = 0; k < fs.coord_ring->size(); ++k) {
    MPoly c(mu);
    for (size_t i = 0; i < 6; ++i)
      if (!cw[i][k].is_zero()) c -= MPoly::var(mu, mu->name(i)) * cw[i][k];
    coord[fs.coord_ring->name(k)] = c;
  }
  std::map<std::string, MPoly> psi;
  for (const auto& fc : fs.coords) psi[fc.name] = fc.in_coords.substitute(coord, mu);
  std::vector<NamedPoly> out;
  for (const auto& c : flat) out.push_back({c.name, c.poly.substitute(psi, mu)});
  return out;
}

Report verify_e6_coefficients(const std::vector<NamedPoly>& flat) {
  Report rep;
  auto inmu = e6_mu_coefficients(flat);
  auto gens = weyl_generators(build_root_system({'E', 6})).mu;
  for (size_t j = 0; j < gens.size(); ++j)
    for (const auto& c : inmu) {
      MPoly d = act_linear(gens[j], c.poly) - c.poly;
      json w = nullptr;
      if (!d.is_zero()) w = json{{"residual_terms", d.size()}};
      rep.add("e6_invariance.s" + std::to_string(j + 1) + "." + c.name, d.is_zero(), w);
    }
  return rep;
}

std::vector<NamedPoly> d4_mu_coefficients() {
  Ring M({"mu1", "mu2", "mu3", "mu4"});
  MPoly m1 = M("mu1"), m2 = M("mu2"), m3 = M("mu3"), m4 = M("mu4");
  MPoly A = -m1 * m2 - m2 * m3 - m2 * m4 - m2 * m2 -
            (m1 * m4 + m1 * m3 + m3 * m4 + m1 * m1 + m3 * m3 + m4 * m4) * q(1, 2);
  MPoly B = (m3 - m4) * (m3 + m4) * (m2 * 2 + m3 + m4) * (m1 * 2 + m2 * 2 + m3 + m4) * q(1, 16);
  MPoly C = (m1 - m4) * (m1 + m4) * (m2 * 2 + m1 + m4) * (m3 * 2 + m2 * 2 + m1 + m4) * q(1, 16);
  MPoly d1 = m1 * m2 * 2 + m1 * m3 + m1 * m4 + m2 * m2 * 2 + m2 * m3 * 2 + m2 * m4 * 2 + m3 * m4 + m4 * m4;
  MPoly d2 = m1 * m3 + m1 * m4 + m2 * m4 * 2 + m3 * m4 + m4 * m4;
  MPoly d3 = m1 * m3 - m1 * m4 - m2 * m4 * 2 - m3 * m4 - m4 * m4;
  MPoly D = d1 * d2 * d3 * q(-1, 32);
  return {{"calA", A}, {"calB", B}, {"calC", C}, {"calD", D}};
}

std::vector<MPoly> d4_xi_from_mu(const Vars& mu) {
  RootSystem rs = build_root_system({'D', 4});
  auto cw = fundamental_coweights(rs);
  std::vector<MPoly> xi;
  for (int k = 0; k < 4; ++k) {
    MPoly c(mu);
    for (int i = 0; i < 4; ++i)
      if (!cw[i][k].is_zero()) c -= MPoly::var(mu, mu->name(i)) * cw[i][k];
    xi.push_back(c);
  }
  return xi;
}

Report verify_d4_coefficients() {
  Report rep;
  auto co = d4_mu_coefficients();
  Vars mu = co[0].poly.vars();
  auto gens = weyl_generators(build_root_system({'D', 4})).mu;
  for (size_t j = 0; j < gens.size(); ++j)
    for (const auto& c : co)
      rep.add("d4_invariance.s" + std::to_string(j + 1) + "." + c.name,
              act_linear(gens[j], c.poly) == c.poly);
  FlatSystem fs = flat_coords_D(3);
  auto xi = d4_xi_from_mu(mu);
  std::map<std::string, MPoly> bind;
  for (int k = 0; k < 4; ++k) bind[fs.coord_ring->name(k)] = xi[k];
  std::map<std::string, MPoly> psi;
  for (const auto& fc : fs.coords) psi[fc.name] = fc.in_coords.substitute(bind, mu);
  const MPoly &p2 = psi.at("psi2"), &p4 = psi.at("psi4"), &p6 = psi.at("psi6"), &p = psi.at("psi");
  std::vector<MPoly> want = {
      p2 * q(-1, 2), -p, (p + p4 * q(1, 2)) * q(-1, 2),
      (p6 + p2 * p4 * q(1, 6) + p * p2 + p2.pow(3) * q(1, 108)) * q(1, 4)};
  for (size_t k = 0; k < 4; ++k) {
    MPoly d = co[k].poly - want[k];
    json w = nullptr;
    if (!d.is_zero()) w = json{{"residual", poly_to_json(d)}};
    rep.add("d4_flat_match." + co[k].name, d.is_zero(), w);
  }
  return rep;
}

Report verify_a_identity(int r) {
  int n = 2 * r;
  FlatSystem fs = flat_coords_A(r);
  std::vector<std::string> names = {"x", "y", "z"};
  for (const auto& s : fs.coord_ring->names()) names.push_back(s);
  Ring R(names);
  MPoly z = R("z");
  // sum lambda = 0
  MPoly last(R.vars());
  for (int i = 1; i < n; ++i) last -= R(idx("l", i));
  std::map<std::string, MPoly> lam;
  for (int i = 1; i < n; ++i) lam[idx("l", i)] = R(idx("l", i));
  lam[idx("l", n)] = last;
  MPoly lhs = -(R("x") * R("y"));
  MPoly prod = R.c(1);
  for (int i = 1; i <= n; ++i) prod *= z - lam.at(idx("l", i));
  lhs += prod;
  std::map<std::string, MPoly> psi;
  for (const auto& fc : fs.coords) psi[fc.name] = fc.in_coords.substitute(lam, R.vars());
  auto eps = epsilon_from_psi(r);
  MPoly rhs = z.pow(n) - R("x") * R("y");
  for (int i = 2; i <= n; ++i)
    rhs += eps[i - 2].substitute(psi, R.vars()) * z.pow(n - i) * Scalar(i % 2 ? -1 : 1);
  MPoly d = lhs - rhs;
  Report rep;
  rep.add("a_identity.r" + std::to_string(r), d.is_zero(),
          json{{"terms", lhs.size()}, {"residual_terms", d.size()}});
  return rep;
}

Report verify_family_samples(const DynkinType& t, int samples, uint64_t seed,
                             const std::optional<std::vector<ComplexF>>& fixed_mu) {
  auto q = build_mckay_quiver(t);
  if (fixed_mu && fixed_mu->size() != q.dims.size())
    throw Error(Err::DimensionMismatch, "mu needs " + std::to_string(q.dims.size()) + " entries");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0, worst_moment = 0;
  if (t.family == 'A' && t.rank % 2 == 1) {
    int m = t.rank + 1, r = m / 2;
    DeformationFamily fam = family(t.str());
    FlatSystem fs = flat_coords_A(r);
    for (int k = 0; k < samples; ++k) {
      std::vector<ComplexF> mu(m);
      for (int i = 1; i < m; ++i) mu[i] = ComplexF(U(rng), U(rng));
      for (int i = 1; i < m; ++i) mu[0] -= mu[i];
      if (fixed_mu) mu = *fixed_mu;
      auto phi = sample_moment_fibre(q, mu, seed + 1000 + k);
      worst_moment = std::max(worst_moment, moment_residual(q, phi, mu));
      // lambda_i = mean(c) - c_i with c_i = c_{i-1} - mu_i, c_0 = 0
      std::vector<ComplexF> c(m);
      for (int i = 1; i < m; ++i) c[i] = c[i - 1] - mu[i];
      ComplexF mean = 0;
      for (auto v : c) mean += v;
      mean /= double(m);
      std::map<std::string, ComplexF> lam, pt;
      for (int i = 0; i < m; ++i) lam[idx("l", i + 1)] = mean - c[i];
      for (const auto& fc : fs.coords) pt["t" + fc.name.substr(3)] = fc.in_coords.evaluate(lam);
      auto inv = invariants_at_point(q, phi, mu);
      pt["x"] = inv.x;
      pt["y"] = inv.y;
      pt["z"] = inv.z;
      double scale = 0;
      for (const auto& term : fam.equation.terms()) scale += std::abs(MPoly::monomial(fam.ring, term.e, term.c).evaluate(pt));
      worst = std::max(worst, std::abs(fam.equation.evaluate(pt)) / std::max(scale, 1e-300));
    }
  } else if (t == DynkinType{'D', 4}) {
    DeformationFamily fam = family("D4");
    FlatSystem fs = flat_coords_D(3);
    Vars muv = make_vars({"mu1", "mu2", "mu3", "mu4"});
    auto xi = d4_xi_from_mu(muv);
    for (int k = 0; k < samples; ++k) {
      std::vector<ComplexF> mu(5);
      for (int i = 1; i < 5; ++i) mu[i] = ComplexF(U(rng), U(rng));
      mu[0] = -(mu[1] + 2.0 * mu[2] + mu[3] + mu[4]);
      if (fixed_mu) mu = *fixed_mu;
      auto phi = sample_moment_fibre(q, mu, seed + 1000 + k);
      worst_moment = std::max(worst_moment, moment_residual(q, phi, mu));
      std::map<std::string, ComplexF> m4, xs, pt;
      for (int i = 1; i <= 4; ++i) m4[idx("mu", i)] = mu[i];
      for (int i = 0; i < 4; ++i) xs[idx("xi", i + 1)] = xi[i].evaluate(m4);
      for (const auto& fc : fs.coords) {
        std::string tn = fc.name == "psi" ? "t" : "t" + fc.name.substr(3);
        pt[tn] = fc.in_coords.evaluate(xs);
      }
      auto inv = invariants_at_point(q, phi, mu);
      pt["x"] = inv.x;
      pt["y"] = inv.y;
      pt["z"] = inv.z;
      double scale = 0;
      for (const auto& term : fam.equation.terms()) scale += std::abs(MPoly::monomial(fam.ring, term.e, term.c).evaluate(pt));
      worst = std::max(worst, std::abs(fam.equation.evaluate(pt)) / std::max(scale, 1e-300));
    }
  } else {
    throw Error(Err::UnsupportedType, "samples are provided for A_{2r-1} and D4");
  }
  Report rep;
  rep.add("samples." + t.str() + ".family_equation", worst < 1e-8,
          json{{"samples", samples}, {"max_relative_residual", worst}});
  rep.add("samples." + t.str() + ".moment_fibre", worst_moment < 1e-9,
          json{{"max_residual", worst_moment}});
  return rep;
}

}  // namespace swb
