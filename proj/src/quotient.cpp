#include "singwb/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "singwb/groebner.hpp"

namespace swb {

namespace {

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

std::string idx(const std::string& p, int i) { return p + std::to_string(i); }

Vars quotient_ring(const std::vector<std::string>& qv, const std::vector<std::string>& params) {
  std::vector<std::string> names = qv;
  names.insert(names.end(), params.begin(), params.end());
  return make_vars(names);
}

int b_rank(const std::string& label) {
  if (label.size() < 2 || label[0] != 'B') return -1;
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return -1;
  if (label.size() > 3) return -1;
  int r = std::stoi(label.substr(1));
  return r >= 2 && r <= 8 ? r : -1;
}

// f_{2i} with F = z^{2r} + sum f_{2i} z^{2r-2i} - xy, as polynomials in `target`.
std::vector<MPoly> b_coefficients(const DeformationFamily& fam, int r, const Vars& target) {
  auto cs = fam.equation.coefficients_in({"x", "y", "z"});
  std::vector<MPoly> f;
  for (int i = 1; i <= r; ++i) {
    Exp e{0, 0, static_cast<uint16_t>(2 * r - 2 * i)};
    auto it = cs.find(e);
    f.push_back(it == cs.end() ? MPoly(target) : it->second.to_ring(target));
  }
  return f;
}

QuotientFamily b_quotient(int r) {
  auto fam = family(idx("B", r));
  QuotientFamily Q;
  Q.source_label = fam.label;
  Q.quotient_vars = {"X", "Z", "W"};
  Q.params = fam.params;
  Q.ring = quotient_ring(Q.quotient_vars, Q.params);
  Ring R(Q.ring);
  MPoly X = R("X"), Z = R("Z"), W = R("W");
  auto f = b_coefficients(fam, r, Q.ring);
  MPoly eq = Z * (X * X - Z.pow(r) * Scalar(4)) + W * W;
  for (int i = 1; i <= r; ++i) eq -= f[i - 1] * Z.pow(r - i + 1) * Scalar(4);
  Q.equation = eq;
  Ring S(fam.ring);
  MPoly x = S("x"), y = S("y"), z = S("z");
  if (r % 2 == 0)
    Q.invariant_map = {{"X", x + y}, {"Z", z * z}, {"W", Scalar::i() * z * (x - y)}};
  else
    Q.invariant_map = {{"X", Scalar::i() * (x - y)}, {"Z", z * z}, {"W", z * (x + y)}};
  Q.target_ade = idx("D", r + 2);
  Q.target_rank = r + 2;
  return Q;
}

QuotientFamily c3_quotient() {
  auto fam = family("C3");
  QuotientFamily Q;
  Q.source_label = "C3";
  Q.quotient_vars = {"X", "Y", "W"};
  Q.params = fam.params;
  Q.ring = quotient_ring(Q.quotient_vars, Q.params);
  Ring R(Q.ring);
  MPoly X = R("X"), Y = R("Y");
  MPoly AX4 = R.parse("t2/32");
  MPoly AX3 = R.parse("-3/128*t2^2 - 1/32*t4");
  MPoly AX2 = R.parse("7/192*t2*t4 + 1/32*t6 + 7/864*t2^3");
  MPoly AX = R.parse("-1/32*t6*t2 - 5/384*t2^2*t4 - 35/27648*t2^4 - 1/64*t4^2");
  MPoly AY = R.parse("1/4*t6 + 1/24*t2*t4 + 1/432*t2^3");
  MPoly A0 = R.parse("1/128*t6*t2^2 + 1/32*t6*t4 + 11/6912*t2^3*t4 + 1/192*t2*t4^2 + 1/13824*t2^5");
  Q.equation = R.parse("-1/64*X^5 + X*Y^2 - W^2") + AX4 * X.pow(4) + AX3 * X.pow(3) +
               AX2 * X * X + AX * X + AY * Y + A0;
  Ring S(fam.ring);
  MPoly x = S("x"), z = S("z"), t2 = S("t2"), t4 = S("t4");
  MPoly yp = x * q(1, 2) + S("y") - t2 * q(1, 4);
  MPoly shift = x * x * q(1, 8) - x * t2 * q(1, 8) + t2 * t2 * q(1, 32) + t4 * q(1, 8);
  Q.invariant_map = {{"X", x}, {"Y", yp * yp - shift}, {"W", yp * z}};
  Q.target_ade = "D6";
  Q.target_rank = 6;
  return Q;
}

const char* kG2Final =
    "X^3*Y - 11664*Y^3 + Z^2 + (-11/32*t2^6 - 189/4*t2^3*t6 - 729*t6^2)*Y"
    " + (-15/16*t2^4 - 81*t2*t6)*X*Y + 324*t2*X*Y^2 + (189*t2^3 + 5832*t6)*Y^2";

// X_g and Y_g in the G2 family ring.
std::pair<MPoly, MPoly> g2_linear_forms(const DeformationFamily& fam) {
  Ring S(fam.ring);
  Scalar is3 = Scalar::i() * Scalar::sqrt(3);
  MPoly x = S("x"), y = S("y"), t2 = S("t2");
  MPoly Xg = x * (Scalar(-3) - is3) + y * (Scalar(-3) + is3) + t2;
  MPoly Yg = x * (Scalar(-3) + is3) + y * (Scalar(-3) - is3) + t2;
  return {Xg, Yg};
}

QuotientFamily g2_quotient() {
  auto fam = family("G2");
  QuotientFamily Q;
  Q.source_label = "G2";
  Q.quotient_vars = {"X", "Y", "Z"};
  Q.params = fam.params;
  Q.ring = quotient_ring(Q.quotient_vars, Q.params);
  Q.equation = parse_poly(Q.ring, kG2Final);
  // Only the intermediate invariants are published; the final map comes from the fit.
  auto [Xg, Yg] = g2_linear_forms(fam);
  Ring S(fam.ring);
  MPoly z = S("z");
  Q.invariant_map = {{"W", Xg * Yg}, {"Zp", z * z}, {"V", (Xg.pow(3) - Yg.pow(3)) * z}};
  Q.map_complete = false;
  Q.target_ade = "E7";
  Q.target_rank = 7;
  return Q;
}

QuotientFamily f4_quotient() {
  auto fam = family("F4");
  QuotientFamily Q;
  Q.source_label = "F4";
  Q.quotient_vars = {"X", "Y", "Z"};
  Q.params = fam.params;
  Q.ring = quotient_ring(Q.quotient_vars, Q.params);
  Ring R(Q.ring);
  Q.equation = R.parse(
      "-1/4*X^3 + X*Y^3 + Z^2 - 1/4*t2*X^2*Y + 1/48*(t6 - t2^3/8)*X^2"
      " + 1/48*(-t8 + t6*t2/4 - t2^4/192)*X*Y"
      " + 1/576*(t12 - t8*t2^2/8 - t6^2/8 + t6*t2^3/96)*X");
  Ring S(fam.ring);
  MPoly x = S("x");
  Q.invariant_map = {{"X", x * x}, {"Y", S("y")}, {"Z", x * S("z")}};
  Q.target_ade = "E7";
  Q.target_rank = 7;
  return Q;
}

json poly_witness(const MPoly& p) { return p.str(); }

// The G2 relation after eliminating X-frak: ring (W, Zp, V, t2, t6).
MPoly g2_eliminated(const Vars& E) {
  Ring R(E);
  MPoly W = R("W"), Zp = R("Zp"), t2 = R("t2"), t6 = R("t6");
  MPoly Xf = (-Zp - t2.pow(3) * q(1, 432) + W * t2 * q(1, 72) + t6 * q(1, 4)) * Scalar(216);
  return R("V").pow(2) - Zp * (Xf * Xf - W.pow(3) * Scalar(4));
}

Vars g2_elim_ring() { return make_vars({"W", "Zp", "V", "t2", "t6"}); }

MPoly g2_fit_image(const G2Fit& fit, const Vars& E) {
  Ring R(E);
  auto fq = g2_quotient();
  std::map<std::string, MPoly> sub{{"X", R("W") + fit.b.to_ring(E)},
                                   {"Y", R("Zp") * fit.c},
                                   {"Z", R("V") * fit.d}};
  return fq.equation.substitute(sub, E) * fit.k;
}

Scalar coeff_of(const MPoly& p, const std::map<std::string, int>& mono) {
  Exp e(p.vars()->size(), 0);
  for (auto& [n, k] : mono) e[p.vars()->index(n)] = static_cast<uint16_t>(k);
  return p.coeff(e);
}

}  // namespace

MPoly QuotientFamily::special_fibre() const {
  std::map<std::string, Scalar> zero;
  for (const auto& p : params) zero[p] = Scalar(0);
  return equation.substitute_scalars(zero);
}

std::vector<std::string> quotient_labels() { return {"B2", "B3", "C3", "G2", "F4"}; }

QuotientFamily quotient_family(const std::string& label) {
  int r = b_rank(label);
  if (r > 0) return b_quotient(r);
  if (label == "C3") return c3_quotient();
  if (label == "G2") return g2_quotient();
  if (label == "F4") return f4_quotient();
  throw Error(Err::UnsupportedLabel, "no quotient family for label '" + label + "'");
}

Report verify_invariant_generators(const std::string& label) {
  auto Q = quotient_family(label);
  auto fam = family(Q.source_label);
  Ring S(fam.ring);
  MPoly x = S("x"), y = S("y"), z = S("z");
  std::vector<std::pair<std::string, MPoly>> gens;
  int r = b_rank(label);
  if (r > 0) {
    if (r % 2 == 0)
      gens = {{"z^2", z * z}, {"z(x-y)", z * (x - y)}, {"x+y", x + y}, {"xy", x * y}};
    else
      gens = {{"x-y", x - y}, {"xy", x * y}, {"z^2", z * z}, {"z(x+y)", z * (x + y)}};
  } else if (label == "G2") {
    auto [Xg, Yg] = g2_linear_forms(fam);
    Report rep;
    // Step 1: rho alone fixes XY, X^3, Y^3.
    const auto& rho = fam.action("rho");
    for (auto& [n, g] : std::vector<std::pair<std::string, MPoly>>{
             {"XY", Xg * Yg}, {"X^3", Xg.pow(3)}, {"Y^3", Yg.pow(3)}}) {
      MPoly d = apply_action(rho, g) - g;
      rep.add("invariant.rho." + n, d.is_zero(), d.is_zero() ? json(nullptr) : poly_witness(d));
    }
    gens = {{"Xf", Xg.pow(3) + Yg.pow(3)}, {"Yf^2", (Xg.pow(3) - Yg.pow(3)).pow(2)},
            {"W", Xg * Yg}, {"z^2", z * z}, {"Yf*z", (Xg.pow(3) - Yg.pow(3)) * z}};
    for (const auto& a : fam.omega_action)
      for (auto& [n, g] : gens) {
        MPoly d = apply_action(a, g) - g;
        rep.add("invariant." + a.generator + "." + n, d.is_zero(),
                d.is_zero() ? json(nullptr) : poly_witness(d));
      }
    return rep;
  } else {
    for (auto& [n, g] : Q.invariant_map) gens.push_back({n, g});
    if (label == "C3") gens.push_back({"z^2", z * z});
    if (label == "F4") gens.push_back({"Z^2", z * z});
  }
  Report rep;
  for (const auto& a : fam.omega_action)
    for (auto& [n, g] : gens) {
      MPoly d = apply_action(a, g) - g;
      rep.add("invariant." + a.generator + "." + n, d.is_zero(),
              d.is_zero() ? json(nullptr) : poly_witness(d));
    }
  for (auto& [n, g] : Q.invariant_map) {
    for (const auto& a : fam.omega_action) {
      MPoly d = apply_action(a, g) - g;
      rep.add("invariant_map." + a.generator + "." + n, d.is_zero(),
              d.is_zero() ? json(nullptr) : poly_witness(d));
    }
  }
  return rep;
}

G2Fit fit_g2_final_form() {
  Vars E = g2_elim_ring();
  MPoly P = g2_eliminated(E);
  auto fq = g2_quotient();
  MPoly F = fq.equation;
  // Leading coefficients of (**) in X^3 Y, Y^3, Z^2.
  Scalar fx3y = coeff_of(F, {{"X", 3}, {"Y", 1}});
  Scalar fy3 = coeff_of(F, {{"Y", 3}});
  Scalar fz2 = coeff_of(F, {{"Z", 2}});
  Scalar p_w3z = coeff_of(P, {{"W", 3}, {"Zp", 1}});
  Scalar p_z3 = coeff_of(P, {{"Zp", 3}});
  Scalar p_v2 = coeff_of(P, {{"V", 2}});
  G2Fit best;
  if (fx3y.is_zero() || fy3.is_zero() || fz2.is_zero() || p_w3z.is_zero() || p_z3.is_zero())
    return best;
  // With X = W + b: k c = p_w3z / fx3y and k c^3 = p_z3 / fy3.
  Scalar kc = p_w3z / fx3y;
  Scalar kc3 = p_z3 / fy3;
  Scalar c2 = kc3 / kc;
  if (!c2.is_rational()) return best;
  Scalar c0 = Scalar::sqrt_rational(c2.rational());
  if (c0.is_zero()) return best;
  MPoly W2Z = P.coefficients_in({"W", "Zp", "V"})[Exp{2, 1, 0}];
  for (Scalar c : {c0, -c0}) {
    Scalar k = kc / c;
    Scalar d2 = p_v2 / (k * fz2);
    if (!d2.is_rational()) continue;
    Scalar d0 = Scalar::sqrt_rational(d2.rational());
    for (Scalar d : {d0, -d0}) {
      G2Fit f;
      f.k = k;
      f.c = c;
      f.d = d;
      // 3 k c fx3y b W^2 Zp matches the W^2 Zp coefficient of P.
      f.b = W2Z * (Scalar(1) / (k * c * fx3y * Scalar(3)));
      MPoly res = g2_fit_image(f, E) - P;
      if (res.is_zero()) {
        f.found = true;
        return f;
      }
      if (!best.found && best.k.is_zero()) best = f;
    }
  }
  return best;
}

Report verify_quotient_pullback(const std::string& label, uint64_t seed) {
  auto Q = quotient_family(label);
  auto fam = family(Q.source_label);
  Ideal I({fam.equation});
  Report rep;
  if (label != "G2") {
    MPoly pb = Q.equation.substitute(Q.invariant_map, fam.ring);
    MPoly res = I.normal_form(pb);
    rep.add("pullback." + label, res.is_zero(), res.is_zero() ? json(nullptr) : poly_witness(res));
    return rep;
  }
  // Intermediate presentation.
  auto [Xg, Yg] = g2_linear_forms(fam);
  Ring S(fam.ring);
  MPoly z = S("z"), t2 = S("t2"), t6 = S("t6");
  MPoly Xf = Xg.pow(3) + Yg.pow(3), Yf = Xg.pow(3) - Yg.pow(3), W = Xg * Yg;
  MPoly R1 = -z * z - Xf * q(1, 216) - t2.pow(3) * q(1, 432) + W * t2 * q(1, 72) + t6 * q(1, 4);
  MPoly r1 = I.normal_form(R1);
  rep.add("pullback.G2.intermediate.first", r1.is_zero(), r1.is_zero() ? json(nullptr) : poly_witness(r1));
  MPoly R2 = (Xf * Xf - Yf * Yf) * q(1, 4) - W.pow(3);
  rep.add("pullback.G2.intermediate.second", R2.is_zero(), R2.is_zero() ? json(nullptr) : poly_witness(R2));
  // Eliminated relation vanishes on the family.
  Vars E = g2_elim_ring();
  MPoly P = g2_eliminated(E);
  MPoly pP = I.normal_form(P.substitute(Q.invariant_map, fam.ring));
  rep.add("pullback.G2.eliminated", pP.is_zero(), pP.is_zero() ? json(nullptr) : poly_witness(pP));

  G2Fit fit = fit_g2_final_form();
  json fw = {{"k", fit.k.str()}, {"c", fit.c.str()}, {"d", fit.d.str()}, {"b", fit.b.str()}};
  std::string tier = "none";
  if (fit.found) {
    // Full map into the source ring, checked exactly modulo the family.
    std::map<std::string, MPoly> full{{"X", W + fit.b.to_ring(fam.ring)},
                                      {"Y", z * z * fit.c},
                                      {"Z", Yf * z * fit.d}};
    MPoly res = I.normal_form(Q.equation.substitute(full, fam.ring));
    rep.add("pullback.G2.final.fit", res.is_zero(), res.is_zero() ? fw : json(poly_witness(res)));
    if (res.is_zero()) tier = "fit";
  } else {
    rep.add("pullback.G2.final.fit", false, fw);
  }
  // Numeric confirmation on sampled fibre points.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0;
  int samples = 100;
  for (int s = 0; s < samples; ++s) {
    std::map<std::string, ComplexF> pt;
    for (const auto& n : {"x", "y", "t2", "t6"}) pt[n] = ComplexF(U(rng), U(rng));
    pt["z"] = ComplexF(0, 0);
    // z^2 = z^2 - F at z = 0 (F is monic quadratic in z with no linear term).
    ComplexF rhs = -fam.equation.evaluate(pt);
    pt["z"] = std::sqrt(rhs);
    std::map<std::string, ComplexF> qp{{"t2", pt["t2"]}, {"t6", pt["t6"]}};
    ComplexF Wv = W.evaluate(pt);
    qp["X"] = Wv + fit.b.to_ring(fam.ring).evaluate(pt);
    qp["Y"] = (z * z).evaluate(pt) * embed_complex(fit.c);
    qp["Z"] = (Yf * z).evaluate(pt) * embed_complex(fit.d);
    ComplexF val = Q.equation.evaluate(qp);
    // Scale: sum of absolute term values.
    double scale = 0;
    for (const auto& t : Q.equation.terms()) {
      ComplexF m = embed_complex(t.c);
      for (size_t i = 0; i < t.e.size(); ++i)
        if (t.e[i]) m *= std::pow(qp[Q.ring->name(i)], static_cast<int>(t.e[i]));
      scale += std::abs(m);
    }
    worst = std::max(worst, std::abs(val) / std::max(scale, 1.0));
  }
  bool num_ok = fit.k.is_zero() ? false : worst < 1e-8;
  rep.add("pullback.G2.final.numeric", num_ok, json{{"samples", samples}, {"max_relative_residual", worst}});
  if (tier == "none" && num_ok) tier = "numeric";
  rep.add("pullback.G2.tier", tier != "none", json{{"tier", tier}});
  return rep;
}

Report verify_singular_locus(const std::string& label) {
  auto Q = quotient_family(label);
  Report rep;
  auto grad = [&](const MPoly& f) {
    std::vector<std::pair<std::string, MPoly>> out{{"f", f}};
    for (const auto& v : Q.quotient_vars) out.push_back({"d" + v, f.derivative(v)});
    return out;
  };
  if (label == "B2") {
    std::vector<std::string> names{"s"};
    names.insert(names.end(), Q.params.begin(), Q.params.end());
    Vars T = make_vars(names);
    Ring R(T);
    auto fam = family("B2");
    MPoly f4 = b_coefficients(fam, 2, T)[1];
    Ideal I({R("s") * R("s") - f4}, MonomialOrder::lex());
    std::map<std::string, MPoly> pt{{"X", R("s") * Scalar(2)}, {"W", R.zero()}, {"Z", R.zero()}};
    for (auto& [n, g] : grad(Q.equation)) {
      MPoly res = I.normal_form(g.substitute(pt, T));
      rep.add("singular_locus.B2." + n, res.is_zero(), res.is_zero() ? json(nullptr) : poly_witness(res));
    }
    return rep;
  }
  if (label == "C3") {
    std::vector<std::string> names{"Xs"};
    names.insert(names.end(), Q.params.begin(), Q.params.end());
    Vars T = make_vars(names);
    Ring R(T);
    MPoly cubic = R.parse(
        "108*Xs^3 - 108*Xs^2*t2 + (108*t4 + 27*t2^2)*Xs - t2^3 - 18*t2*t4 - 108*t6");
    Ideal I({cubic * q(1, 108)}, MonomialOrder::lex());
    MPoly Ys = R.parse("4*Xs^2 - 4*Xs*t2 + t2^2 + 4*t4") * q(-1, 32);
    std::map<std::string, MPoly> pt{{"X", R("Xs")}, {"Y", Ys}, {"W", R.zero()}};
    for (auto& [n, g] : grad(Q.equation)) {
      MPoly res = I.normal_form(g.substitute(pt, T));
      rep.add("singular_locus.C3." + n, res.is_zero(), res.is_zero() ? json(nullptr) : poly_witness(res));
    }
    return rep;
  }
  if (label == "G2") {
    Ring R(Q.ring);
    std::map<std::string, MPoly> pt{{"Y", R.zero()}, {"Z", R.zero()}};
    for (auto& [n, g] : grad(Q.equation)) {
      MPoly v = g.substitute(pt, Q.ring);
      if (n == "dY") {
        MPoly cubic = R.parse("X^3 + (-15/16*t2^4 - 81*t2*t6)*X - 11/32*t2^6 - 189/4*t2^3*t6 - 729*t6^2");
        MPoly d = v - cubic;
        rep.add("singular_locus.G2.dY_cubic", d.is_zero(), d.is_zero() ? json(nullptr) : poly_witness(d));
      } else {
        rep.add("singular_locus.G2." + n, v.is_zero(), v.is_zero() ? json(nullptr) : poly_witness(v));
      }
    }
    return rep;
  }
  throw Error(Err::UnsupportedLabel, "no singular-locus certificate for '" + label + "'");
}

Report non_semiuniversality_check(const std::string& label) {
  auto Q = quotient_family(label);
  long dim = static_cast<long>(Q.params.size());
  Report rep;
  rep.add("non_semiuniversal." + label, dim < Q.target_rank,
          json{{"dim", dim}, {"target", Q.target_ade}, {"rank", Q.target_rank}});
  return rep;
}

Report verify_quotient_special_fibre(const std::string& label) {
  auto Q = quotient_family(label);
  Report rep;
  auto sr = analyze_hypersurface(Q.special_fibre(), Q.quotient_vars);
  bool one = sr.points.size() == 1;
  long tau = one ? sr.points[0].tjurina : -1;
  std::string ade = one ? sr.points[0].ade : "";
  json w = singularity_json(sr);
  rep.add("special_fibre." + label + ".single_point", one, w);
  rep.add("special_fibre." + label + ".tjurina", tau == Q.target_rank,
          json{{"tjurina", tau}, {"expected", Q.target_rank}});
  rep.add("special_fibre." + label + ".ade", ade == Q.target_ade,
          json{{"ade", ade}, {"expected", Q.target_ade}});
  return rep;
}

std::vector<DiscriminantComponent> discriminant_B2() {
  auto fam = family("B2");
  Vars T = make_vars({"t2", "t4"});
  auto f = b_coefficients(fam, 2, T);
  Ring R(T);
  return {{"f4=0", f[1], R("t2").pow(2) * q(-1, 8)},
          {"f2^2=4f4", f[0] * f[0] - f[1] * Scalar(4), R("t2").pow(2) * q(1, 8)}};
}

Report verify_discriminant_B2() {
  auto fam = family("B2");
  Report rep;
  auto comps = discriminant_B2();
  for (const auto& c : comps) {
    MPoly on = c.condition.substitute({{"t4", c.locus}}, c.condition.vars());
    rep.add("discriminant." + c.name + ".locus", on.is_zero(),
            json{{"condition", c.condition.str()}, {"t4", c.locus.str()}});
  }
  Ring S(fam.ring);
  auto grad = [&](const MPoly& F) {
    std::vector<std::pair<std::string, MPoly>> out{{"f", F}};
    for (const auto& v : fam.ambient) out.push_back({"d" + v, F.derivative(v)});
    return out;
  };
  // f4 = 0: the origin.
  {
    MPoly F = fam.equation.substitute({{"t4", comps[0].locus.to_ring(fam.ring)}}, fam.ring);
    bool ok = true;
    for (auto& [n, g] : grad(F))
      ok = ok && g.substitute({{"x", S.zero()}, {"y", S.zero()}, {"z", S.zero()}}, fam.ring).is_zero();
    rep.add("discriminant.f4=0.witness", ok, json{{"point", "(0, 0, 0)"}});
  }
  // f2^2 = 4 f4: (0, 0, s) with s^2 = -f2/2.
  {
    Vars T = make_vars({"s", "t2"});
    Ring R(T);
    auto f = b_coefficients(fam, 2, fam.ring);
    MPoly F = fam.equation.substitute({{"t4", comps[1].locus.to_ring(fam.ring)}}, fam.ring);
    MPoly f2 = f[0].substitute({{"t4", comps[1].locus.to_ring(fam.ring)}}, fam.ring).to_ring(T);
    Ideal I({R("s") * R("s") + f2 * q(1, 2)}, MonomialOrder::lex());
    bool ok = true;
    json bad = nullptr;
    for (auto& [n, g] : grad(F)) {
      MPoly v = g.substitute({{"x", R.zero()}, {"y", R.zero()}, {"z", R("s")}}, T);
      MPoly res = I.normal_form(v);
      if (!res.is_zero()) {
        ok = false;
        bad = poly_witness(res);
      }
    }
    rep.add("discriminant.f2^2=4f4.witness", ok, ok ? json{{"point", "(0, 0, s), s^2 = -f2/2"}} : bad);
  }
  return rep;
}

Report verify_b2_grid() {
  auto Q = quotient_family("B2");
  auto fam = family("B2");
  Vars T = make_vars({"t2", "t4"});
  MPoly f4 = b_coefficients(fam, 2, T)[1];
  Report rep;
  int singular = 0, matched = 0;
  json bad = json::array();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      std::map<std::string, Scalar> pv{{"t2", Scalar(a)}, {"t4", Scalar(b)}};
      auto sr = analyze_hypersurface(Q.equation.substitute_scalars(pv), Q.quotient_vars);
      if (!sr.smooth) ++singular;
      ComplexF r = 2.0 * std::sqrt(embed_complex(f4.evaluate_exact({Scalar(a), Scalar(b)})));
      bool both = true;
      for (ComplexF target : {r, -r}) {
        bool hit = false;
        for (const auto& p : sr.points)
          hit = hit || (std::abs(p.coords[0] - target) < 1e-8 && std::abs(p.coords[1]) < 1e-8 &&
                        std::abs(p.coords[2]) < 1e-8);
        both = both && hit;
      }
      if (both) ++matched;
      else bad.push_back({a, b});
    }
  rep.add("b2_grid.all_singular", singular == 25, json{{"singular", singular}, {"fibres", 25}});
  rep.add("b2_grid.points_at_2sqrt_f4", matched == 25, json{{"matched", matched}, {"missing", bad}});
  return rep;
}

}  // namespace swb
