#include "singwb/suite.hpp"

#include <chrono>
#include <cmath>

#include "singwb/flat.hpp"
#include "singwb/klein.hpp"
#include "singwb/quiver.hpp"
#include "singwb/rootdata.hpp"

namespace swb {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn, merges its report into `into` and stamps the elapsed time.
template <class F>
void timed(Report& into, const std::string& prefix, F&& fn) {
  auto t0 = Clock::now();
  Report r = fn();
  long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
  for (auto& c : r.checks) c.runtime_ms = ms;
  into.merge(r, prefix);
}

json ok_or(const MPoly& d) { return d.is_zero() ? json(nullptr) : json(d.str()); }

}  // namespace

Report fold_report(const std::string& type, const std::string& omega) {
  DynkinType t = parse_type(type);
  RootSystem rs = build_root_system(t);
  OmegaGroup om = make_omega(rs, omega);
  FoldResult fr = fold(rs, om);
  Report r;
  json orbits = json::array();
  for (const auto& o : fr.orbits) {
    json a = json::array();
    for (int v : o) a.push_back(v + 1);
    orbits.push_back(a);
  }
  r.add("fold." + t.str() + "." + omega, fr.folded == fold(t, omega),
        json{{"folded", fr.folded.str()}, {"orbit_sums", fr.orbit_sum_type.str()}, {"orbits", orbits}});
  return r;
}

Report fold_table_report() {
  Report r;
  auto row = [&](const std::string& name, DynkinType src, const std::string& om,
                 std::vector<DynkinType> want) {
    DynkinType got = fold(src, om);
    bool ok = false;
    for (const auto& w : want) ok = ok || got == w;
    r.add("fold_table." + name + "." + src.str(), ok, json{{"folded", got.str()}});
  };
  for (int k = 2; k <= 5; ++k) row("A2r-1_to_Br", {'A', 2 * k - 1}, "z2", {{'B', k}});
  // C2 and B2 coincide.
  for (int k = 2; k <= 5; ++k) row("A2r_to_Cr", {'A', 2 * k}, "z2", {{'C', k}, {'B', k == 2 ? 2 : 0}});
  for (int k = 3; k <= 5; ++k) row("Dr+1_to_Cr", {'D', k + 1}, "z2", {{'C', k}});
  row("E6_to_F4", {'E', 6}, "z2", {{'F', 4}});
  row("D4_to_G2", {'D', 4}, "s3", {{'G', 2}});
  row("D4_to_G2.z3", {'D', 4}, "z3", {{'G', 2}});
  return r;
}

Report klein_report(const std::string& type, const std::string& omega) {
  auto kd = klein_data(parse_type(type), omega);
  Report r;
  r.merge(verify_invariance(kd));
  r.merge(verify_omega_action(kd));
  return r;
}

Report quiver_action_report(const std::string& type, const std::string& generator, bool s3,
                            uint64_t seed, int trials) {
  auto q = build_mckay_quiver(parse_type(type));
  auto a = make_action(q, generator, {}, s3);
  Report r;
  std::string key = type + "." + generator + (s3 ? ".s3" : "");
  if (type == "D4" && generator == "sigma" && s3) {
    // The table row asks alpha*beta = -1 on the swapped legs; symplecticity needs +1.
    auto row = make_action(q, generator, {{"alpha3", 1}, {"beta3", -1}, {"alpha4", 1}, {"beta4", -1}}, true);
    r.merge(check_action_admissible(q, row), "admissible." + key + ".table_row.");
  } else {
    r.merge(check_action_admissible(q, a), "admissible." + key + ".");
  }
  r.add("symplectic." + key, verify_symplectic_action(q, a));
  r.merge(verify_moment_equivariance_numeric(q, a, seed, trials), "moment." + key + ".");
  return r;
}

Report symplectic_report() {
  Report r;
  auto a3 = build_mckay_quiver(parse_type("A3"));
  auto d4 = build_mckay_quiver(parse_type("D4"));
  auto e6 = build_mckay_quiver(parse_type("E6"));
  r.add("symplectic.A3.sigma", verify_symplectic_action(a3, make_action(a3, "sigma")));
  r.add("symplectic.D4.sigma.s3", verify_symplectic_action(d4, make_action(d4, "sigma", {}, true)));
  r.add("symplectic.D4.rho.s3", verify_symplectic_action(d4, make_action(d4, "rho", {}, true)));
  r.add("symplectic.E6.sigma", verify_symplectic_action(e6, make_action(e6, "sigma")));
  bool broken = verify_symplectic_action(a3, make_action(a3, "sigma", {{"lambda0", 1}}));
  r.add("symplectic.A3.perturbed_rejected", !broken);
  return r;
}

Report quiver_sample_report(const std::string& type, int samples, uint64_t seed,
                            const std::optional<std::vector<ComplexF>>& mu) {
  return verify_family_samples(parse_type(type), samples, seed, mu);
}

Report flat_report(const std::string& type) {
  DynkinType t = parse_type(type);
  Report r;
  if (t.family == 'A' && t.rank % 2 == 1) {
    int k = (t.rank + 1) / 2;
    auto fs = flat_coords_A(k);
    if (k == 2) {
      Ring G(fs.gen_ring);
      MPoly d = fs.get("psi4").in_generators - G.parse("e4 - 1/8*e2^2");
      r.add("flat.A3.psi4", d.is_zero(), ok_or(d));
    }
    auto eps = epsilon_from_psi(k);
    std::map<std::string, MPoly> b;
    for (const auto& c : fs.coords) b[c.name] = c.in_generators;
    bool ok = true;
    for (int i = 2; i <= 2 * k; ++i)
      ok = ok && eps[i - 2].substitute(b, fs.gen_ring) == MPoly::var(fs.gen_ring, "e" + std::to_string(i));
    r.add("flat." + t.str() + ".round_trip", ok);
    r.merge(verify_w_invariance(fs, default_w_generators(fs)), "flat." + t.str() + ".");
    return r;
  }
  if (t.family == 'D' && t.rank >= 4) {
    auto fs = flat_coords(t);
    if (t.rank == 4) {
      Ring G(fs.gen_ring);
      std::vector<std::pair<std::string, std::string>> list{
          {"psi2", "x2"}, {"psi4", "x4 - 1/4*x2^2"}, {"psi6", "x6 - 1/6*x2*x4 + 7/216*x2^3"}, {"psi", "p"}};
      for (auto& [n, want] : list) {
        MPoly d = fs.get(n).in_generators - G.parse(want);
        r.add("flat.D4.list." + n, d.is_zero(), ok_or(d));
      }
    }
    r.merge(verify_w_invariance(fs, default_w_generators(fs)), "flat." + t.str() + ".");
    return r;
  }
  if (t == DynkinType{'E', 6}) {
    auto fs = flat_coords_E6();
    bool homog = true;
    for (const auto& c : fs.coords)
      homog = homog && c.in_coords.is_homogeneous() && c.in_coords.total_degree() == c.degree;
    r.add("flat.E6.degrees", fs.degrees() == std::vector<int>{2, 5, 6, 8, 9, 12} && homog,
          json{{"degrees", fs.degrees()}});
    r.merge(verify_w_invariance(fs, default_w_generators(fs)), "flat.E6.");
    return r;
  }
  throw Error(Err::UnsupportedType, "flat coordinates cover A_{2r-1}, D_{r+1}, E6; got " + t.str());
}

Report family_report(const std::string& label) {
  auto f = family(label);
  Report r;
  r.merge(verify_equivariance(f), "family." + label + ".");
  r.merge(verify_normal_form(f), "family." + label + ".");
  return r;
}

Report example_fibres_report(uint64_t seed) {
  auto f = example_family();
  Report r;
  auto r0 = analyze_fibre(f, {{"v", Scalar(0)}, {"t", Scalar(1)}});
  bool ok0 = r0.points.size() == 1 && r0.points[0].ade == "A1" && r0.points[0].tjurina == 1 &&
             std::abs(r0.points[0].coords[0]) + std::abs(r0.points[0].coords[1]) < 1e-12;
  r.add("example.fibre_0_1", ok0, singularity_json(r0));

  auto r1 = analyze_fibre(f, {{"v", Scalar::frac(4, 27)}, {"t", Scalar(1)}});
  const double s = 1 / std::sqrt(3.0);
  std::vector<std::array<double, 2>> want{{-1.0 / 3, -s}, {-1.0 / 3, s}, {2.0 / 3, 0}};
  bool ok1 = r1.points.size() == 3;
  for (size_t i = 0; ok1 && i < 3; ++i) {
    const auto& p = r1.points[i];
    ok1 = p.ade == "A1" && p.tjurina == 1 && std::abs(p.coords[0] - want[i][0]) < 1e-8 &&
          std::abs(p.coords[1] - want[i][1]) < 1e-8 && std::abs(p.coords[2]) < 1e-8;
  }
  r.add("example.fibre_4/27_1", ok1, singularity_json(r1));

  auto rn = analyze_fibre_numeric(f, {{"v", 4.0 / 27}, {"t", 1.0}}, seed);
  bool okn = rn.points.size() == 3;
  for (size_t i = 0; okn && i < 3; ++i)
    okn = std::abs(rn.points[i].coords[0] - want[i][0]) < 1e-8 &&
          std::abs(rn.points[i].coords[1] - want[i][1]) < 1e-8 && rn.points[i].ade == "A1";
  r.add("example.fibre_4/27_1.numeric", okn, singularity_json(rn));

  auto r2 = analyze_fibre(f, {});
  bool ok2 = r2.points.size() == 1 && r2.points[0].tjurina == 4 && r2.points[0].ade == "D4";
  r.add("example.special_fibre", ok2, singularity_json(r2));
  return r;
}

Report example_roots_report() {
  RootSystem rs = build_root_system({'A', 5});
  Vec h;
  for (int v : {1, 2, -3, -3, 2, 1}) h.push_back(Scalar(v));
  std::vector<std::string> labels;
  for (auto k : vanishing_roots(rs, h)) labels.push_back(root_label(rs.positive_coeffs[k]));
  std::sort(labels.begin(), labels.end());
  Report r;
  std::vector<std::string> want{"a1+a2+a3+a4+a5", "a2+a3+a4", "a3"};
  r.add("example_roots.vanishing", labels == want, json{{"roots", labels}});
  Vec avg = omega_average(rs, make_omega(rs, "z2"), h);
  json a = json::array();
  for (const auto& x : avg) a.push_back(x.str());
  r.add("example_roots.omega_average_zero", avg == Vec(6, Scalar(0)), json{{"average", a}});
  return r;
}

Report quotient_report(const std::string& label, uint64_t seed) {
  Report r;
  r.merge(verify_invariant_generators(label), "quotient." + label + ".");
  r.merge(verify_quotient_pullback(label, seed), "quotient." + label + ".");
  r.merge(non_semiuniversality_check(label), "quotient." + label + ".");
  if (label == "B2" || label == "C3" || label == "G2")
    r.merge(verify_singular_locus(label), "quotient." + label + ".");
  if (label == "B2" || label == "C3" || label == "G2" || label == "F4")
    r.merge(verify_quotient_special_fibre(label), "quotient." + label + ".");
  if (label == "B2") {
    r.merge(verify_discriminant_B2(), "quotient.B2.");
    r.merge(verify_b2_grid(), "quotient.B2.");
  }
  return r;
}

std::vector<NamedPoly> e6_coefficients_from_json(const json& j) {
  Vars psi = make_vars({"psi2", "psi5", "psi6", "psi8", "psi9", "psi12"});
  std::map<std::string, Scalar> consts{{"s6", Scalar::sqrt(6)}};
  std::vector<NamedPoly> out;
  for (const auto& c : e6_flat_coefficients()) {
    if (!j.contains(c.name)) throw Error(Err::Parse, "coefficient table lacks " + c.name);
    out.push_back({c.name, parse_poly(psi, j.at(c.name).get<std::string>(), consts)});
  }
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name != "smoke" && name != "full") throw Error(Err::Usage, "suite is smoke or full, got " + name);
  Report r;
  timed(r, "", [] { return fold_table_report(); });
  for (const char* t : {"A3", "A5", "D4", "D5", "E6"})
    timed(r, std::string("klein.") + t + ".", [&] { return klein_report(t); });
  timed(r, "klein.D4.z3.", [] { return klein_report("D4", "z3"); });
  for (const char* t : {"A3", "A5", "D4"}) timed(r, "", [&] { return flat_report(t); });
  for (int k : {2, 3}) timed(r, "", [&] { return verify_a_identity(k); });
  timed(r, "", [] { return verify_d4_coefficients(); });
  for (const auto& l : family_labels()) timed(r, "", [&] { return family_report(l); });
  timed(r, "", [] { return symplectic_report(); });
  timed(r, "", [&] { return example_fibres_report(opt.seed); });
  timed(r, "", [] { return example_roots_report(); });
  for (const auto& l : quotient_labels()) timed(r, "", [&] { return quotient_report(l, opt.seed); });
  if (name == "full") {
    timed(r, "", [] { return flat_report("E6"); });
    auto table = opt.e6_table ? *opt.e6_table : e6_flat_coefficients();
    timed(r, "", [&] { return verify_e6_coefficients(table); });
    // Invariance holds for any polynomial in the psi, so a supplied table is also compared term by term.
    if (opt.e6_table)
      timed(r, "", [&] {
        Report p;
        auto ref = e6_flat_coefficients();
        for (size_t i = 0; i < ref.size(); ++i) {
          const auto* got = &table[0];
          for (const auto& c : table)
            if (c.name == ref[i].name) got = &c;
          MPoly d = got->poly - ref[i].poly;
          p.add("e6_provenance." + ref[i].name, got->name == ref[i].name && d.is_zero(), ok_or(d));
        }
        return p;
      });
    for (const char* t : {"A3", "A5", "D4"})
      timed(r, "", [&] { return quiver_sample_report(t, opt.samples, opt.seed); });
    timed(r, "", [&] { return quiver_action_report("A3", "sigma", false, opt.seed, opt.samples); });
    timed(r, "", [&] { return quiver_action_report("A5", "sigma", false, opt.seed, opt.samples); });
    timed(r, "", [&] { return quiver_action_report("D4", "sigma", true, opt.seed, opt.samples); });
    timed(r, "", [&] { return quiver_action_report("D4", "rho", true, opt.seed, opt.samples); });
  }
  return r;
}

}  // namespace swb
