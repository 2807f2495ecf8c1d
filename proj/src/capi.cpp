#include "singwb/singwb.h"

#include <cstring>
#include <sstream>

#include "singwb/flat.hpp"
#include "singwb/suite.hpp"

struct swb_report {
  swb::Report r;
};

struct swb_family {
  swb::DeformationFamily f;
};

struct swb_quotient {
  swb::QuotientFamily q;
};

namespace {

using swb::json;

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn and maps exceptions to status codes.
template <class F>
swb_status guard(F&& fn) {
  g_last_error.clear();
  try {
    fn();
    return SWB_OK;
  } catch (const swb::Error& e) {
    g_last_error = e.what();
    return static_cast<swb_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SWB_ERR_INTERNAL;
  }
}

swb_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return SWB_ERR_NULL_ARGUMENT;
}

swb_status emit(swb::Report r, swb_report** out) {
  *out = new swb_report{std::move(r)};
  return SWB_OK;
}

std::string str_or(const char* s, const char* dflt) { return s ? std::string(s) : std::string(dflt); }

json action_json(const swb::CoordAction& a) {
  json j = json::object();
  for (const auto& [n, p] : a.images) {
    if (p == swb::MPoly::var(p.vars(), n)) continue;
    j[n] = p.str();
  }
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* swb_version(void) { return swb::library_version(); }

const char* swb_status_name(swb_status s) {
  switch (s) {
    case SWB_OK:
      return "Ok";
    case SWB_ERR_NULL_ARGUMENT:
      return "NullArgument";
    case SWB_ERR_INTERNAL:
      return "Internal";
    default:
      if (s >= 1 && s <= 16) return swb::err_name(static_cast<swb::Err>(s));
      return "Unknown";
  }
}

const char* swb_last_error(void) { return g_last_error.c_str(); }

void swb_string_free(char* s) { std::free(s); }

void swb_report_free(swb_report* r) { delete r; }

int swb_report_ok(const swb_report* r) { return r && r->r.ok() ? 1 : 0; }

size_t swb_report_size(const swb_report* r) { return r ? r->r.checks.size() : 0; }

size_t swb_report_failures(const swb_report* r) { return r ? r->r.failures() : 0; }

swb_status swb_report_check(const swb_report* r, size_t i, const char** name, int* status) {
  if (!r || !name || !status) return null_arg("report_check");
  if (i >= r->r.checks.size()) {
    g_last_error = "check index out of range";
    return SWB_ERR_DIMENSION_MISMATCH;
  }
  *name = r->r.checks[i].name.c_str();
  *status = static_cast<int>(r->r.checks[i].status);
  return SWB_OK;
}

swb_status swb_report_json(const swb_report* r, const char* command, uint64_t seed, int with_timing,
                           char** out) {
  if (!r || !out) return null_arg("report_json");
  return guard([&] {
    *out = dup(swb::run_report_json(str_or(command, ""), r->r, seed, with_timing != 0).dump(2));
  });
}

swb_status swb_fold(const char* type, const char* omega, swb_report** out) {
  if (!type || !out) return null_arg("fold");
  return guard([&] { emit(swb::fold_report(type, str_or(omega, "z2")), out); });
}

swb_status swb_fold_table(swb_report** out) {
  if (!out) return null_arg("fold_table");
  return guard([&] { emit(swb::fold_table_report(), out); });
}

swb_status swb_example_roots(swb_report** out) {
  if (!out) return null_arg("example_roots");
  return guard([&] { emit(swb::example_roots_report(), out); });
}

swb_status swb_klein_verify(const char* type, const char* omega, swb_report** out) {
  if (!type || !out) return null_arg("klein_verify");
  return guard([&] { emit(swb::klein_report(type, str_or(omega, "")), out); });
}

swb_status swb_quiver_verify_action(const char* type, const char* generator, int s3, uint64_t seed,
                                    int trials, swb_report** out) {
  if (!type || !generator || !out) return null_arg("quiver_verify_action");
  return guard([&] { emit(swb::quiver_action_report(type, generator, s3 != 0, seed, trials), out); });
}

swb_status swb_symplectic(swb_report** out) {
  if (!out) return null_arg("symplectic");
  return guard([&] { emit(swb::symplectic_report(), out); });
}

swb_status swb_quiver_sample(const char* type, const double* mu, size_t n_mu, int samples,
                             uint64_t seed, swb_report** out) {
  if (!type || !out) return null_arg("quiver_sample");
  return guard([&] {
    std::optional<std::vector<swb::ComplexF>> m;
    if (mu) {
      m.emplace();
      for (size_t i = 0; i < n_mu; ++i) m->emplace_back(mu[2 * i], mu[2 * i + 1]);
    }
    emit(swb::quiver_sample_report(type, samples, seed, m), out);
  });
}

swb_status swb_flat_coords(const char* type, char** json_out) {
  if (!type || !json_out) return null_arg("flat_coords");
  return guard([&] {
    auto fs = swb::flat_coords(swb::parse_type(type));
    json coords = json::array();
    for (const auto& c : fs.coords)
      coords.push_back(json{{"name", c.name},
                            {"degree", c.degree},
                            {"text", c.in_generators.str()},
                            {"in_generators", swb::poly_to_json(c.in_generators)},
                            {"in_coords", swb::poly_to_json(c.in_coords)}});
    json gens = json::array();
    for (size_t i = 0; i < fs.generators.size(); ++i)
      gens.push_back(json{{"name", fs.gen_ring->name(i)}, {"poly", fs.generators[i].str()}});
    json j{{"type", fs.dtype.str()},
           {"coxeter_number", fs.coxeter_number},
           {"degrees", fs.degrees()},
           {"generators", gens},
           {"coords", coords}};
    *json_out = dup(j.dump(2));
  });
}

swb_status swb_flat_verify(const char* type, swb_report** out) {
  if (!type || !out) return null_arg("flat_verify");
  return guard([&] { emit(swb::flat_report(type), out); });
}

swb_status swb_family_open(const char* label, swb_family** out) {
  if (!label || !out) return null_arg("family_open");
  return guard([&] {
    std::string l = label;
    *out = new swb_family{l == "example" ? swb::example_family() : swb::family(l)};
  });
}

void swb_family_free(swb_family* f) { delete f; }

swb_status swb_family_json(const swb_family* f, char** json_out) {
  if (!f || !json_out) return null_arg("family_json");
  return guard([&] {
    const auto& F = f->f;
    json actions = json::object();
    for (const auto& a : F.omega_action) actions[a.generator] = action_json(a);
    json rel = json::array();
    for (const auto& [word, n] : F.relations) rel.push_back(json{{"word", word}, {"order", n}});
    json j{{"label", F.label},
           {"source", F.source.str()},
           {"ambient", F.ambient},
           {"params", F.params},
           {"restricted", F.restricted},
           {"parent", F.parent},
           {"zeroed", F.zeroed},
           {"equation", F.equation.str()},
           {"equation_poly", swb::poly_to_json(F.equation)},
           {"special_fibre", F.special_fibre().str()},
           {"omega_action", actions},
           {"relations", rel}};
    *json_out = dup(j.dump(2));
  });
}

swb_status swb_family_verify(const swb_family* f, swb_report** out) {
  if (!f || !out) return null_arg("family_verify");
  return guard([&] {
    if (f->f.label == "example") {
      swb::Report r;
      r.skip("family.example", "no Omega action on the example family");
      emit(r, out);
      return;
    }
    emit(swb::family_report(f->f.label), out);
  });
}

swb_status swb_identity_verify(const char* name, swb_report** out) {
  if (!name || !out) return null_arg("identity_verify");
  return guard([&] {
    std::string n = name;
    if (n == "a_identity.2") emit(swb::verify_a_identity(2), out);
    else if (n == "a_identity.3") emit(swb::verify_a_identity(3), out);
    else if (n == "d4_coefficients") emit(swb::verify_d4_coefficients(), out);
    else if (n == "e6_coefficients") emit(swb::verify_e6_coefficients(swb::e6_flat_coefficients()), out);
    else throw swb::Error(swb::Err::Usage, "unknown identity '" + n + "'");
  });
}

swb_status swb_fibre_analyze(const swb_family* f, const char* params, size_t budget, uint64_t seed,
                             char** json_out) {
  if (!f || !json_out) return null_arg("fibre_analyze");
  return guard([&] {
    std::map<std::string, std::string> raw;
    for (const auto& kv : split(str_or(params, ""), ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw swb::Error(swb::Err::Usage, "parameter '" + kv + "' lacks '='");
      raw[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    bool numeric = false;
    for (const auto& [k, v] : raw)
      if (v.find_first_of(".eE") != std::string::npos) numeric = true;
    swb::SingularityReport sr;
    if (numeric) {
      std::map<std::string, double> p;
      for (const auto& [k, v] : raw) {
        try {
          p[k] = std::stod(v);
        } catch (const std::exception&) {
          throw swb::Error(swb::Err::Parse, "bad value '" + v + "' for " + k);
        }
      }
      sr = swb::analyze_fibre_numeric(f->f, p, seed);
    } else {
      std::map<std::string, swb::Scalar> p;
      for (const auto& [k, v] : raw) p[k] = swb::Scalar(swb::parse_rational(v));
      sr = swb::analyze_fibre(f->f, p, budget ? budget : 2000000);
    }
    json j = swb::singularity_json(sr);
    for (size_t i = 0; i < sr.points.size(); ++i)
      if (sr.points[i].exact) {
        json t = json::array();
        for (const auto& c : *sr.points[i].exact) t.push_back(c.str());
        j["points"][i]["text"] = t;
      }
    j["label"] = f->f.label;
    j["params"] = raw;
    *json_out = dup(j.dump(2));
  });
}

swb_status swb_example_fibres(uint64_t seed, swb_report** out) {
  if (!out) return null_arg("example_fibres");
  return guard([&] { emit(swb::example_fibres_report(seed), out); });
}

swb_status swb_quotient_open(const char* label, swb_quotient** out) {
  if (!label || !out) return null_arg("quotient_open");
  return guard([&] { *out = new swb_quotient{swb::quotient_family(label)}; });
}

void swb_quotient_free(swb_quotient* q) { delete q; }

swb_status swb_quotient_json(const swb_quotient* q, char** json_out) {
  if (!q || !json_out) return null_arg("quotient_json");
  return guard([&] {
    const auto& Q = q->q;
    json map = json::object();
    for (const auto& [n, p] : Q.invariant_map) map[n] = p.str();
    json j{{"source_label", Q.source_label},
           {"quotient_vars", Q.quotient_vars},
           {"params", Q.params},
           {"equation", Q.equation.str()},
           {"equation_poly", swb::poly_to_json(Q.equation)},
           {"special_fibre", Q.special_fibre().str()},
           {"invariant_map", map},
           {"map_complete", Q.map_complete},
           {"target_ade", Q.target_ade},
           {"target_rank", Q.target_rank}};
    if (Q.source_label == "G2") {
      auto fit = swb::fit_g2_final_form();
      j["fit"] = json{{"found", fit.found}, {"k", fit.k.str()}, {"c", fit.c.str()},
                      {"d", fit.d.str()},   {"b", fit.b.str()}};
    }
    *json_out = dup(j.dump(2));
  });
}

swb_status swb_quotient_verify(const swb_quotient* q, uint64_t seed, swb_report** out) {
  if (!q || !out) return null_arg("quotient_verify");
  return guard([&] { emit(swb::quotient_report(q->q.source_label, seed), out); });
}

swb_status swb_discriminant_b2(swb_report** out, char** json_out) {
  if (!out) return null_arg("discriminant_b2");
  return guard([&] {
    if (json_out) {
      json comps = json::array();
      for (const auto& c : swb::discriminant_B2())
        comps.push_back(json{{"name", c.name}, {"condition", c.condition.str()}, {"t4", c.locus.str()}});
      *json_out = dup(json{{"label", "B2"}, {"components", comps}}.dump(2));
    }
    emit(swb::verify_discriminant_B2(), out);
  });
}

swb_status swb_suite(const char* name, uint64_t seed, int samples, const char* e6_table_json,
                     swb_report** out) {
  if (!name || !out) return null_arg("suite");
  return guard([&] {
    swb::SuiteOptions opt;
    opt.seed = seed;
    if (samples > 0) opt.samples = samples;
    if (e6_table_json) {
      json j;
      try {
        j = json::parse(e6_table_json);
      } catch (const json::exception& e) {
        throw swb::Error(swb::Err::Parse, e.what());
      }
      opt.e6_table = swb::e6_coefficients_from_json(j);
    }
    emit(swb::run_suite(name, opt), out);
  });
}

}  // extern "C"
