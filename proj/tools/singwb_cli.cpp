#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "singwb/singwb.h"

using nlohmann::json;

namespace {

struct Options {
  std::string type, label, omega, params, out, generator = "sigma", name, mu, e6_table;
  uint64_t seed = 42;
  int trials = 100;
  size_t budget = 0;
  bool timing = false, s3 = false, show = false, verify = false;
};

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

int exit_for(swb_status s) {
  switch (s) {
    case SWB_OK:
      return kPass;
    case SWB_ERR_BUDGET_EXCEEDED:
    case SWB_ERR_CLOSURE_BUDGET_EXCEEDED:
      return kBudget;
    case SWB_ERR_USAGE:
    case SWB_ERR_PARSE:
    case SWB_ERR_UNSUPPORTED_TYPE:
    case SWB_ERR_UNSUPPORTED_LABEL:
    case SWB_ERR_VARIABLE_MISMATCH:
    case SWB_ERR_DIMENSION_MISMATCH:
    case SWB_ERR_NULL_ARGUMENT:
      return kUsage;
    default:
      return kFail;
  }
}

int fail(swb_status s) {
  std::string msg = swb_last_error();
  std::cerr << "error: " << (msg.empty() ? swb_status_name(s) : msg) << "\n";
  return exit_for(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  swb_string_free(s);
  return out;
}

// "json" or "-": JSON on stdout; "" or "text": text on stdout; else a JSON file.
void write_doc(const Options& o, const std::string& json_text, const std::string& text) {
  if (o.out == "json" || o.out == "-") {
    std::cout << json_text << "\n";
  } else if (o.out.empty() || o.out == "text") {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    f << json_text << "\n";
    std::cout << text;
  }
}

std::string report_text(const json& j, bool timing) {
  std::ostringstream s;
  s << j.at("command").get<std::string>() << " (singwb " << j.at("version").get<std::string>() << ")\n";
  size_t fails = 0;
  for (const auto& c : j.at("checks")) {
    std::string st = c.at("status").get<std::string>();
    if (st == "fail") ++fails;
    std::string tag = st == "pass" ? "PASS" : st == "fail" ? "FAIL" : "SKIP";
    s << tag << "  " << c.at("name").get<std::string>();
    if (!c.at("witness").is_null()) {
      std::string w = c.at("witness").dump();
      if (w.size() > 160) w = w.substr(0, 157) + "...";
      s << "  " << w;
    }
    if (timing && c.contains("runtime_ms")) s << "  [" << c.at("runtime_ms").get<long>() << " ms]";
    s << "\n";
  }
  s << j.at("checks").size() << " checks, " << fails << " failed\n";
  return s.str();
}

int finish_report(const Options& o, const std::string& command, swb_status s, swb_report* r) {
  if (s != SWB_OK) return fail(s);
  char* js = nullptr;
  swb_status s2 = swb_report_json(r, command.c_str(), o.seed, o.timing ? 1 : 0, &js);
  int ok = swb_report_ok(r);
  swb_report_free(r);
  if (s2 != SWB_OK) return fail(s2);
  std::string text = take(js);
  write_doc(o, text, report_text(json::parse(text), o.timing));
  return ok ? kPass : kFail;
}

std::string join_cmd(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

int run_fold(const Options& o) {
  swb_report* r = nullptr;
  std::string om = o.omega.empty() ? "z2" : o.omega;
  swb_status s = swb_fold(o.type.c_str(), om.c_str(), &r);
  return finish_report(o, join_cmd({"fold --type", o.type, "--omega", om}), s, r);
}

int run_flat(const Options& o) {
  if (o.verify) {
    swb_report* r = nullptr;
    swb_status s = swb_flat_verify(o.type.c_str(), &r);
    return finish_report(o, "flat --type " + o.type + " --verify", s, r);
  }
  char* js = nullptr;
  swb_status s = swb_flat_coords(o.type.c_str(), &js);
  if (s != SWB_OK) return fail(s);
  std::string text = take(js);
  json j = json::parse(text);
  std::ostringstream t;
  t << "flat coordinates of " << j["type"].get<std::string>() << " (Coxeter number "
    << j["coxeter_number"].get<int>() << ")\n";
  t << "degrees:";
  for (int d : j["degrees"]) t << " " << d;
  t << "\n";
  for (const auto& c : j["coords"])
    t << c["name"].get<std::string>() << " [" << c["degree"].get<int>() << "] = " << c["text"].get<std::string>()
      << "\n";
  write_doc(o, text, t.str());
  return kPass;
}

int run_family(const Options& o) {
  swb_family* f = nullptr;
  swb_status s = swb_family_open(o.label.c_str(), &f);
  if (s != SWB_OK) return fail(s);
  if (o.show) {
    char* js = nullptr;
    s = swb_family_json(f, &js);
    swb_family_free(f);
    if (s != SWB_OK) return fail(s);
    std::string text = take(js);
    json j = json::parse(text);
    std::ostringstream t;
    t << "family " << j["label"].get<std::string>() << " over " << j["source"].get<std::string>() << "\n";
    t << "parameters:";
    for (const auto& p : j["params"]) t << " " << p.get<std::string>();
    t << "\n" << "equation: " << j["equation"].get<std::string>() << " = 0\n";
    t << "special fibre: " << j["special_fibre"].get<std::string>() << " = 0\n";
    for (auto& [g, im] : j["omega_action"].items()) {
      t << g << ":";
      for (auto& [v, p] : im.items()) t << " " << v << " -> " << p.get<std::string>() << ";";
      t << "\n";
    }
    write_doc(o, text, t.str());
    return kPass;
  }
  swb_report* r = nullptr;
  s = swb_family_verify(f, &r);
  swb_family_free(f);
  return finish_report(o, "family --label " + o.label, s, r);
}

int run_fiber(const Options& o) {
  swb_family* f = nullptr;
  swb_status s = swb_family_open(o.label.c_str(), &f);
  if (s != SWB_OK) return fail(s);
  char* js = nullptr;
  s = swb_fibre_analyze(f, o.params.c_str(), o.budget, o.seed, &js);
  swb_family_free(f);
  if (s != SWB_OK) return fail(s);
  std::string text = take(js);
  json j = json::parse(text);
  std::ostringstream t;
  t << "fibre of " << o.label << " at " << (o.params.empty() ? "0" : o.params) << ": ";
  if (j["smooth"].get<bool>()) {
    t << "smooth\n";
  } else {
    t << j["points"].size() << " singular point(s), global Tjurina " << j["global_tjurina"].get<long>() << "\n";
    for (const auto& p : j["points"]) {
      t << "  (";
      for (size_t i = 0; i < p["coords"].size(); ++i) {
        const json& c = p.contains("text") ? p["text"][i] : p["coords"][i];
        t << (i ? ", " : "") << (c.is_string() ? c.get<std::string>() : c.dump());
      }
      t << ")  tau = " << p["tjurina"].get<long>() << "  " << p["ade"].get<std::string>() << "\n";
    }
  }
  write_doc(o, text, t.str());
  return kPass;
}

int run_quotient_show(const Options& o) {
  swb_quotient* q = nullptr;
  swb_status s = swb_quotient_open(o.label.c_str(), &q);
  if (s != SWB_OK) return fail(s);
  char* js = nullptr;
  s = swb_quotient_json(q, &js);
  swb_quotient_free(q);
  if (s != SWB_OK) return fail(s);
  std::string text = take(js);
  json j = json::parse(text);
  std::ostringstream t;
  t << "quotient of " << j["source_label"].get<std::string>() << ": " << j["equation"].get<std::string>()
    << " = 0\n";
  t << "special fibre: " << j["target_ade"].get<std::string>() << "\n";
  for (auto& [v, p] : j["invariant_map"].items()) t << "  " << v << " = " << p.get<std::string>() << "\n";
  write_doc(o, text, t.str());
  return kPass;
}

int run_quotient_verify(const Options& o) {
  swb_quotient* q = nullptr;
  swb_status s = swb_quotient_open(o.label.c_str(), &q);
  if (s != SWB_OK) return fail(s);
  swb_report* r = nullptr;
  s = swb_quotient_verify(q, o.seed, &r);
  swb_quotient_free(q);
  return finish_report(o, "quotient verify --label " + o.label, s, r);
}

int run_discriminant(const Options& o) {
  if (o.label != "B2") {
    std::cerr << "error: the discriminant is available for B2 only\n";
    return kUsage;
  }
  swb_report* r = nullptr;
  char* js = nullptr;
  swb_status s = swb_discriminant_b2(&r, &js);
  if (s != SWB_OK) return fail(s);
  json comps = json::parse(take(js));
  if (o.out.empty() || o.out == "text")
    for (const auto& c : comps["components"])
      std::cout << c["name"].get<std::string>() << ": " << c["condition"].get<std::string>() << " = 0  (t4 = "
                << c["t4"].get<std::string>() << ")\n";
  return finish_report(o, "quotient discriminant --label B2", s, r);
}

int run_quiver_sample(const Options& o) {
  std::vector<double> mu;
  std::stringstream ss(o.mu);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      mu.push_back(std::stod(item));
      mu.push_back(0.0);
    } catch (const std::exception&) {
      std::cerr << "error: bad mu entry '" << item << "'\n";
      return kUsage;
    }
  }
  swb_report* r = nullptr;
  swb_status s = swb_quiver_sample(o.type.c_str(), o.mu.empty() ? nullptr : mu.data(), mu.size() / 2,
                                   o.trials, o.seed, &r);
  std::string cmd = "quiver sample --type " + o.type + (o.mu.empty() ? "" : " --mu " + o.mu);
  return finish_report(o, cmd, s, r);
}

int run_suite(const Options& o, const std::string& name) {
  std::string table;
  if (!o.e6_table.empty()) {
    std::ifstream in(o.e6_table);
    if (!in) {
      std::cerr << "error: cannot read " << o.e6_table << "\n";
      return kUsage;
    }
    std::stringstream b;
    b << in.rdbuf();
    table = b.str();
  }
  swb_report* r = nullptr;
  swb_status s = swb_suite(name.c_str(), o.seed, o.trials, table.empty() ? nullptr : table.c_str(), &r);
  return finish_report(o, "suite " + name, s, r);
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--out", o.out, "json | text | output path (JSON)");
  c->add_option("--seed", o.seed, "random seed");
  c->add_flag("--timing", o.timing, "include runtime_ms in JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singwb: simple singularities workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(swb_version()));
  Options o;
  std::function<int()> action;

  auto fold_cmd = [&](CLI::App* c) {
    c->add_option("--type", o.type, "simply laced type, e.g. A5")->required();
    c->add_option("--omega", o.omega, "z2 | z3 | s3");
    add_common(c, o);
    c->callback([&] { action = [&] { return run_fold(o); }; });
  };
  fold_cmd(app.add_subcommand("fold", "fold a Dynkin diagram by a diagram automorphism group"));
  auto* rootdata = app.add_subcommand("rootdata", "root data");
  rootdata->require_subcommand(1);
  fold_cmd(rootdata->add_subcommand("fold", "fold a Dynkin diagram"));
  auto* table = rootdata->add_subcommand("table", "the folding table");
  add_common(table, o);
  table->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_fold_table(&r);
      return finish_report(o, "rootdata table", s, r);
    };
  });
  auto* roots = rootdata->add_subcommand("vanishing", "vanishing roots of A5 and the Omega average");
  add_common(roots, o);
  roots->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_example_roots(&r);
      return finish_report(o, "rootdata vanishing", s, r);
    };
  });

  auto* klein = app.add_subcommand("klein", "Klein invariants and relations");
  klein->require_subcommand(1);
  auto* kv = klein->add_subcommand("verify", "Gamma-invariance, relation and Omega-actions");
  kv->add_option("--type", o.type)->required();
  kv->add_option("--omega", o.omega);
  add_common(kv, o);
  kv->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_klein_verify(o.type.c_str(), o.omega.c_str(), &r);
      return finish_report(o, join_cmd({"klein verify --type", o.type, o.omega.empty() ? "" : "--omega " + o.omega}),
                           s, r);
    };
  });

  auto* quiver = app.add_subcommand("quiver", "McKay quiver representations");
  quiver->require_subcommand(1);
  auto* va = quiver->add_subcommand("verify-action", "admissibility, symplecticity, moment equivariance");
  va->add_option("--type", o.type)->required();
  va->add_option("--generator", o.generator, "sigma | rho");
  va->add_flag("--s3", o.s3, "use the S3 action on D4");
  va->add_option("--trials", o.trials);
  add_common(va, o);
  va->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_quiver_verify_action(o.type.c_str(), o.generator.c_str(), o.s3, o.seed, o.trials, &r);
      return finish_report(o, join_cmd({"quiver verify-action --type", o.type, "--generator", o.generator,
                                        o.s3 ? "--s3" : ""}),
                           s, r);
    };
  });
  auto* qs = quiver->add_subcommand("sample", "sample moment fibres and check the family equation");
  qs->add_option("--type", o.type)->required();
  qs->add_option("--mu", o.mu, "comma separated mu_0..mu_n");
  qs->add_option("--trials", o.trials);
  add_common(qs, o);
  qs->callback([&] { action = [&] { return run_quiver_sample(o); }; });
  auto* sy = quiver->add_subcommand("symplectic", "reference actions preserve the symplectic form");
  add_common(sy, o);
  sy->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_symplectic(&r);
      return finish_report(o, "quiver symplectic", s, r);
    };
  });

  auto* flat = app.add_subcommand("flat", "flat coordinates");
  flat->add_option("--type", o.type)->required();
  flat->add_flag("--verify", o.verify, "run the identity and invariance checks");
  add_common(flat, o);
  flat->callback([&] { action = [&] { return run_flat(o); }; });

  auto* fam = app.add_subcommand("family", "deformation families");
  fam->add_option("--label", o.label)->required();
  fam->add_flag("--show", o.show, "print the family instead of verifying it");
  add_common(fam, o);
  fam->callback([&] { action = [&] { return run_family(o); }; });

  auto* ident = app.add_subcommand("identity", "coefficient identities");
  ident->add_option("--name", o.name, "a_identity.2 | a_identity.3 | d4_coefficients | e6_coefficients")
      ->required();
  add_common(ident, o);
  ident->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_identity_verify(o.name.c_str(), &r);
      return finish_report(o, "identity --name " + o.name, s, r);
    };
  });

  auto* fiber = app.add_subcommand("fiber", "fibre singularity analysis");
  fiber->require_subcommand(1);
  auto* fa = fiber->add_subcommand("analyze", "singular points, Tjurina numbers, ADE labels");
  fa->add_option("--label", o.label)->required();
  fa->add_option("--params", o.params, "k=v,... (missing parameters are 0)");
  fa->add_option("--budget", o.budget, "Groebner budget");
  add_common(fa, o);
  fa->callback([&] { action = [&] { return run_fiber(o); }; });
  auto* fe = fiber->add_subcommand("example", "the three fibres of the two-parameter D4 family");
  add_common(fe, o);
  fe->callback([&] {
    action = [&] {
      swb_report* r = nullptr;
      swb_status s = swb_example_fibres(o.seed, &r);
      return finish_report(o, "fiber example", s, r);
    };
  });

  auto* quot = app.add_subcommand("quotient", "quotient families");
  quot->require_subcommand(1);
  auto* qv = quot->add_subcommand("verify", "invariants, pullback, certificates, special fibre");
  qv->add_option("--label", o.label)->required();
  add_common(qv, o);
  qv->callback([&] { action = [&] { return run_quotient_verify(o); }; });
  auto* qd = quot->add_subcommand("discriminant", "discriminant components");
  qd->add_option("--label", o.label)->required();
  add_common(qd, o);
  qd->callback([&] { action = [&] { return run_discriminant(o); }; });
  auto* qsh = quot->add_subcommand("show", "quotient equation and invariant map");
  qsh->add_option("--label", o.label)->required();
  add_common(qsh, o);
  qsh->callback([&] { action = [&] { return run_quotient_show(o); }; });

  auto* suite = app.add_subcommand("suite", "composite verification suites");
  std::string suite_name;
  suite->add_option("name", suite_name, "smoke | full")->required()->check(CLI::IsMember({"smoke", "full"}));
  suite->add_option("--trials", o.trials, "Monte Carlo samples");
  suite->add_option("--e6-table", o.e6_table, "replacement E6 coefficient table (JSON)");
  add_common(suite, o);
  suite->callback([&] { action = [&] { return run_suite(o, suite_name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  return action ? action() : kUsage;
}
