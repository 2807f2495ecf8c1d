#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "singwb/singwb.h"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(SINGWB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("C API handles and errors") {
  swb_report* r = nullptr;
  CHECK(swb_fold("D4", "s3", &r) == SWB_OK);
  CHECK(swb_report_ok(r) == 1);
  CHECK(swb_report_size(r) == 1);
  const char* name = nullptr;
  int st = -1;
  CHECK(swb_report_check(r, 0, &name, &st) == SWB_OK);
  CHECK(std::string(name) == "fold.D4.s3");
  CHECK(st == 0);
  CHECK(swb_report_check(r, 5, &name, &st) == SWB_ERR_DIMENSION_MISMATCH);
  char* js = nullptr;
  CHECK(swb_report_json(r, "fold", 1, 0, &js) == SWB_OK);
  CHECK(json::parse(js)["checks"][0]["witness"]["folded"] == "G2");
  swb_string_free(js);
  swb_report_free(r);

  CHECK(swb_fold("X9", "z2", &r) == SWB_ERR_UNSUPPORTED_TYPE);
  CHECK(std::string(swb_last_error()).find("X9") != std::string::npos);
  CHECK(swb_fold(nullptr, "z2", &r) == SWB_ERR_NULL_ARGUMENT);
  CHECK(std::string(swb_status_name(SWB_ERR_PULLBACK_MISMATCH)) == "PullbackMismatch");

  swb_family* f = nullptr;
  CHECK(swb_family_open("Q5", &f) == SWB_ERR_UNSUPPORTED_LABEL);
  REQUIRE(swb_family_open("C3", &f) == SWB_OK);
  CHECK(swb_family_json(f, &js) == SWB_OK);
  json fj = json::parse(js);
  swb_string_free(js);
  CHECK(fj["params"] == json({"t2", "t4", "t6"}));
  CHECK(fj["omega_action"]["sigma"]["z"] == "-z");
  CHECK(swb_fibre_analyze(f, "t2=0,t4=0,t6=0", 0, 1, &js) == SWB_OK);
  json sj = json::parse(js);
  swb_string_free(js);
  CHECK(sj["points"][0]["ade"] == "D4");
  CHECK(swb_fibre_analyze(f, "t9=1", 0, 1, &js) == SWB_ERR_VARIABLE_MISMATCH);
  CHECK(swb_fibre_analyze(f, "t2", 0, 1, &js) == SWB_ERR_USAGE);
  // A tiny budget stops the Groebner computation.
  CHECK(swb_fibre_analyze(f, "t2=1,t4=2,t6=3", 3, 1, &js) == SWB_ERR_BUDGET_EXCEEDED);
  swb_family_free(f);

  swb_quotient* q = nullptr;
  REQUIRE(swb_quotient_open("G2", &q) == SWB_OK);
  CHECK(swb_quotient_json(q, &js) == SWB_OK);
  json qj = json::parse(js);
  swb_string_free(js);
  CHECK(qj["target_ade"] == "E7");
  CHECK(qj["fit"]["found"] == true);
  CHECK(swb_quotient_verify(q, 7, &r) == SWB_OK);
  CHECK(swb_report_failures(r) == 0);
  swb_report_free(r);
  swb_quotient_free(q);

  CHECK(swb_suite("full", 1, 10, "{not json", &r) == SWB_ERR_PARSE);
  CHECK(swb_identity_verify("nope", &r) == SWB_ERR_USAGE);
}

TEST_CASE("CLI exit codes") {
  CHECK(cli("fold --type D4 --omega s3").code == 0);
  CHECK(cli("fold --type D4 --omega s3").out.find("G2") != std::string::npos);
  CHECK(cli("fold --type X9").code == 2);
  CHECK(cli("fold").code == 2);
  CHECK(cli("nonsense").code == 2);
  CHECK(cli("quotient verify --label B2").code == 0);
  CHECK(cli("quotient verify --label Z2").code == 2);
  CHECK(cli("fiber analyze --label C3 --params t2=1,t4=2,t6=3 --budget 3").code == 3);
  auto bad = "/tmp/singwb_bad_table.json";
  {
    std::ifstream in(std::string(SINGWB_GOLDEN_DIR) + "/e6_coeffs.json");
    json t = json::parse(in);
    t["Axy"] = "1/(3*s6)*psi5";
    std::ofstream(bad) << t.dump();
  }
  auto r = cli(std::string("suite full --trials 10 --e6-table ") + bad);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  e6_provenance.Axy") != std::string::npos);
}

TEST_CASE("CLI golden outputs") {
  std::string g = SINGWB_GOLDEN_DIR;
  CHECK(cli("fold --type D4 --omega s3 --out json").out == slurp(g + "/cli_fold_d4_s3.json"));
  CHECK(cli("quotient verify --label B2 --out json").out == slurp(g + "/cli_quotient_b2.json"));
  CHECK(cli("fiber analyze --label example --params v=4/27,t=1 --out json").out ==
        slurp(g + "/cli_fiber_example.json"));
  // --out with a path writes the same JSON.
  auto path = "/tmp/singwb_fold.json";
  CHECK(cli(std::string("fold --type D4 --omega s3 --out ") + path).code == 0);
  CHECK(slurp(path) == slurp(g + "/cli_fold_d4_s3.json"));
}

TEST_CASE("every module operation is reachable from the CLI") {
  // module -> command exercising it
  const std::vector<std::pair<std::string, std::string>> cover = {
      {"rootdata.fold", "rootdata fold --type A5 --omega z2"},
      {"rootdata.table", "rootdata table"},
      {"rootdata.vanishing_roots", "rootdata vanishing"},
      {"klein.verify", "klein verify --type D4"},
      {"quiver.verify_action", "quiver verify-action --type A3 --trials 10"},
      {"quiver.verify_action.s3", "quiver verify-action --type D4 --generator rho --s3 --trials 10"},
      {"quiver.sample", "quiver sample --type D4 --mu 1,1,-2,1,1 --seed 42 --trials 100 --out json"},
      {"quiver.symplectic", "quiver symplectic"},
      {"flat.coords", "flat --type E6 --out json"},
      {"flat.verify", "flat --type D4 --verify"},
      {"deform.family", "family --label C3 --show"},
      {"deform.equivariance", "family --label G2"},
      {"deform.identity", "identity --name a_identity.2"},
      {"deform.d4", "identity --name d4_coefficients"},
      {"deform.fibre", "fiber analyze --label B2 --params t2=1,t4=0 --out json"},
      {"deform.example", "fiber example"},
      {"quotient.verify", "quotient verify --label C3 --out json"},
      {"quotient.discriminant", "quotient discriminant --label B2"},
      {"quotient.show", "quotient show --label F4"},
      {"cli.suite", "suite smoke"},
  };
  for (const auto& [op, cmd] : cover) {
    INFO(op << ": " << cmd);
    auto r = cli(cmd);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }
  auto flat = json::parse(cli("flat --type E6 --out json").out);
  CHECK(flat["degrees"] == json({2, 5, 6, 8, 9, 12}));
}
