#include <doctest.h>

#include <fstream>

#include "singwb/suite.hpp"

using namespace swb;

TEST_CASE("smoke suite") {
  auto r = run_suite("smoke");
  CHECK(r.checks.size() >= 25);
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.witness.dump());
    CHECK(c.status == Status::Pass);
  }
  CHECK_THROWS_AS(run_suite("medium"), Error);
}

TEST_CASE("full suite is reproducible and catches a corrupted table") {
  SuiteOptions opt;
  opt.seed = 42;
  auto a = run_report_json("suite full", run_suite("full", opt), 42).dump();
  auto b = run_report_json("suite full", run_suite("full", opt), 42).dump();
  CHECK(a == b);
  CHECK(json::parse(a)["checks"].size() > run_suite("smoke").checks.size());

  std::ifstream in(std::string(SINGWB_GOLDEN_DIR) + "/e6_coeffs.json");
  json table = json::parse(in);
  opt.e6_table = e6_coefficients_from_json(table);
  CHECK(run_suite("full", opt).ok());
  // One wrong sign in Ay.
  table["Ay"] = "1/48*(-psi8 - 1/4*psi6*psi2 - 1/192*psi2^4)";
  opt.e6_table = e6_coefficients_from_json(table);
  auto bad = run_suite("full", opt);
  CHECK_FALSE(bad.ok());
  bool named = false;
  for (const auto& c : bad.checks)
    if (c.status == Status::Fail) {
      CHECK(c.name == "e6_provenance.Ay");
      named = true;
    }
  CHECK(named);
  table.erase("A0");
  CHECK_THROWS_AS(e6_coefficients_from_json(table), Error);
}

TEST_CASE("runtime stamps only with timing") {
  auto r = fold_table_report();
  auto j = run_report_json("t", r, 0, false);
  CHECK(j["checks"][0]["runtime_ms"] == 0);
}

TEST_CASE("fixed mu sampling") {
  auto r = quiver_sample_report("D4", 20, 42, std::vector<ComplexF>{1, 1, -2, 1, 1});
  CHECK(r.ok());
  CHECK_THROWS_AS(quiver_sample_report("D4", 5, 42, std::vector<ComplexF>{1, 1}), Error);
}
