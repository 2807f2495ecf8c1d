#include "doctest.h"
#include "singwb/error.hpp"
#include "singwb/klein.hpp"

using namespace swb;

namespace {
void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.witness.dump());
    CHECK(c.status != Status::Fail);
  }
}
}  // namespace

TEST_CASE("group orders") {
  CHECK(enumerate_group(cyclic_group(1)).size() == 1);
  CHECK(enumerate_group(binary_dihedral_group(2)).size() == 8);
  CHECK(enumerate_group(binary_dihedral_group(5)).size() == 20);
  CHECK(enumerate_group(tetrahedral_group()).size() == 24);
  CHECK(enumerate_group(octahedral_group()).size() == 48);
  CHECK(enumerate_group(icosahedral_group()).size() == 120);
  CHECK_THROWS_AS(enumerate_group(icosahedral_group(), 100), Error);
}

TEST_CASE("A3 klein data") {
  auto kd = klein_data(parse_type("A3"));
  CHECK(kd.relation.str() == Ring(kd.xring).parse("X^4 - Y*Z").str());
  CHECK(kd.Y.core == Ring(kd.zring).parse("z1^4"));
  require_all_pass(verify_invariance(kd));
  require_all_pass(verify_omega_action(kd));
}

TEST_CASE("klein verification across types") {
  for (const char* s : {"A1", "A2", "A4", "A5", "A7", "D4", "D5", "D6", "D7", "E6"}) {
    INFO(s);
    auto kd = klein_data(parse_type(s));
    require_all_pass(verify_invariance(kd));
    require_all_pass(verify_omega_action(kd));
  }
  for (const char* om : {"z2", "z3", "s3"}) {
    INFO(om);
    auto kd = klein_data(parse_type("D4"), om);
    require_all_pass(verify_invariance(kd));
    require_all_pass(verify_omega_action(kd));
  }
}

TEST_CASE("even A flagged") {
  auto kd = klein_data(parse_type("A4"));
  CHECK_FALSE(kd.valid_gamma_prime);
  CHECK(verify_omega_action(kd).find("omega.lift")->status == Status::Skipped);
}

TEST_CASE("identity and Gamma elements act trivially") {
  auto kd = klein_data(parse_type("E6"));
  CHECK(act(identity_matrix(2), kd.X.full()) == kd.X.full());
  for (const auto& g : enumerate_group(kd.gamma)) CHECK(act(g, kd.Y.core) == kd.Y.core);
}

TEST_CASE("a wrong action is reported") {
  auto kd = klein_data(parse_type("A3"));
  kd.omega_action[1].on_xyz[0][0] = 1;
  auto r = verify_omega_action(kd);
  CHECK_FALSE(r.ok());
  CHECK(r.find("omega.h.X")->witness["generator"] == "h");
}

TEST_CASE("unsupported") {
  CHECK_THROWS_AS(klein_data(parse_type("E7")), Error);
  CHECK_THROWS_AS(klein_data(parse_type("B3")), Error);
  CHECK_THROWS_AS(klein_data(parse_type("A3"), "s3"), Error);
}
