#include <string>
#include <vector>

#include "doctest.h"
#include "kleinzeta/verify.hpp"

using namespace kleinzeta;

namespace {
VerifyOptions small_options() {
  VerifyOptions opt;
  opt.theorem1_max = 50;
  opt.theorem1_cubic_max = 50;
  opt.brute_match_max = 64;
  opt.weil_klein_max = 30;
  opt.weil_fc3_max = 64;
  opt.congruence_max = 64;
  opt.hudson_williams_max = 120;
  opt.character_field_max = 16;
  opt.fc3_prime_max = 50;
  opt.fc3_q_max = 64;
  opt.cover_max = 32;
  opt.hecke_max = 120;
  opt.hecke_norm_max = 300;
  return opt;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return !rows.empty();
}
}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite registry") {
  const auto& names = verify_suite_names();
  CHECK(names == std::vector<std::string>{"theorem1", "counts", "weil", "congruences",
                                          "hasse-davenport", "characters", "fc3",
                                          "cover", "hecke"});
  CHECK_THROWS_AS((void)run_suite("nonsense", small_options()), std::invalid_argument);
}

TEST_CASE("every suite passes at reduced bounds") {
  VerifyOptions opt = small_options();
  for (const auto& name : verify_suite_names()) {
    auto rows = run_suite(name, opt);
    CHECK(all_pass(rows));
    for (const auto& r : rows) CHECK(r.suite == name);
  }
}

TEST_CASE("the ramified prime is skipped with a note") {
  VerifyOptions opt = small_options();
  opt.theorem1_max = 7;
  auto rows = run_suite("theorem1", opt);
  bool noted = false;
  for (const auto& r : rows)
    noted = noted || (r.name == "skip p=7" && r.detail == "ramified, excluded" && r.pass);
  CHECK(noted);
  CHECK(all_pass(rows));
}

TEST_CASE("aggregate run is deterministic and ordered by suite") {
  VerifyOptions opt = small_options();
  opt.theorem1_max = 20;
  opt.brute_match_max = 16;
  opt.weil_klein_max = 15;
  opt.weil_fc3_max = 16;
  opt.congruence_max = 16;
  opt.hudson_williams_max = 50;
  opt.character_field_max = 9;
  opt.fc3_prime_max = 20;
  opt.fc3_q_max = 16;
  opt.cover_max = 16;
  opt.hecke_max = 50;
  opt.hecke_norm_max = 50;

  auto a = run_suite("all", opt);
  auto b = run_suite("all", opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].suite == b[i].suite);
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].detail == b[i].detail);
    CHECK(a[i].pass == b[i].pass);
  }
  // rows arrive grouped suite by suite in registry order
  std::size_t cursor = 0;
  for (const auto& name : verify_suite_names()) {
    bool seen_this = false;
    while (cursor < a.size() && a[cursor].suite == name) {
      ++cursor;
      seen_this = true;
    }
    CHECK(seen_this);
  }
  CHECK(cursor == a.size());
}

}  // TEST_SUITE
