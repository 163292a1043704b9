#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "copwin/harness.hpp"

using namespace copwin;

namespace {

SuiteConfig tiny_config() {
  SuiteConfig c = SuiteConfig::defaults();
  c.gammas = {Ordinal::omega()};
  c.tail_lengths = {1};
  c.truncation_sizes = {4};
  c.samples_per_claim = 100;
  c.survival_budget_max = 3;
  c.corpus_size = 10;
  return c;
}

nlohmann::json without_environment(const Report& r) {
  nlohmann::json j = report_to_json(r);
  j.erase("environment");
  return j;
}

}  // namespace

TEST_CASE("defaults are valid and cover the standard gammas") {
  SuiteConfig c = SuiteConfig::defaults();
  CHECK_NOTHROW(c.validate());
  REQUIRE(c.gammas.size() == 4);
  CHECK(c.gammas[0] == Ordinal::omega());
  CHECK(c.gammas[3] == Ordinal::parse("w^w"));
  CHECK(c.samples_per_claim == 1000);
  CHECK(c.corpus_size == 200);
}

TEST_CASE("config files parse as key=value lines") {
  std::istringstream in(
      "# comment\n"
      "seed = 7\n"
      "gammas = w, w^2\n"
      "tail_lengths = 1,2\n"
      "truncation_sizes = 4\n"
      "samples_per_claim = 50\n"
      "survival_budget_max = 4\n"
      "corpus_size = 12\n");
  SuiteConfig c = SuiteConfig::from_stream(in);
  CHECK(c.seed == 7);
  REQUIRE(c.gammas.size() == 2);
  CHECK(c.gammas[1] == Ordinal::parse("w^2"));
  CHECK(c.tail_lengths == std::vector<std::uint64_t>{1, 2});
  CHECK(c.samples_per_claim == 50);
  CHECK(c.corpus_size == 12);
}

TEST_CASE("config rejections") {
  std::istringstream unknown("bogus = 3\n");
  CHECK_THROWS(SuiteConfig::from_stream(unknown));
  std::istringstream successor("gammas = w+1\n");
  CHECK_THROWS(SuiteConfig::from_stream(successor));
  std::istringstream no_eq("seed 3\n");
  CHECK_THROWS(SuiteConfig::from_stream(no_eq));
}

TEST_CASE("individual suites pass on the tiny config") {
  SuiteConfig c = tiny_config();
  for (const std::string& name :
       {std::string("paths"), std::string("finite-oracle"),
        std::string("nw-equivalence"), std::string("simulation")}) {
    Report r = run_suite(name, c);
    CAPTURE(name);
    CHECK(r.ok());
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].name == name);
    CHECK(r.suites[0].failed == 0);
  }
}

TEST_CASE("the all suite covers every tracked claim") {
  Report r = run_suite("all", tiny_config());
  CHECK(r.ok());
  for (const std::string& id : tracked_claim_ids()) {
    CAPTURE(id);
    REQUIRE(r.claims.contains(id));
    CHECK(r.claims.at(id) == "pass");
  }
  CHECK(r.suites.back().name == "coverage");
  CHECK(r.suites.back().failed == 0);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS(run_suite("nonsense", tiny_config()));
}

TEST_CASE("reports round-trip through json") {
  Report r = run_suite("paths", tiny_config());
  Report back = report_from_json(report_to_json(r));
  CHECK(report_to_json(back) == report_to_json(r));
  CHECK(report_to_table(back) == report_to_table(r));
}

TEST_CASE("empty reports serialize") {
  Report empty;
  CHECK(empty.ok());
  nlohmann::json j = report_to_json(empty);
  CHECK(j["suites"].empty());
  CHECK(report_from_json(j).ok());
}

TEST_CASE("runs are deterministic outside the environment section") {
  SuiteConfig c = tiny_config();
  Report a = run_suite("lemma-certificates", c);
  Report b = run_suite("lemma-certificates", c);
  CHECK(without_environment(a) == without_environment(b));
}

TEST_CASE("suite names list every suite plus all") {
  const auto& names = suite_names();
  CHECK(names.size() == 9);
  CHECK(names.back() == "all");
}
