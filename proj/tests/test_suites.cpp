#include <doctest.h>

#include "cactus/error.hpp"
#include "cactus/fault.hpp"
#include "cactus/io.hpp"
#include "cactus/suites.hpp"

using namespace cactus;

namespace {

SuiteConfig small(int maxArity, std::size_t samples = 200) {
  SuiteConfig config;
  config.maxArity = maxArity;
  config.sampleCount = samples;
  config.randomSeed = 7;
  return config;
}

}  // namespace

TEST_CASE("suite names and defaults") {
  CHECK(suiteNames().size() == 11);
  CHECK(suiteNames().front() == "dsq");
  CHECK(defaultMaxArity("ainf") == 7);
  CHECK(defaultMaxArity("cprime-count") == 7);
  CHECK(defaultMaxArity("axioms") == 6);
  CHECK_THROWS_AS(runSuite("nosuch", small(3)), Error);
}

TEST_CASE("SuiteConfig validation") {
  SuiteConfig config;
  CHECK_NOTHROW(config.validate());
  config.maxArity = 1;
  CHECK_THROWS_AS(config.validate(), Error);
}

TEST_CASE("the fast suites pass") {
  for (const char* name : {"axioms", "derivation", "f2-closure", "bncomp", "bncomp2", "mupartial",
                           "a2inf", "ainf", "golden-table"}) {
    const SuiteResult result = runSuite(name, small(4));
    CHECK_MESSAGE(result.pass(), name);
    CHECK_FALSE(result.reports.empty());
  }
}

TEST_CASE("cprime-count summary") {
  const SuiteResult result = runSuite("cprime-count", small(6));
  CHECK(result.pass());
  CHECK(result.summary == "counts 2,2,6,30,210");
}

TEST_CASE("random d^2 check") {
  CHECK(checkBoundarySquaredRandom(2000, 12, 3).pass);
  CHECK(checkBoundarySquaredExhaustive(3, 9).pass);
}

TEST_CASE("sampled checks are reproducible") {
  const auto a = suiteResultToJson(runSuite("axioms", small(4, 300)));
  const auto b = suiteResultToJson(runSuite("axioms", small(4, 300)));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("golden table loads and checks") {
  const auto& table = goldenTable();
  CHECK(table["rows"].size() == 14);
  for (const auto& report : checkGoldenTable(table)) CHECK_MESSAGE(report.pass, report.check);
  nlohmann::json broken = table;
  broken["rows"][0]["terms"][0]["coeff"] = -1;
  const auto reports = checkGoldenTable(broken);
  REQUIRE_FALSE(reports.empty());
  CHECK_FALSE(reports.front().pass);
  REQUIRE(reports.front().witness.has_value());
  CHECK(serializeElement(*reports.front().witness) == "+2*(1,3,1,2)");
}

TEST_CASE("sign faults make the suites fail") {
  {
    testing::ScopedSignFault fault(testing::SignFault::IgnoreKoszulSign);
    bool anyFailed = false;
    for (const char* name : {"derivation", "axioms", "a2inf", "ainf"}) {
      anyFailed = anyFailed || !runSuite(name, small(4)).pass();
    }
    CHECK(anyFailed);
  }
  {
    testing::ScopedSignFault fault(testing::SignFault::IgnoreLastOccurrence);
    CHECK_FALSE(checkBoundarySquaredRandom(500, 10, 3).pass);
  }
  CHECK(runSuite("derivation", small(4)).pass());
}

TEST_CASE("fail fast stops at the first failure") {
  testing::ScopedSignFault fault(testing::SignFault::IgnoreLastOccurrence);
  SuiteConfig config = small(5);
  config.failFast = true;
  const auto results = runSuites("all", config);
  REQUIRE_FALSE(results.empty());
  CHECK_FALSE(results.back().pass());
  CHECK(results.size() < suiteNames().size());
}
