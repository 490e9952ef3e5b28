#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cactus/cacti.hpp"
#include "cactus/report.hpp"
#include "cactus/surjection.hpp"

namespace cactus {

struct SuiteConfig {
  std::optional<int> maxArity;  // unset: the suite's default
  std::size_t sampleCount = 1000;
  std::uint64_t randomSeed = 1;
  bool failFast = false;
  std::size_t maxLength = kDefaultMaxLength;

  void validate() const;
};

struct SuiteResult {
  std::string suite;
  int maxArity = 0;
  std::string summary;
  std::vector<VerificationReport> reports;

  bool pass() const;
};

/// Suite names accepted by runSuite, in the order `all` runs them.
const std::vector<std::string>& suiteNames();
int defaultMaxArity(std::string_view suite);

/// Runs one named suite, or every suite for "all". Throws InvalidArgument
/// for unknown names.
std::vector<SuiteResult> runSuites(std::string_view name, const SuiteConfig& config);
SuiteResult runSuite(std::string_view name, const SuiteConfig& config);

// Building blocks, exposed for the acceptance and unit tests.

/// A non-degenerate surjection of length in [1, maxLength].
Surjection randomSurjection(std::mt19937_64& rng, std::size_t maxLength);

/// Every cactus of arity 1..maxArity in every degree 0..n-1.
std::vector<Surjection> cactusPool(int maxArity, std::size_t maxLength = kDefaultMaxLength);

VerificationReport checkBoundarySquaredExhaustive(int maxArity, std::size_t maxLength);
VerificationReport checkBoundarySquaredRandom(std::size_t count, std::size_t maxLength,
                                              std::uint64_t seed);
VerificationReport checkAxiomsRandom(int maxArity, std::size_t count, std::uint64_t seed);
VerificationReport checkDerivationRandom(int maxArity, std::size_t count, std::uint64_t seed);
VerificationReport checkF2ClosureRandom(int maxArity, std::size_t count, std::uint64_t seed);
VerificationReport checkBncomp2Random(int maxArity, std::size_t count, std::uint64_t seed);

/// The checked-in table of μ(m_ξ) for arities 3-5.
const nlohmann::json& goldenTable();
std::vector<VerificationReport> checkGoldenTable(const nlohmann::json& table);

nlohmann::json suiteResultToJson(const SuiteResult& result);

}  // namespace cactus
