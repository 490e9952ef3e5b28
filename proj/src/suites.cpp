#include "cactus/suites.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "cactus/ainfty.hpp"
#include "cactus/error.hpp"
#include "cactus/golden_table_data.hpp"
#include "cactus/io.hpp"
#include "cactus/operad.hpp"

namespace cactus {

namespace {

constexpr int kPoolArityCap = 4;
constexpr std::size_t kRandomLengthCap = 12;
constexpr std::size_t kExhaustiveLengthCap = 12;
constexpr int kFilterOracleArityCap = 6;

// Evaluates check(0..count-1) on all hardware threads; results keep index
// order. With failFast, indices after the first failure are not evaluated
// and are cut from the result.
template <typename Check>
std::vector<VerificationReport> parallelChecks(std::size_t count, Check&& check,
                                               bool failFast = false) {
  std::vector<VerificationReport> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> firstFailure{std::numeric_limits<std::size_t>::max()};
  const unsigned workers =
      std::max(1U, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(count)));
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (failFast && i > firstFailure.load()) continue;
      results[i] = check(i);
      if (!results[i].pass) {
        std::size_t seen = firstFailure.load();
        while (i < seen && !firstFailure.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failFast && firstFailure.load() < count) results.resize(firstFailure.load() + 1);
  return results;
}

VerificationReport aggregate(std::string check, const std::vector<VerificationReport>& parts,
                             const std::string& what) {
  VerificationReport out = combineReports(std::move(check), parts);
  if (out.pass) out.note = std::to_string(parts.size()) + " " + what;
  return out;
}

std::size_t uniformIndex(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

int uniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

VerificationReport boundarySquared(const Surjection& u) {
  Element twice = boundary(boundaryBasis(u));
  if (twice.isZero()) return {};
  return {"dsq " + u.toString(), false, std::move(twice), {}};
}

// d^2 over a large family, one report per chunk so that memory stays flat.
VerificationReport boundarySquaredAll(std::string check, const std::vector<Surjection>& family,
                                      const std::string& what) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (family.size() + kChunk - 1) / kChunk;
  const auto parts = parallelChecks(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(family.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      auto report = boundarySquared(family[i]);
      if (!report.pass) return report;
    }
    return VerificationReport{};
  });
  VerificationReport out = combineReports(std::move(check), parts);
  if (out.pass) out.note = std::to_string(family.size()) + " " + what;
  return out;
}

VerificationReport allCacti(const std::string& check, const Element& e) {
  Element offending;
  for (const auto& [u, c] : e.terms()) {
    if (!isCactus(u)) offending.addTerm(u, c);
  }
  VerificationReport report{check, offending.isZero(), std::nullopt, {}};
  if (!report.pass) {
    report.witness = offending;
    report.note = "terms outside F_2";
  }
  return report;
}

std::vector<GeneratorWord> wordsOfArity(int n) { return phiImage(n); }

SuiteResult runDsq(const SuiteConfig& config, int maxArity) {
  SuiteResult result{"dsq", maxArity, {}, {}};
  const int exhaustiveArity = std::min(maxArity, kPoolArityCap);
  const std::size_t exhaustiveLength = std::min(config.maxLength, kExhaustiveLengthCap);
  result.reports.push_back(checkBoundarySquaredExhaustive(exhaustiveArity, exhaustiveLength));
  result.reports.push_back(checkBoundarySquaredRandom(
      10 * config.sampleCount, std::min(config.maxLength, kRandomLengthCap), config.randomSeed));
  return result;
}

SuiteResult runBncomp(const SuiteConfig& config, int maxArity) {
  SuiteResult result{"bncomp", maxArity, {}, {}};
  for (int n = 2; n <= maxArity; ++n) {
    const auto family = generateCPrime(n, config.maxLength);
    auto parts = parallelChecks(
        family.size(), [&](std::size_t i) { return verifyBncomp(family[i]); }, config.failFast);
    result.reports.push_back(
        aggregate("bncomp C'_" + std::to_string(n), parts, "cacti"));
    if (config.failFast && !result.reports.back().pass) break;
  }
  return result;
}

SuiteResult runWordSuite(const std::string& name, const SuiteConfig& config, int maxArity,
                         VerificationReport (*check)(const GeneratorWord&)) {
  SuiteResult result{name, maxArity, {}, {}};
  for (int n = 2; n <= maxArity; ++n) {
    const auto words = wordsOfArity(n);
    auto parts = parallelChecks(
        words.size(), [&](std::size_t i) { return check(words[i]); }, config.failFast);
    result.reports.push_back(aggregate(name + " arity " + std::to_string(n), parts, "words"));
    if (config.failFast && !result.reports.back().pass) break;
  }
  return result;
}

SuiteResult runAinf(const SuiteConfig& config, int maxArity) {
  SuiteResult result{"ainf", maxArity, {}, {}};
  for (int n = 2; n <= maxArity; ++n) {
    if (n >= 3) result.reports.push_back(verifyPsiMorphism(n));
    result.reports.push_back(verifyPsiSupport(n));
    if (config.failFast && !result.reports.back().pass) break;
  }
  return result;
}

SuiteResult runCprimeCount(const SuiteConfig& config, int maxArity) {
  SuiteResult result{"cprime-count", maxArity, {}, {}};
  std::ostringstream counts;
  for (int n = 2; n <= maxArity; ++n) {
    const auto recursive = generateCPrime(n, config.maxLength);
    const long long expected = cprimeCount(n);
    VerificationReport report{"cprime-count n=" + std::to_string(n), true, std::nullopt, {}};
    std::ostringstream note;
    note << "|C'_" << n << "| = " << recursive.size() << ", closed form " << expected;
    if (static_cast<long long>(recursive.size()) != expected) report.pass = false;
    if (n <= kFilterOracleArityCap) {
      const auto filtered = filterCPrime(n, config.maxLength);
      note << ", filter " << filtered.size();
      if (filtered != recursive) {
        report.pass = false;
        Element diff;
        for (const auto& u : recursive) diff.addTerm(u, 1);
        for (const auto& u : filtered) diff.addTerm(u, -1);
        report.witness = diff;
      }
    }
    report.note = note.str();
    counts << (n > 2 ? "," : "") << recursive.size();
    result.reports.push_back(std::move(report));
    if (config.failFast && !result.reports.back().pass) break;
  }
  result.summary = "counts " + counts.str();
  return result;
}

SuiteResult runGolden() {
  SuiteResult result{"golden-table", 5, {}, {}};
  result.reports = checkGoldenTable(goldenTable());
  return result;
}

}  // namespace

void SuiteConfig::validate() const {
  if (maxArity && *maxArity < 2) throw Error(ErrorKind::InvalidArgument, "max arity must be >= 2");
}

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{
      "dsq",      "axioms",   "derivation", "f2-closure", "bncomp",       "bncomp2",
      "mupartial", "a2inf",   "ainf",       "cprime-count", "golden-table"};
  return names;
}

int defaultMaxArity(std::string_view suite) {
  return suite == "ainf" || suite == "cprime-count" ? 7 : 6;
}

SuiteResult runSuite(std::string_view name, const SuiteConfig& config) {
  config.validate();
  const int maxArity = config.maxArity.value_or(defaultMaxArity(name));
  const int poolArity = std::min(maxArity, kPoolArityCap);
  const auto sampled = [&](std::string suite, VerificationReport report) {
    return SuiteResult{std::move(suite), poolArity, {}, {std::move(report)}};
  };
  if (name == "dsq") return runDsq(config, maxArity);
  if (name == "axioms") {
    return sampled("axioms",
                   checkAxiomsRandom(poolArity, config.sampleCount, config.randomSeed));
  }
  if (name == "derivation") {
    return sampled("derivation",
                   checkDerivationRandom(poolArity, config.sampleCount, config.randomSeed));
  }
  if (name == "f2-closure") {
    return sampled("f2-closure",
                   checkF2ClosureRandom(poolArity, config.sampleCount, config.randomSeed));
  }
  if (name == "bncomp") return runBncomp(config, maxArity);
  if (name == "bncomp2") {
    return sampled("bncomp2",
                   checkBncomp2Random(poolArity, config.sampleCount, config.randomSeed));
  }
  if (name == "mupartial") return runWordSuite("mupartial", config, maxArity, verifyMupartial);
  if (name == "a2inf") return runWordSuite("a2inf", config, maxArity, verifyMuMorphism);
  if (name == "ainf") return runAinf(config, maxArity);
  if (name == "cprime-count") return runCprimeCount(config, maxArity);
  if (name == "golden-table") return runGolden();
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> runSuites(std::string_view name, const SuiteConfig& config) {
  if (name != "all") return {runSuite(name, config)};
  std::vector<SuiteResult> results;
  for (const auto& suite : suiteNames()) {
    results.push_back(runSuite(suite, config));
    if (config.failFast && !results.back().pass()) break;
  }
  return results;
}

Surjection randomSurjection(std::mt19937_64& rng, std::size_t maxLength) {
  const int length = uniformInt(rng, 1, static_cast<int>(std::max<std::size_t>(1, maxLength)));
  if (length == 1) return Surjection::unit();
  const int arity = uniformInt(rng, 2, length);
  // start from a permutation, then grow it by inserting values that differ
  // from both neighbours
  std::vector<int> seq(static_cast<std::size_t>(arity));
  for (int v = 1; v <= arity; ++v) seq[static_cast<std::size_t>(v - 1)] = v;
  std::shuffle(seq.begin(), seq.end(), rng);
  while (static_cast<int>(seq.size()) < length) {
    const std::size_t slot = uniformIndex(rng, seq.size() + 1);
    const int left = slot > 0 ? seq[slot - 1] : 0;
    const int right = slot < seq.size() ? seq[slot] : 0;
    std::vector<int> allowed;
    for (int v = 1; v <= arity; ++v) {
      if (v != left && v != right) allowed.push_back(v);
    }
    if (allowed.empty()) continue;
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(slot),
               allowed[uniformIndex(rng, allowed.size())]);
  }
  return Surjection::validate(seq);
}

std::vector<Surjection> cactusPool(int maxArity, std::size_t maxLength) {
  std::vector<Surjection> pool;
  for (int n = 1; n <= maxArity; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (auto& u : enumerateBasis(n, k, 2, maxLength)) pool.push_back(std::move(u));
    }
  }
  return pool;
}

VerificationReport checkBoundarySquaredExhaustive(int maxArity, std::size_t maxLength) {
  std::vector<Surjection> all;
  for (int n = 1; n <= maxArity; ++n) {
    for (std::size_t len = static_cast<std::size_t>(n); len <= maxLength; ++len) {
      for (auto& u : enumerateBasis(n, static_cast<int>(len) - n, kUnboundedLevel, maxLength)) {
        all.push_back(std::move(u));
      }
    }
  }
  return boundarySquaredAll("dsq exhaustive arity<=" + std::to_string(maxArity) +
                                " length<=" + std::to_string(maxLength),
                            all, "surjections");
}

VerificationReport checkBoundarySquaredRandom(std::size_t count, std::size_t maxLength,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Surjection> samples;
  samples.reserve(count);
  for (std::size_t s = 0; s < count; ++s) samples.push_back(randomSurjection(rng, maxLength));
  return boundarySquaredAll("dsq random length<=" + std::to_string(maxLength) + " seed " +
                                std::to_string(seed),
                            samples, "surjections");
}

VerificationReport checkAxiomsRandom(int maxArity, std::size_t count, std::uint64_t seed) {
  const auto pool = cactusPool(maxArity);
  std::mt19937_64 rng(seed);
  struct Sample {
    std::size_t a, b, c;
    int i, j;
  };
  std::vector<Sample> samples;
  for (std::size_t s = 0; s < count; ++s) {
    Sample x{uniformIndex(rng, pool.size()), uniformIndex(rng, pool.size()),
             uniformIndex(rng, pool.size()), 0, 0};
    x.i = uniformInt(rng, 1, pool[x.a].arity());
    x.j = uniformInt(rng, 1, pool[x.a].arity() + pool[x.b].arity() - 1);
    samples.push_back(x);
  }
  const auto parts = parallelChecks(samples.size(), [&](std::size_t s) {
    const auto& x = samples[s];
    return checkOperadAxioms(pool[x.a], x.i, pool[x.b], x.j, pool[x.c]);
  });
  return aggregate("axioms cacti arity<=" + std::to_string(maxArity) + " seed " +
                       std::to_string(seed),
                   parts, "triples");
}

VerificationReport checkDerivationRandom(int maxArity, std::size_t count, std::uint64_t seed) {
  const auto pool = cactusPool(maxArity);
  std::mt19937_64 rng(seed);
  std::vector<std::tuple<std::size_t, int, std::size_t>> samples;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t a = uniformIndex(rng, pool.size());
    const int i = uniformInt(rng, 1, pool[a].arity());
    samples.emplace_back(a, i, uniformIndex(rng, pool.size()));
  }
  const auto parts = parallelChecks(samples.size(), [&](std::size_t s) {
    const auto& [a, i, b] = samples[s];
    return checkDerivation(pool[a], i, pool[b]);
  });
  return aggregate("derivation cacti arity<=" + std::to_string(maxArity) + " seed " +
                       std::to_string(seed),
                   parts, "pairs");
}

VerificationReport checkF2ClosureRandom(int maxArity, std::size_t count, std::uint64_t seed) {
  const auto pool = cactusPool(maxArity);
  std::mt19937_64 rng(seed);
  std::vector<std::tuple<std::size_t, int, std::size_t>> samples;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t v = uniformIndex(rng, pool.size());
    const int t = uniformInt(rng, 1, pool[v].arity());
    samples.emplace_back(v, t, uniformIndex(rng, pool.size()));
  }
  auto parts = parallelChecks(samples.size(), [&](std::size_t s) {
    const auto& [v, t, u] = samples[s];
    return allCacti("f2 " + pool[v].toString() + " o" + std::to_string(t) + " " +
                        pool[u].toString(),
                    composeBasis(pool[v], t, pool[u]));
  });
  const auto faces = parallelChecks(pool.size(), [&](std::size_t s) {
    return allCacti("f2 boundary " + pool[s].toString(), boundaryBasis(pool[s]));
  });
  parts.insert(parts.end(), faces.begin(), faces.end());
  return aggregate("f2-closure cacti arity<=" + std::to_string(maxArity) + " seed " +
                       std::to_string(seed),
                   parts, "compositions and boundaries");
}

VerificationReport checkBncomp2Random(int maxArity, std::size_t count, std::uint64_t seed) {
  std::vector<Surjection> eligible;
  for (auto& u : cactusPool(maxArity)) {
    if (u.multiplicity(u.arity()) == 1) eligible.push_back(std::move(u));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::tuple<std::size_t, int, std::size_t>> samples;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t a = uniformIndex(rng, eligible.size());
    const int i = uniformInt(rng, 1, eligible[a].arity());
    samples.emplace_back(a, i, uniformIndex(rng, eligible.size()));
  }
  const auto parts = parallelChecks(samples.size(), [&](std::size_t s) {
    const auto& [a, i, b] = samples[s];
    return verifyBncomp2(eligible[a], i, eligible[b]);
  });
  return aggregate("bncomp2 cacti arity<=" + std::to_string(maxArity) + " seed " +
                       std::to_string(seed),
                   parts, "pairs");
}

const nlohmann::json& goldenTable() {
  static const nlohmann::json table = nlohmann::json::parse(kGoldenTableJson);
  return table;
}

std::vector<VerificationReport> checkGoldenTable(const nlohmann::json& table) {
  std::vector<VerificationReport> reports;
  for (const auto& row : table.at("rows")) {
    const auto word = GeneratorWord::parse(row.at("word").get<std::string>());
    const Element expected = elementFromJson(nlohmann::json{{"terms", row.at("terms")}});
    reports.push_back(compareElements("golden " + word.toString(), mu(word), expected));
  }
  for (const auto& family : table.at("zero_families")) {
    const auto letter = GeneratorWord::parse(family.at("letter").get<std::string>()).last();
    for (int n : family.at("arities").get<std::vector<int>>()) {
      const GeneratorWord word(std::vector<Letter>(static_cast<std::size_t>(n - 1), letter));
      reports.push_back(compareElements("golden " + word.toString(), mu(word), Element{}));
    }
  }
  return reports;
}

nlohmann::json suiteResultToJson(const SuiteResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(reportToJson(r));
  nlohmann::json j{{"suite", result.suite},
                   {"maxArity", result.maxArity},
                   {"pass", result.pass()},
                   {"reports", reports}};
  if (!result.summary.empty()) j["summary"] = result.summary;
  return j;
}

}  // namespace cactus
