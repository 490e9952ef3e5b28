// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the path of
// the cactus executable, used for the repeated-invocation check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "cactus/ainfty.hpp"
#include "cactus/cacti.hpp"
#include "cactus/io.hpp"
#include "cactus/operad.hpp"
#include "cactus/suites.hpp"

using namespace cactus;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
  void require(const VerificationReport& report) {
    require(report.pass, report.check + (report.note.empty() ? "" : ": " + report.note) +
                             (report.witness ? " witness " + serializeElement(*report.witness) : ""));
  }
};

Surjection S(std::initializer_list<int> seq) { return Surjection::validate(seq); }

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe.get())) out.append(buffer.data(), n);
  return out;
}

Outcome goldenTableCriterion() {
  Outcome o;
  const auto reports = checkGoldenTable(goldenTable());
  o.require(reports.size() == 20, "expected 14 rows and 6 zero rows");
  for (const auto& r : reports) o.require(r);
  return o;
}

Outcome enumerationCriterion() {
  Outcome o;
  const std::array<std::size_t, 6> expected{2, 2, 6, 30, 210, 1890};
  for (int n = 2; n <= 7; ++n) {
    const auto family = generateCPrime(n);
    o.require(family.size() == expected[static_cast<std::size_t>(n - 2)],
              "|C'_" + std::to_string(n) + "| = " + std::to_string(family.size()));
    o.require(static_cast<std::size_t>(cprimeCount(n)) == family.size(), "closed form");
    if (n <= 6) o.require(family == filterCPrime(n), "recursion differs from filter at n=" + std::to_string(n));
  }
  return o;
}

Outcome computationsCriterion() {
  Outcome o;
  const Element p(S({1, 2}));
  const Element p123(S({1, 2, 3}));
  o.require(compareElements("(1,2)o1(1,2)", compose(p, 1, p), p123));
  o.require(compareElements("(1,2)o2(1,2)", compose(p, 2, p), p123));
  o.require(compareElements("d(1,2,1)", boundaryBasis(S({1, 2, 1})),
                            Element(S({2, 1})) - Element(S({1, 2}))));
  const Element product = Element(S({1, 2})) + Element(S({2, 1}));
  const Element associator = compose(product, 1, product) - compose(product, 2, product);
  const Element expected = parseElement("(2,1,3) + (3,1,2) - (1,3,2) - (2,3,1)");
  o.require(compareElements("associator", associator, expected));
  o.require(compareElements("associator is a boundary",
                            boundary(parseElement("(1,3,1,2) - (2,1,3,1)")), associator));
  return o;
}

Outcome boundarySquaredCriterion() {
  Outcome o;
  o.require(checkBoundarySquaredExhaustive(4, 12));
  o.require(checkBoundarySquaredRandom(10000, 12, kSeed));
  return o;
}

Outcome axiomsCriterion() {
  Outcome o;
  o.require(checkAxiomsRandom(4, 1000, kSeed));
  o.require(checkDerivationRandom(4, 1000, kSeed + 1));
  return o;
}

Outcome closureCriterion() {
  Outcome o;
  o.require(checkF2ClosureRandom(4, 1000, kSeed));
  return o;
}

Outcome propositionsCriterion() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& u : generateCPrime(n)) o.require(verifyBncomp(u));
  }
  o.require(checkBncomp2Random(4, 1000, kSeed));
  std::size_t words = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& xi : phiImage(n)) {
      o.require(verifyMupartial(xi));
      ++words;
    }
  }
  o.require(words == 62, "expected 62 words");
  return o;
}

Outcome morphismCriterion() {
  Outcome o;
  std::size_t words = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& xi : phiImage(n)) {
      o.require(verifyMuMorphism(xi));
      ++words;
    }
  }
  o.require(words == 126, "expected 126 words");
  for (int n = 3; n <= 7; ++n) o.require(verifyPsiMorphism(n));
  return o;
}

Outcome supportCriterion() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) o.require(verifyPsiSupport(n));
  return o;
}

Outcome roundTripCriterion(const std::string& cli) {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> terms(0, 6);
  std::uniform_int_distribution<Coefficient> coeff(-9, 9);
  for (int trial = 0; trial < 10000; ++trial) {
    Element e;
    for (int t = terms(rng); t > 0; --t) e.addTerm(randomSurjection(rng, 10), coeff(rng));
    const std::string text = serializeElement(e);
    o.require(parseElement(text) == e, "round trip of " + text);
    o.require(elementFromJson(elementToJson(e)) == e, "JSON round trip of " + text);
  }
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  for (const std::string args :
       {"psi 6", "cacti list 4 --prime", "render \"(1,2,3,2,1,4,1)\" --format svg",
        "verify axioms --max-arity 4 --samples 300 --seed 9 --json",
        "boundary \"(1,3,1,2) - (2,1,3,1)\""}) {
    const std::string command = "\"" + cli + "\" " + args + " 2>&1";
    const std::string first = capture(command);
    o.require(!first.empty(), "no output from " + args);
    for (int again = 0; again < 2; ++again) {
      o.require(capture(command) == first, "output of '" + args + "' differs between runs");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    double budgetSeconds;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden table of mu", 1, goldenTableCriterion},
      {2, "C' enumeration", 5, enumerationCriterion},
      {3, "worked computations", 0, computationsCriterion},
      {4, "d^2 = 0", 30, boundarySquaredCriterion},
      {5, "operad axioms and derivation", 0, axiomsCriterion},
      {6, "F_2 closure", 0, closureCriterion},
      {7, "square/bullet propositions", 0, propositionsCriterion},
      {8, "morphism properties", 60, morphismCriterion},
      {9, "support of psi", 0, supportCriterion},
      {10, "round trip and determinism", 0, [&cli] { return roundTripCriterion(cli); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && c.budgetSeconds > 0 && seconds > c.budgetSeconds) {
      outcome.pass = false;
      std::ostringstream os;
      os << "over the " << c.budgetSeconds << " s budget";
      outcome.detail = os.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
         << seconds << " s)";
    if (!outcome.pass) line << " -- " << outcome.detail;
    std::cout << line.str() << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
