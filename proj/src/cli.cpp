#include "cactus/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cactus/ainfty.hpp"
#include "cactus/cacti.hpp"
#include "cactus/error.hpp"
#include "cactus/io.hpp"
#include "cactus/operad.hpp"
#include "cactus/suites.hpp"

namespace cactus {

namespace {

std::size_t maxLengthFromEnvironment() {
  const char* raw = std::getenv("CACTUS_MAX_LEN");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxLength;
  try {
    const long long value = std::stoll(raw);
    if (value < 1) throw std::out_of_range("CACTUS_MAX_LEN");
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("CACTUS_MAX_LEN must be a positive integer, got '") + raw + "'");
  }
}

// CLI11 would read "-(1,2)" or "-2*(1,2)" as a short option. A leading space
// keeps such arguments positional; the element grammar skips it.
std::vector<std::string> protectSignedTerms(std::vector<std::string> args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a.size() >= 2 && a[0] == '-' && (a[1] == '(' || a[1] == ' ' ||
                                         (std::isdigit(static_cast<unsigned char>(a[1])) &&
                                          a.find_first_of("(*") != std::string::npos))) {
      args[i] = " " + a;
    }
  }
  return args;
}

void printElement(std::ostream& out, const Element& e, bool json) {
  if (json) {
    out << elementToJson(e).dump() << '\n';
  } else {
    out << serializeElement(e) << '\n';
  }
}

void printReportText(std::ostream& out, const VerificationReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.check;
  if (!r.note.empty()) out << ": " << r.note;
  out << '\n';
  if (r.witness) out << "  witness: " << serializeElement(*r.witness) << '\n';
}

}  // namespace

int runCommand(const std::vector<std::string>& rawArgs, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the surjection operad and its cactus suboperad", "cactus"};
  app.require_subcommand(1);

  std::string lhsText, rhsText, elementText, wordText, surjText;
  int lobe = 0;
  int psiArity = 0;
  bool json = false;

  auto* composeCmd = app.add_subcommand("compose", "Operadic composition a o_i b");
  composeCmd->add_option("a", lhsText, "outer element")->required();
  composeCmd->add_option("i", lobe, "lobe index")->required();
  composeCmd->add_option("b", rhsText, "inner element")->required();
  composeCmd->add_flag("--json", json, "print JSON");

  auto* boundaryCmd = app.add_subcommand("boundary", "Differential of an element");
  boundaryCmd->add_option("element", elementText, "element")->required();
  boundaryCmd->add_flag("--json", json, "print JSON");

  auto* muCmd = app.add_subcommand("mu", "Image of the generator m_xi (w = white, b = black)");
  muCmd->add_option("word", wordText, "generator word")->required();
  muCmd->add_flag("--json", json, "print JSON");

  auto* psiCmd = app.add_subcommand("psi", "Image of the generator m_n");
  psiCmd->add_option("n", psiArity, "arity")->required()->check(CLI::Range(2, 64));
  psiCmd->add_flag("--json", json, "print JSON");

  auto* cactiCmd = app.add_subcommand("cacti", "Cactus bases");
  cactiCmd->require_subcommand(1);
  auto* listCmd = cactiCmd->add_subcommand("list", "List basis surjections");
  int listArity = 0;
  std::optional<int> listDegree;
  bool listPrime = false;
  int listLevel = 2;
  listCmd->add_option("n", listArity, "arity")->required()->check(CLI::PositiveNumber);
  listCmd->add_option("--degree", listDegree, "degree k");
  listCmd->add_flag("--prime", listPrime, "list C'_n");
  listCmd->add_option("--level", listLevel, "filtration bound")->check(CLI::PositiveNumber);

  auto* renderCmd = app.add_subcommand("render", "Draw the lobe tree of a cactus");
  std::string formatName = "text";
  std::string outputPath;
  RenderSpec spec;
  renderCmd->add_option("surjection", surjText, "cactus")->required();
  renderCmd->add_option("--format", formatName, "dot, svg or text")
      ->check(CLI::IsMember({"dot", "svg", "text"}));
  renderCmd->add_option("-o,--output", outputPath, "write to FILE");
  renderCmd->add_option("--radius", spec.rootRadius, "root lobe radius (svg)");
  renderCmd->add_option("--ratio", spec.childRatio, "child/parent radius ratio (svg)");
  renderCmd->add_option("--stroke", spec.strokeWidth, "stroke width (svg)");

  auto* verifyCmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteConfig config;
  std::vector<std::string> suiteChoices = suiteNames();
  suiteChoices.push_back("all");
  verifyCmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suiteChoices));
  verifyCmd->add_option("--max-arity", config.maxArity, "largest arity checked")
      ->check(CLI::Range(2, 12));
  verifyCmd->add_option("--samples", config.sampleCount, "random checks per sampled suite");
  verifyCmd->add_option("--seed", config.randomSeed, "PRNG seed");
  verifyCmd->add_flag("--fail-fast", config.failFast, "stop at the first failure");
  verifyCmd->add_flag("--json", json, "print JSON");

  std::vector<std::string> args = protectSignedTerms(rawArgs);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::size_t maxLength = maxLengthFromEnvironment();
    if (*composeCmd) {
      printElement(out, compose(parseElement(lhsText), lobe, parseElement(rhsText)), json);
    } else if (*boundaryCmd) {
      printElement(out, boundary(parseElement(elementText)), json);
    } else if (*muCmd) {
      printElement(out, mu(GeneratorWord::parse(wordText)), json);
    } else if (*psiCmd) {
      printElement(out, psi(psiArity), json);
    } else if (*listCmd) {
      std::vector<Surjection> basis;
      if (listPrime) {
        if (listArity < 2) throw Error(ErrorKind::InvalidArgument, "C'_n needs n >= 2");
        if (!listDegree || *listDegree == listArity - 2) basis = generateCPrime(listArity, maxLength);
      } else if (listDegree) {
        basis = enumerateBasis(listArity, *listDegree, listLevel, maxLength);
      } else {
        if (listLevel > 2) {
          throw Error(ErrorKind::InvalidArgument, "--degree is required when --level exceeds 2");
        }
        for (int k = 0; k <= listArity - 1; ++k) {
          for (auto& u : enumerateBasis(listArity, k, listLevel, maxLength)) basis.push_back(u);
        }
      }
      for (const auto& u : basis) out << u.toString() << '\n';
    } else if (*renderCmd) {
      spec.format = parseRenderFormat(formatName);
      const std::string text = renderLobeTree(lobeTree(parseSurjection(surjText)), spec);
      if (outputPath.empty()) {
        out << text;
      } else {
        std::ofstream file(outputPath, std::ios::binary);
        if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + outputPath);
        file << text;
      }
    } else if (*verifyCmd) {
      config.maxLength = maxLength;
      const auto results = runSuites(suite, config);
      bool pass = true;
      for (const auto& r : results) pass = pass && r.pass();
      if (json) {
        nlohmann::json suites = nlohmann::json::array();
        for (const auto& r : results) suites.push_back(suiteResultToJson(r));
        out << nlohmann::json{{"format", kFormatTag},
                              {"seed", config.randomSeed},
                              {"samples", config.sampleCount},
                              {"pass", pass},
                              {"suites", suites}}
                   .dump(2)
            << '\n';
      } else {
        out << "seed " << config.randomSeed << ", samples " << config.sampleCount << '\n';
        std::size_t failed = 0;
        std::size_t total = 0;
        for (const auto& r : results) {
          out << "== " << r.suite << " (max arity " << r.maxArity << ")\n";
          for (const auto& report : r.reports) {
            printReportText(out, report);
            ++total;
            if (!report.pass) ++failed;
          }
          if (!r.summary.empty()) out << r.summary << '\n';
        }
        out << (pass ? "OK" : "FAILED") << ' ' << (total - failed) << '/' << total
            << " checks passed\n";
      }
      return pass ? kExitOk : kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace cactus
