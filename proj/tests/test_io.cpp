#include <doctest.h>

#include <cmath>
#include <random>
#include <regex>

#include "cactus/ainfty.hpp"
#include "cactus/cacti.hpp"
#include "cactus/error.hpp"
#include "cactus/io.hpp"
#include "cactus/suites.hpp"
#include "oracles.hpp"

using namespace cactus;
using oracle::S;

namespace {

Element randomElement(std::mt19937_64& rng) {
  Element e;
  const int terms = std::uniform_int_distribution<int>(0, 6)(rng);
  std::uniform_int_distribution<Coefficient> coeff(-5, 5);
  for (int t = 0; t < terms; ++t) {
    Coefficient c = coeff(rng);
    if (t == 0 && std::uniform_int_distribution<int>(0, 9)(rng) == 0) c = 123456789012LL;
    e.addTerm(randomSurjection(rng, 9), c);
  }
  return e;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parseSurjection") {
  CHECK(parseSurjection("(1,3,1,2)") == S({1, 3, 1, 2}));
  CHECK(parseSurjection(" ( 1 , 3,1 ,2 ) ") == S({1, 3, 1, 2}));
  CHECK(parseSurjection("1312") == S({1, 3, 1, 2}));
  CHECK(parseSurjection("(1)") == Surjection::unit());
  try {
    parseSurjection("(1,1,2)");
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK_THROWS_AS(parseSurjection("(1,3)"), Error);
  CHECK_THROWS_AS(parseSurjection("(1,2"), SyntaxError);
  CHECK_THROWS_AS(parseSurjection("(1,2) x"), SyntaxError);
}

TEST_CASE("parseElement examples") {
  CHECK(parseElement("+(1,3,1,2) - (2,1,3,1)") == psi(3));
  CHECK(parseElement("(1)") == Element(Surjection::unit()));
  CHECK(parseElement("0").isZero());
  CHECK(parseElement("3*(1,2) -2*(2,1) +(1,2)") ==
        Element(S({1, 2}), 4) + Element(S({2, 1}), -2));
  CHECK(parseElement("(1,2) - (1,2)").isZero());
  CHECK(parseElement("-1312 +2131") == Element(S({1, 3, 1, 2}), -1) + Element(S({2, 1, 3, 1})));
  try {
    parseElement("(1,1,2)");
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parseElement("+(1,2)\n-(2,1) ?");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
    CHECK(e.kind() == ErrorKind::SyntaxError);
  }
  try {
    parseElement("+(1,2) 3*");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parseElement(""), SyntaxError);
  CHECK_THROWS_AS(parseElement("+"), SyntaxError);
  CHECK_THROWS_AS(parseElement("(1,2) 0"), SyntaxError);
  CHECK_THROWS_AS(parseElement("99999999999999999999*(1)"), SyntaxError);
}

TEST_CASE("serializeElement") {
  CHECK(serializeElement(psi(2)) == "+(1,2) +(2,1)");
  CHECK(serializeElement(Element()) == "0");
  CHECK(serializeElement(mu(GeneratorWord::parse("bwb"))) == "-(1,3,1,2,4,2) -(1,3,1,4,1,2)");
  CHECK(serializeElement(parseElement("(1,2,1) - (2,1)")) == "+(1,2,1) -(2,1)");
  CHECK(serializeElement(parseElement("-(1,2) +(2,1)")) == "+(2,1) -(1,2)");
  CHECK(serializeElement(Element(S({1, 2}), 3) + Element(S({2, 1}), -7)) == "+3*(1,2) -7*(2,1)");
}

TEST_CASE("parse and serialize round trip") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const Element e = randomElement(rng);
    const std::string text = serializeElement(e);
    REQUIRE(parseElement(text) == e);
    CHECK(serializeElement(parseElement(text)) == text);
  }
}

TEST_CASE("JSON round trip") {
  const auto j = elementToJson(psi(3));
  CHECK(j["format"] == "cactus-v1");
  CHECK(j["terms"].size() == 2);
  CHECK(elementFromJson(j) == psi(3));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Element e = randomElement(rng);
    CHECK(elementFromJson(nlohmann::json::parse(elementToJson(e).dump())) == e);
  }
  nlohmann::json wrong = j;
  wrong["format"] = "other";
  CHECK_THROWS_AS(elementFromJson(wrong), Error);
  nlohmann::json bad = j;
  bad["terms"][0]["seq"] = {1, 1};
  CHECK_THROWS_AS(elementFromJson(bad), Error);
}

TEST_CASE("report JSON") {
  VerificationReport ok{"check", true, std::nullopt, "fine"};
  const auto j = reportToJson(ok);
  CHECK(j["check"] == "check");
  CHECK(j["pass"] == true);
  CHECK(j["witness"].is_null());
  VerificationReport bad{"other", false, psi(2), ""};
  CHECK(reportToJson(bad)["witness"] == "+(1,2) +(2,1)");
}

TEST_CASE("DOT rendering") {
  RenderSpec spec;
  spec.format = RenderFormat::Dot;
  const std::string simple = renderLobeTree(lobeTree(S({1, 2, 1})), spec);
  CHECK(simple.rfind("digraph cactus {", 0) == 0);
  CHECK(count(simple, "->") == 1);
  CHECK(simple.find("l1 -> l2") != std::string::npos);

  const std::string fig = renderLobeTree(lobeTree(S({1, 2, 3, 2, 1, 4, 1})), spec);
  const auto a = fig.find("l1 -> l2");
  const auto b = fig.find("l2 -> l3");
  const auto c = fig.find("l1 -> l4");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  REQUIRE(c != std::string::npos);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(count(fig, "->") == 3);
  CHECK(renderLobeTree(lobeTree(S({1, 2, 3, 2, 1, 4, 1})), spec) == fig);
}

TEST_CASE("SVG rendering") {
  RenderSpec spec;
  spec.format = RenderFormat::Svg;
  for (const auto& u : {S({2, 1, 3, 1}), S({1, 2, 3, 2, 1, 4, 1}), S({1}), S({3, 1, 2, 1, 4, 1, 3})}) {
    const std::string svg = renderLobeTree(lobeTree(u), spec);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") == static_cast<std::size_t>(u.arity()));
    CHECK(count(svg, "<") == count(svg, ">"));
  }
  const std::string svg = renderLobeTree(lobeTree(S({2, 1, 3, 1})), spec);
  // circle order follows traversal: 2, then 1, then 3 on circle 1
  const auto two = svg.find(">2</text>");
  const auto one = svg.find(">1</text>");
  const auto three = svg.find(">3</text>");
  CHECK(two < one);
  CHECK(one < three);

  // root circles of radius r touch the root marker at distance r
  const std::regex circle(R"re(<circle cx="(-?[0-9.]+)" cy="(-?[0-9.]+)" r="([0-9.]+)")re");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, circle));
  const double cx = std::stod(m[1]);
  const double cy = std::stod(m[2]);
  const double r = std::stod(m[3]);
  CHECK(r == doctest::Approx(40.0));
  CHECK(std::hypot(cx, cy) == doctest::Approx(r).epsilon(0.01));
}

TEST_CASE("text rendering") {
  RenderSpec spec;
  CHECK(renderLobeTree(lobeTree(S({2, 1, 3, 1})), spec) ==
        "lobe 2 arcs 1\nlobe 1 arcs 2 4\n  lobe 3 arcs 3 (after arc 2)\n");
}

TEST_CASE("RenderSpec validation") {
  RenderSpec spec;
  CHECK_NOTHROW(spec.validate());
  spec.childRatio = 1.0;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec.childRatio = 0.0;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = RenderSpec{};
  spec.rootRadius = -1;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = RenderSpec{};
  spec.strokeWidth = 0;
  CHECK_THROWS_AS(spec.validate(), Error);
  CHECK(parseRenderFormat("svg") == RenderFormat::Svg);
  CHECK(parseRenderFormat("text") == RenderFormat::Text);
  CHECK_THROWS_AS(parseRenderFormat("tikz"), Error);
}
