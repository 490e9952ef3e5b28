#include <doctest.h>

#include <limits>
#include <random>

#include "cactus/ainfty.hpp"
#include "cactus/element.hpp"
#include "cactus/error.hpp"
#include "cactus/operad.hpp"
#include "cactus/suites.hpp"
#include "oracles.hpp"

using namespace cactus;
using oracle::S;

namespace {

Element randomElement(std::mt19937_64& rng) {
  Element e;
  const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int t = 0; t < terms; ++t) {
    e.addTerm(randomSurjection(rng, 5), std::uniform_int_distribution<int>(-3, 3)(rng));
  }
  return e;
}

}  // namespace

TEST_CASE("add") {
  const Element psi2 = Element(S({1, 2})) + Element(S({2, 1}));
  CHECK(psi2.size() == 2);
  CHECK(psi2.coefficient(S({1, 2})) == 1);
  CHECK(psi2.coefficient(S({2, 1})) == 1);

  CHECK((psi2 + scale(-1, psi2)).isZero());

  const Element left = Element(S({2, 1, 3})) + Element(S({3, 1, 2}));
  const Element right = Element(S({1, 3, 2}), -1) + Element(S({2, 3, 1}), -1);
  const Element associator = add(left, right);
  CHECK(associator.size() == 4);
  CHECK(associator.coefficient(S({1, 3, 2})) == -1);
  CHECK(associator.coefficient(S({3, 1, 2})) == 1);
}

TEST_CASE("scale") {
  const Element x(S({2, 1, 3, 1}));
  const Element minus = scale(-1, x);
  CHECK(minus.coefficient(S({2, 1, 3, 1})) == -1);
  CHECK(scale(0, x).isZero());
  CHECK(scale(2, Element(S({1, 2}))).coefficient(S({1, 2})) == 2);
}

TEST_CASE("overflow fails loudly") {
  const auto big = std::numeric_limits<Coefficient>::max();
  Element e(S({1, 2}), big);
  CHECK_THROWS_AS(e.addTerm(S({1, 2}), 1), Error);
  CHECK_THROWS_AS(scale(2, e), Error);
  try {
    scale(big, Element(S({1}), 2));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::IntegerOverflow);
  }
}

TEST_CASE("applyLinear") {
  CHECK(applyLinear(boundaryBasis, Element(S({1, 2, 1}))) ==
        Element(S({2, 1})) - Element(S({1, 2})));
  const Element x = Element(S({1, 3, 1, 2}), 3) - Element(S({2, 1}));
  CHECK(applyLinear([](const Surjection& u) { return Element(u); }, x) == x);

  // (2,1)^□ vanishes: no position precedes the occurrence of 2
  const Element psi2 = Element(S({1, 2})) + Element(S({2, 1}));
  CHECK(applyLinear([](const Surjection& u) { return squareOp(Element(u)); }, psi2) ==
        Element(S({1, 3, 1, 2})));
}

TEST_CASE("applyLinear tags errors with the basis term") {
  try {
    applyLinear([](const Surjection& u) { return squareOp(Element(u)); },
                Element(S({1, 2, 1, 2})));
    FAIL("expected MaxValueNotUnique");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MaxValueNotUnique);
    CHECK(std::string(e.what()).find("(1,2,1,2)") != std::string::npos);
  }
}

TEST_CASE("homogeneity") {
  CHECK(Element().isHomogeneous());
  CHECK((Element(S({1, 2})) + Element(S({2, 1}))).type() == std::pair{2, 0});
  const Element mixed = Element(S({1, 2})) + Element(S({1, 2, 1}));
  CHECK_FALSE(mixed.isHomogeneous());
  CHECK_THROWS_AS(boundary(mixed), Error);
}

TEST_CASE("module axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Element a = randomElement(rng);
    const Element b = randomElement(rng);
    const Element c = randomElement(rng);
    const Coefficient k = std::uniform_int_distribution<int>(-4, 4)(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(scale(k, a + b) == scale(k, a) + scale(k, b));
    const Element sum = a - a + b;
    for (const auto& [u, coeff] : sum.terms()) CHECK(coeff != 0);
  }
}
