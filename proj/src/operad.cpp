#include "cactus/operad.hpp"

#include <numeric>
#include <utility>

#include "cactus/error.hpp"
#include "cactus/fault.hpp"

namespace cactus {

namespace {

bool isNonDegenerate(const std::vector<int>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == seq[i + 1]) return false;
  }
  return true;
}

// Everything about v ∘_t u that does not depend on the breakpoints.
struct SplitLayout {
  int t = 0;
  int innerArity = 0;  // n
  std::size_t innerLength = 0;
  std::vector<std::size_t> lobePositions;    // occurrences of t in v
  std::vector<std::vector<int>> outerParts;  // v_0..v_r
  std::vector<int> outerDegrees;             // v_1..v_r
  RecurrenceIndex inner;

  SplitLayout(const Surjection& v, int lobe, const Surjection& u)
      : t(lobe), innerArity(u.arity()), innerLength(u.length()), inner(u) {
    if (lobe < 1 || lobe > v.arity()) {
      throw Error(ErrorKind::LobeOutOfRange,
                  "lobe " + std::to_string(lobe) + " in " + v.toString());
    }
    const auto& vs = v.values();
    outerParts.emplace_back();
    for (std::size_t pos = 1; pos <= vs.size(); ++pos) {
      if (vs[pos - 1] == t) {
        lobePositions.push_back(pos);
        outerParts.emplace_back();
      } else {
        outerParts.back().push_back(vs[pos - 1]);
      }
    }
    const RecurrenceIndex outer(v);
    const std::size_t r = lobePositions.size();
    for (std::size_t q = 1; q <= r; ++q) {
      // (t, v_q, t) for q < r, (t, v_r) for q = r
      const std::size_t a = lobePositions[q - 1];
      const std::size_t b = q < r ? lobePositions[q] : vs.size();
      outerDegrees.push_back(outer.relativeDegree(a, b));
    }
  }

  std::size_t multiplicity() const { return lobePositions.size(); }

  int relabelOuter(int s) const { return s < t ? s : s + innerArity - 1; }
  int relabelInner(int s) const { return s + t - 1; }

  int sign(const std::vector<int>& innerDegrees) const {
    if (cactus::testing::activeSignFault() == cactus::testing::SignFault::IgnoreKoszulSign) {
      return 1;
    }
    const std::size_t r = multiplicity();
    // source order v_1..v_r, u_1..u_r; target order u_1, v_1, ..., u_r, v_r
    std::vector<int> degrees(outerDegrees);
    degrees.insert(degrees.end(), innerDegrees.begin(), innerDegrees.end());
    std::vector<std::size_t> order;
    order.reserve(2 * r);
    for (std::size_t p = 0; p < r; ++p) {
      order.push_back(r + p);
      order.push_back(p);
    }
    return koszulSign(degrees, order);
  }

  template <typename Visit>
  void forEachBreakpoints(Visit&& visit) const {
    const std::size_t r = multiplicity();
    std::vector<std::size_t> js(r + 1, 1);
    js[r] = innerLength;
    if (r == 1) {
      visit(js);
      return;
    }
    // interior breakpoints j_1 <= ... <= j_{r-1} in [1, |u|]
    auto recurse = [&](auto&& self, std::size_t idx) -> void {
      if (idx == r) {
        visit(js);
        return;
      }
      for (std::size_t j = js[idx - 1]; j <= innerLength; ++j) {
        js[idx] = j;
        self(self, idx + 1);
      }
    };
    recurse(recurse, 1);
  }
};

}  // namespace

int koszulSign(std::span<const int> degrees, std::span<const std::size_t> order) {
  // Bubble the target arrangement back into source order, one adjacent
  // transposition at a time.
  std::vector<std::size_t> current(order.begin(), order.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < current.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < current.size(); ++k) {
      if (current[k] > current[k + 1]) {
        if ((degrees[current[k]] * degrees[current[k + 1]]) % 2 != 0) sign = -sign;
        std::swap(current[k], current[k + 1]);
      }
    }
  }
  return sign;
}

std::vector<CompositionSplit> compositionSplits(const Surjection& v, int t, const Surjection& u) {
  const SplitLayout layout(v, t, u);
  const auto& us = u.values();
  std::vector<CompositionSplit> out;
  layout.forEachBreakpoints([&](const std::vector<std::size_t>& js) {
    CompositionSplit split;
    split.lobe = t;
    split.multiplicity = static_cast<int>(layout.multiplicity());
    split.breakpoints = js;
    split.outerParts = layout.outerParts;
    split.outerDegrees = layout.outerDegrees;
    for (int s : layout.outerParts[0]) split.sequence.push_back(layout.relabelOuter(s));
    for (std::size_t p = 1; p < js.size(); ++p) {
      std::vector<int> block(us.begin() + static_cast<std::ptrdiff_t>(js[p - 1] - 1),
                             us.begin() + static_cast<std::ptrdiff_t>(js[p]));
      split.innerDegrees.push_back(layout.inner.relativeDegree(js[p - 1], js[p]));
      for (int s : block) split.sequence.push_back(layout.relabelInner(s));
      for (int s : layout.outerParts[p]) split.sequence.push_back(layout.relabelOuter(s));
      split.innerParts.push_back(std::move(block));
    }
    split.sign = layout.sign(split.innerDegrees);
    out.push_back(std::move(split));
  });
  return out;
}

Element composeBasis(const Surjection& v, int t, const Surjection& u) {
  const SplitLayout layout(v, t, u);
  const auto& us = u.values();
  Element out;
  std::vector<int> seq;
  std::vector<int> innerDegrees;
  layout.forEachBreakpoints([&](const std::vector<std::size_t>& js) {
    seq.clear();
    innerDegrees.clear();
    for (int s : layout.outerParts[0]) seq.push_back(layout.relabelOuter(s));
    for (std::size_t p = 1; p < js.size(); ++p) {
      for (std::size_t i = js[p - 1]; i <= js[p]; ++i) seq.push_back(layout.relabelInner(us[i - 1]));
      for (int s : layout.outerParts[p]) seq.push_back(layout.relabelOuter(s));
      innerDegrees.push_back(layout.inner.relativeDegree(js[p - 1], js[p]));
    }
    if (!isNonDegenerate(seq)) return;
    out.addTerm(Surjection::validate(seq), layout.sign(innerDegrees));
  });
  return out;
}

Element compose(const Element& a, int t, const Element& b) {
  requireHomogeneous(a, "compose");
  requireHomogeneous(b, "compose");
  if (auto ta = a.type(); ta && (t < 1 || t > ta->first)) {
    throw Error(ErrorKind::LobeOutOfRange,
                "lobe " + std::to_string(t) + " exceeds arity " + std::to_string(ta->first));
  }
  Element out;
  for (const auto& [v, cv] : a.terms()) {
    for (const auto& [u, cu] : b.terms()) {
      out += scale(checkedMul(cv, cu), composeBasis(v, t, u));
    }
  }
  return out;
}

Element boundaryBasis(const Surjection& u) {
  const auto& s = u.values();
  const std::size_t len = s.size();
  const bool ignoreLast =
      cactus::testing::activeSignFault() == cactus::testing::SignFault::IgnoreLastOccurrence;
  // One scratch buffer, this runs in the innermost loop of the d^2 checks.
  //   previous[i]: earlier position of s[i], 1-based, 0 if none
  //   next[i]:     later position of s[i], 0 if none
  //   recurring[i]: number of positions among 1..i whose value recurs later
  std::vector<std::size_t> scratch(3 * len + 1 + static_cast<std::size_t>(u.arity()) + 1, 0);
  std::size_t* previous = scratch.data();
  std::size_t* next = previous + len;
  std::size_t* recurring = next + len;
  std::size_t* lastSeen = recurring + len + 1;
  for (std::size_t i = 0; i < len; ++i) {
    auto& seen = lastSeen[s[i]];
    if (seen != 0) {
      previous[i] = seen;
      next[seen - 1] = i + 1;
    }
    seen = i + 1;
  }
  for (std::size_t i = 0; i < len; ++i) recurring[i + 1] = recurring[i] + (next[i] != 0 ? 1 : 0);
  // relative degree of positions a..b-1
  const auto relDeg = [&](std::size_t a, std::size_t b) { return recurring[b - 1] - recurring[a - 1]; };

  Element out;
  for (std::size_t i = 1; i <= len; ++i) {
    const bool isLast = next[i - 1] == 0;
    if (isLast && previous[i - 1] == 0) continue;  // only occurrence
    if (i > 1 && i < len && s[i - 2] == s[i]) continue;  // degenerate face
    std::size_t exponent = 0;
    if (!isLast) {
      exponent = relDeg(1, i);
    } else if (!ignoreLast) {
      exponent = relDeg(1, previous[i - 1] + 1);
    }
    out.addTerm(u.withoutPosition(i), exponent % 2 == 0 ? 1 : -1);
  }
  return out;
}

Element boundary(const Element& a) {
  requireHomogeneous(a, "boundary");
  return applyLinear(boundaryBasis, a);
}

Surjection insertLobe(const Surjection& u, std::size_t j) {
  const int value = u.at(j);
  std::vector<int> seq;
  seq.reserve(u.length() + 2);
  const auto& s = u.values();
  seq.insert(seq.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j));
  seq.push_back(u.arity() + 1);
  seq.push_back(value);
  seq.insert(seq.end(), s.begin() + static_cast<std::ptrdiff_t>(j), s.end());
  return Surjection::validate(seq);
}

Element bracketCompose(const Surjection& u) {
  const RecurrenceIndex index(u);
  Element out;
  for (std::size_t j = 1; j <= u.length(); ++j) {
    out.addTerm(insertLobe(u, j), index.relativeDegree(1, j) % 2 == 0 ? 1 : -1);
  }
  return out;
}

VerificationReport checkOperadAxioms(const Surjection& a, int i, const Surjection& b, int j,
                                     const Surjection& c) {
  const int m = b.arity();
  const int n = c.arity();
  if (i < 1 || i > a.arity()) {
    throw Error(ErrorKind::IndexRange, "i=" + std::to_string(i) + " for " + a.toString());
  }
  if (j < 1 || j > a.arity() + m - 1) {
    throw Error(ErrorKind::IndexRange, "j=" + std::to_string(j) + " for arity " +
                                           std::to_string(a.arity() + m - 1));
  }
  const Element lhs = compose(composeBasis(a, i, b), j, Element(c));
  const Coefficient swap = (b.degree() * c.degree()) % 2 == 0 ? 1 : -1;
  const std::string name = "operad-axiom " + a.toString() + " o" + std::to_string(i) + " " +
                           b.toString() + " o" + std::to_string(j) + " " + c.toString();
  if (j < i) {
    const Element rhs = scale(swap, compose(composeBasis(a, j, c), i + n - 1, Element(b)));
    return compareElements(name, lhs, rhs, "relation 1");
  }
  if (j < i + m) {
    const Element rhs = compose(Element(a), i, composeBasis(b, j - i + 1, c));
    return compareElements(name, lhs, rhs, "relation 2");
  }
  const Element rhs = scale(swap, compose(composeBasis(a, j - m + 1, c), i, Element(b)));
  return compareElements(name, lhs, rhs, "relation 1, b and c exchanged");
}

VerificationReport checkDerivation(const Surjection& a, int i, const Surjection& b) {
  if (i < 1 || i > a.arity()) {
    throw Error(ErrorKind::IndexRange, "i=" + std::to_string(i) + " for " + a.toString());
  }
  const Element lhs = boundary(composeBasis(a, i, b));
  const Coefficient sign = a.degree() % 2 == 0 ? 1 : -1;
  const Element rhs =
      compose(boundaryBasis(a), i, Element(b)) + scale(sign, compose(Element(a), i, boundaryBasis(b)));
  return compareElements("derivation " + a.toString() + " o" + std::to_string(i) + " " +
                             b.toString(),
                         lhs, rhs);
}

}  // namespace cactus
