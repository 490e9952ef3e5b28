#include "cactus/ainfty.hpp"

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "cactus/cacti.hpp"
#include "cactus/error.hpp"
#include "cactus/operad.hpp"

namespace cactus {

namespace {

Coefficient parity(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Build-once, read-many cache. Values are computed outside the lock; a
// concurrent fill of the same key keeps whichever value landed first, and
// both are equal.
template <typename Key>
class ElementCache {
 public:
  template <typename Compute>
  const Element& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Element value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Element> table_;
};

ElementCache<GeneratorWord>& muCache() {
  static ElementCache<GeneratorWord> cache;
  return cache;
}

ElementCache<int>& psiCache() {
  static ElementCache<int> cache;
  return cache;
}

std::size_t topPosition(const Surjection& u) {
  requireUniqueTop(u);
  const auto& s = u.values();
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == u.arity()) return j + 1;
  }
  return 0;
}

// before = true gives u^□ (insertions left of the top lobe), false gives u^■.
Element insertionSum(const Surjection& u, bool before) {
  const std::size_t top = topPosition(u);
  const RecurrenceIndex index(u);
  const int k = u.degree();
  Element out;
  for (std::size_t j = 1; j <= u.length(); ++j) {
    if (j == top || (j < top) != before) continue;
    const Coefficient sign = parity(k + index.relativeDegree(1, j));
    out.addTerm(insertLobe(u, j), before ? sign : -sign);
  }
  return out;
}

Element twoLobe(int first, int second) {
  return Element(Surjection::validate({first, second}));
}

const Element& bracket() {
  static const Element element(Surjection::validate({1, 2, 1}));
  return element;
}

}  // namespace

char letterChar(Letter letter) noexcept { return letter == Letter::White ? 'w' : 'b'; }

GeneratorWord::GeneratorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::InvalidArgument, "generator words are non-empty");
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  static constexpr std::string_view kWhiteGlyph = "□";
  static constexpr std::string_view kBlackGlyph = "■";
  static constexpr std::string_view kBulletGlyph = "•";
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == 'w' || c == 'W') {
      letters.push_back(Letter::White);
      ++pos;
    } else if (c == 'b' || c == 'B') {
      letters.push_back(Letter::Black);
      ++pos;
    } else if (text.substr(pos, kWhiteGlyph.size()) == kWhiteGlyph) {
      letters.push_back(Letter::White);
      pos += kWhiteGlyph.size();
    } else if (text.substr(pos, kBlackGlyph.size()) == kBlackGlyph) {
      letters.push_back(Letter::Black);
      pos += kBlackGlyph.size();
    } else if (text.substr(pos, kBulletGlyph.size()) == kBulletGlyph) {
      letters.push_back(Letter::Black);
      pos += kBulletGlyph.size();
    } else {
      throw SyntaxError("unexpected character in generator word '" + std::string(text) + "'", 1,
                        static_cast<int>(pos) + 1);
    }
  }
  if (letters.empty()) throw SyntaxError("empty generator word", 1, 1);
  return GeneratorWord(std::move(letters));
}

GeneratorWord GeneratorWord::appended(Letter letter) const {
  auto letters = letters_;
  letters.push_back(letter);
  return GeneratorWord(std::move(letters));
}

GeneratorWord GeneratorWord::prefix() const {
  return GeneratorWord(std::vector<Letter>(letters_.begin(), letters_.end() - 1));
}

std::string GeneratorWord::toString() const {
  std::string out;
  for (Letter l : letters_) out.push_back(letterChar(l));
  return out;
}

int SpliceDecomposition::sign() const {
  const int p = outerArity();
  const int q = innerArity();
  return static_cast<int>(parity((slot - 1) + q * (p - slot)));
}

GeneratorWord splice(const GeneratorWord& outer, int slot, const GeneratorWord& inner) {
  if (slot < 1 || slot > outer.arity()) {
    throw Error(ErrorKind::IndexRange,
                "slot " + std::to_string(slot) + " for word " + outer.toString());
  }
  const auto& o = outer.letters();
  std::vector<Letter> letters(o.begin(), o.begin() + (slot - 1));
  letters.insert(letters.end(), inner.letters().begin(), inner.letters().end());
  letters.insert(letters.end(), o.begin() + (slot - 1), o.end());
  return GeneratorWord(std::move(letters));
}

std::vector<SpliceDecomposition> spliceDecompositions(const GeneratorWord& xi) {
  const int n = xi.arity();
  const auto& letters = xi.letters();
  std::vector<SpliceDecomposition> out;
  for (int q = 2; q <= n - 1; ++q) {
    const int p = n + 1 - q;
    for (int i = 1; i <= p; ++i) {
      const auto innerBegin = letters.begin() + (i - 1);
      const auto innerEnd = innerBegin + (q - 1);
      std::vector<Letter> outer(letters.begin(), innerBegin);
      outer.insert(outer.end(), innerEnd, letters.end());
      out.push_back({GeneratorWord(std::move(outer)),
                     GeneratorWord(std::vector<Letter>(innerBegin, innerEnd)), i});
    }
  }
  return out;
}

void requireUniqueTop(const Surjection& u) {
  if (u.multiplicity(u.arity()) != 1) {
    throw Error(ErrorKind::MaxValueNotUnique,
                u.toString() + " has " + std::to_string(u.multiplicity(u.arity())) +
                    " occurrences of its top value " + std::to_string(u.arity()));
  }
}

Element squareOp(const Element& a) {
  requireHomogeneous(a, "squareOp");
  return applyLinear([](const Surjection& u) { return insertionSum(u, true); }, a);
}

Element bulletOp(const Element& a) {
  requireHomogeneous(a, "bulletOp");
  return applyLinear([](const Surjection& u) { return insertionSum(u, false); }, a);
}

Element letterOp(Letter letter, const Element& a) {
  return letter == Letter::White ? squareOp(a) : bulletOp(a);
}

const Element& mu(const GeneratorWord& xi) {
  return muCache().get(xi, [&] {
    if (xi.length() == 1) {
      return xi.last() == Letter::White ? twoLobe(2, 1) : twoLobe(1, 2);
    }
    return letterOp(xi.last(), mu(xi.prefix()));
  });
}

std::vector<GeneratorWord> phiImage(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "phi(m_n) needs n >= 2");
  const auto length = static_cast<std::size_t>(n - 1);
  std::vector<GeneratorWord> words;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    std::vector<Letter> letters(length);
    for (std::size_t k = 0; k < length; ++k) {
      letters[k] = (bits >> (length - 1 - k)) & 1U ? Letter::Black : Letter::White;
    }
    words.emplace_back(std::move(letters));
  }
  return words;
}

const Element& psi(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "psi(m_n) needs n >= 2");
  return psiCache().get(n, [&] {
    Element sum;
    for (const auto& xi : phiImage(n)) sum += mu(xi);
    return sum;
  });
}

Coefficient psiSign(const Surjection& u) {
  if (u.arity() < 2) return 0;
  return psi(u.arity()).coefficient(u);
}

Element a2BoundaryImage(const GeneratorWord& xi) {
  Element out;
  for (const auto& d : spliceDecompositions(xi)) {
    out += scale(d.sign(), compose(mu(d.outer), d.slot, mu(d.inner)));
  }
  return out;
}

Element aInfBoundaryImage(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "psi(d m_n) needs n >= 2");
  Element out;
  for (int q = 2; q <= n - 1; ++q) {
    const int p = n + 1 - q;
    for (int i = 1; i <= p; ++i) {
      out += scale(parity((i - 1) + q * (p - i)), compose(psi(p), i, psi(q)));
    }
  }
  return out;
}

VerificationReport verifyBncomp(const Surjection& u) {
  requireUniqueTop(u);
  const int n = u.arity();
  const Coefficient sign = parity(u.degree());
  const Element x(u);
  const Element white = squareOp(x);
  const Element black = bulletOp(x);
  const auto rhs = [&](const Element& v) {
    return scale(sign, compose(v, 1, x)) - compose(x, n, v);
  };
  std::vector<VerificationReport> parts;
  parts.push_back(compareElements("difference", white - black, rhs(bracket())));
  // differentiating the first equation puts (-1)^k on both compositions
  const auto boundaryRhs = [&](const Element& v) {
    return scale(sign, compose(v, 1, x) - compose(x, n, v));
  };
  parts.push_back(compareElements("boundary-white", boundary(white) - squareOp(boundary(x)),
                                  boundaryRhs(twoLobe(2, 1))));
  parts.push_back(compareElements("boundary-black", boundary(black) - bulletOp(boundary(x)),
                                  boundaryRhs(twoLobe(1, 2))));
  return combineReports("bncomp " + u.toString(), parts);
}

VerificationReport verifyBncomp2(const Surjection& outer, int i, const Surjection& inner) {
  requireUniqueTop(outer);
  requireUniqueTop(inner);
  const int p = outer.arity();
  if (i < 1 || i > p) {
    throw Error(ErrorKind::IndexRange, "i=" + std::to_string(i) + " for " + outer.toString());
  }
  const Coefficient sign = parity(inner.degree());
  const Element a(outer);
  const Element b(inner);
  const Element composite = compose(a, i, b);
  std::vector<VerificationReport> parts;
  for (Letter letter : {Letter::White, Letter::Black}) {
    Element rhs = scale(sign, compose(letterOp(letter, a), i, b));
    if (i == p) rhs += compose(a, p, letterOp(letter, b));
    parts.push_back(compareElements(letter == Letter::White ? "white" : "black",
                                    letterOp(letter, composite), rhs));
  }
  return combineReports(
      "bncomp2 " + outer.toString() + " o" + std::to_string(i) + " " + inner.toString(), parts);
}

VerificationReport verifyMupartial(const GeneratorWord& xi) {
  const int n = xi.arity();
  const Coefficient sign = parity(n);
  const Element& base = mu(xi);
  const Element baseBoundary = boundary(base);
  const Element baseImage = a2BoundaryImage(xi);
  std::vector<VerificationReport> parts;
  for (Letter letter : {Letter::White, Letter::Black}) {
    const GeneratorWord extended = xi.appended(letter);
    const Element& two = mu(GeneratorWord({letter}));
    const Element rhs = scale(sign, compose(two, 1, base) - compose(base, n, two));
    const std::string tag(1, letterChar(letter));
    parts.push_back(compareElements("delta-mu " + tag,
                                    boundary(mu(extended)) - letterOp(letter, baseBoundary), rhs));
    parts.push_back(compareElements("mu-partial " + tag,
                                    a2BoundaryImage(extended) - letterOp(letter, baseImage), rhs));
  }
  return combineReports("mupartial " + xi.toString(), parts);
}

VerificationReport verifyMuMorphism(const GeneratorWord& xi) {
  return compareElements("a2inf " + xi.toString(), boundary(mu(xi)), a2BoundaryImage(xi));
}

VerificationReport verifyPsiMorphism(int n) {
  return compareElements("ainf n=" + std::to_string(n), boundary(psi(n)), aInfBoundaryImage(n));
}

VerificationReport verifyPsiSupport(int n) {
  const Element& value = psi(n);
  const auto expected = generateCPrime(n);
  const std::set<Surjection> support(expected.begin(), expected.end());
  VerificationReport report{"psi-support n=" + std::to_string(n), true, std::nullopt, {}};
  Element offending;
  for (const auto& [u, c] : value.terms()) {
    if (!support.contains(u) || (c != 1 && c != -1)) offending.addTerm(u, c);
  }
  for (const auto& u : expected) {
    if (value.coefficient(u) == 0) offending.addTerm(u, 1);
  }
  if (!offending.isZero()) {
    report.pass = false;
    report.witness = offending;
    report.note = "terms outside C'_n, with coefficient other than +-1, or missing";
  }
  return report;
}

}  // namespace cactus
