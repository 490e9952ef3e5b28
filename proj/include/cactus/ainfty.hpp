#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/element.hpp"
#include "cactus/report.hpp"
#include "cactus/surjection.hpp"

namespace cactus {

/// The two letters naming generators of the matching-dialgebra operad:
/// White is the white square, Black the black square.
enum class Letter : std::uint8_t { White, Black };

char letterChar(Letter letter) noexcept;  // 'w' / 'b'

/// A word ξ in {White, Black}^{n-1} naming the generator m_ξ of arity n and
/// degree n-2. Words are ordered lexicographically with White < Black.
class GeneratorWord {
 public:
  explicit GeneratorWord(std::vector<Letter> letters);

  /// Accepts 'w'/'b' (either case) and the glyphs □ ■ •.
  static GeneratorWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int arity() const noexcept { return static_cast<int>(letters_.size()) + 1; }
  int degree() const noexcept { return arity() - 2; }
  Letter last() const noexcept { return letters_.back(); }

  GeneratorWord appended(Letter letter) const;
  /// The word without its last letter; requires length() >= 2.
  GeneratorWord prefix() const;

  std::string toString() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
  friend std::strong_ordering operator<=>(const GeneratorWord& a, const GeneratorWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// ξ = ξ' ∘_slot ξ'': the inner word is spliced into the outer one before
/// its slot-th letter.
struct SpliceDecomposition {
  GeneratorWord outer;  // arity p
  GeneratorWord inner;  // arity q
  int slot = 1;         // 1 <= slot <= p

  int outerArity() const { return outer.arity(); }
  int innerArity() const { return inner.arity(); }
  /// (-1)^{(slot-1) + q(p-slot)}
  int sign() const;
};

GeneratorWord splice(const GeneratorWord& outer, int slot, const GeneratorWord& inner);

/// Every decomposition of ξ with p, q >= 2; empty for arity 2.
std::vector<SpliceDecomposition> spliceDecompositions(const GeneratorWord& xi);

/// u^□ = Σ_{j<i} (-1)^{k+|u|_j} ů_j where u^{-1}(n) = {i}, extended linearly.
Element squareOp(const Element& a);
/// u^■ = -Σ_{j>i} (-1)^{k+|u|_j} ů_j, extended linearly.
Element bulletOp(const Element& a);
Element letterOp(Letter letter, const Element& a);

/// μ(m_ξ), memoized; safe to call from several threads.
const Element& mu(const GeneratorWord& xi);

/// Words of length n-1 in lexicographic order; φ(m_n) is their sum.
std::vector<GeneratorWord> phiImage(int n);

/// ψ(m_n) = Σ_ξ μ(m_ξ) over phiImage(n), memoized.
const Element& psi(int n);

/// The coefficient of u in ψ(m_n), n = arity(u). Zero off C'_n.
Coefficient psiSign(const Surjection& u);

/// μ(∂m_ξ) = Σ sign · μ(m_ξ') ∘_i μ(m_ξ'') over splice decompositions.
Element a2BoundaryImage(const GeneratorWord& xi);

/// ψ(∂m_n) = Σ_{p+q-1=n} Σ_i (-1)^{(i-1)+q(p-i)} ψ(m_p) ∘_i ψ(m_q).
Element aInfBoundaryImage(int n);

/// Throws MaxValueNotUnique unless the top value of u occurs exactly once.
void requireUniqueTop(const Surjection& u);

/// The three identities relating ^□, ^■ with (1,2,1), (2,1), (1,2) and δ.
VerificationReport verifyBncomp(const Surjection& u);

/// (u'∘_i u'')^□ and ^■ expressed through u'^□, u''^□ (and ^■).
VerificationReport verifyBncomp2(const Surjection& outer, int i, const Surjection& inner);

/// The four identities used to show δμ = μ∂ on m_{ξ□} and m_{ξ■}.
VerificationReport verifyMupartial(const GeneratorWord& xi);

/// δ(μ(m_ξ)) = μ(∂m_ξ).
VerificationReport verifyMuMorphism(const GeneratorWord& xi);

/// δ(ψ(m_n)) = ψ(∂m_n).
VerificationReport verifyPsiMorphism(int n);

/// Support of ψ(m_n) is exactly C'_n and every coefficient is ±1.
VerificationReport verifyPsiSupport(int n);

}  // namespace cactus
