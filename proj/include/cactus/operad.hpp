#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cactus/element.hpp"
#include "cactus/report.hpp"
#include "cactus/surjection.hpp"

namespace cactus {

/// One summand of v ∘_t u: a choice of breakpoints 1 = j_0 <= ... <= j_r = |u|
/// cutting u into overlapping blocks u_1..u_r that are interleaved with the
/// pieces v_0..v_r of v around the r occurrences of t.
struct CompositionSplit {
  int lobe = 0;          // t
  int multiplicity = 0;  // r
  std::vector<std::size_t> breakpoints;   // j_0..j_r
  std::vector<std::vector<int>> outerParts;  // v_0..v_r, original labels
  std::vector<std::vector<int>> innerParts;  // u_1..u_r, original labels
  std::vector<int> outerDegrees;  // degrees of v_1..v_r
  std::vector<int> innerDegrees;  // degrees of u_1..u_r
  int sign = 1;
  std::vector<int> sequence;  // (βv_0, αu_1, βv_1, ..., αu_r, βv_r)
};

/// Sign of the Koszul rule for reordering graded symbols. `order[k]` is the
/// source index of the symbol placed at target slot k.
int koszulSign(std::span<const int> degrees, std::span<const std::size_t> order);

/// All breakpoint choices for v ∘_t u, including ones whose sequence is
/// degenerate (composeBasis drops those).
std::vector<CompositionSplit> compositionSplits(const Surjection& v, int t, const Surjection& u);

Element composeBasis(const Surjection& v, int t, const Surjection& u);
Element compose(const Element& a, int t, const Element& b);

Element boundaryBasis(const Surjection& u);
Element boundary(const Element& a);

/// ů_j: u with u(j) replaced by (u(j), n+1, u(j)).
Surjection insertLobe(const Surjection& u, std::size_t j);

/// (1,2,1) ∘_1 u evaluated by the closed formula Σ_j (-1)^{|u|_j} ů_j.
Element bracketCompose(const Surjection& u);

/// Checks the operadic relation that applies to (a ∘_i b) ∘_j c:
///   j < i             : (a∘_i b)∘_j c = (-1)^{|b||c|} (a∘_j c)∘_{i+n-1} b
///   i <= j < i+m      : (a∘_i b)∘_j c = a∘_i (b∘_{j-i+1} c)
///   j >= i+m          : the first relation read with b and c exchanged,
///                       (a∘_i b)∘_j c = (-1)^{|b||c|} (a∘_{j-m+1} c)∘_i b
/// where b has arity m and c has arity n.
VerificationReport checkOperadAxioms(const Surjection& a, int i, const Surjection& b, int j,
                                     const Surjection& c);

/// δ(a∘_i b) = δa∘_i b + (-1)^{|a|} a∘_i δb
VerificationReport checkDerivation(const Surjection& a, int i, const Surjection& b);

}  // namespace cactus
