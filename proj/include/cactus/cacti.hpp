#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "cactus/surjection.hpp"

namespace cactus {

inline constexpr int kUnboundedLevel = std::numeric_limits<int>::max();
inline constexpr std::size_t kDefaultMaxLength = 14;

/// Smallest m with u in F_m: the longest alternating subsequence (i,j,i,...)
/// over all pairs i != j, minus one. Sequences with a single value are in F_1.
int filtrationLevel(const Surjection& u);

/// No subsequence (i,j,i,j) with i != j, i.e. filtrationLevel(u) <= 2.
bool isCactus(const Surjection& u);

/// Positions (1-based) of an (i,j,i,j) subsequence, if any.
std::optional<std::array<std::size_t, 4>> findCrossing(const Surjection& u);

/// One lobe of a cactus. `arcs` are the positions of the lobe's label in the
/// sequence; `attachments[g]` holds, in traversal order, the lobes that hang
/// off the intersection point between arcs[g] and arcs[g+1].
struct LobeNode {
  int label = 0;
  std::vector<std::size_t> arcs;
  std::vector<std::vector<LobeNode>> attachments;

  friend bool operator==(const LobeNode&, const LobeNode&) = default;
};

/// Planar reading of a cactus: the lobes touching the root point, in
/// boundary order starting at the root.
struct LobeTree {
  std::vector<LobeNode> roots;

  std::size_t lobeCount() const;
  friend bool operator==(const LobeTree&, const LobeTree&) = default;
};

/// Throws NotACactus with an (i,j,i,j) witness if u is not a cactus.
LobeTree lobeTree(const Surjection& u);

/// Boundary traversal of the tree; inverse of lobeTree.
Surjection flatten(const LobeTree& tree);

/// (parent, child) label pairs in depth-first traversal order.
std::vector<std::pair<int, int>> attachmentEdges(const LobeTree& tree);

/// All non-degenerate surjections of arity n and degree k whose filtration
/// level is at most `level`, in lexicographic order. Throws ResourceBound if
/// n + k exceeds maxLength.
std::vector<Surjection> enumerateBasis(int n, int k, int level,
                                       std::size_t maxLength = kDefaultMaxLength);

/// True if u has a subsequence (i,j,i) with j = i+1 or j < i.
bool hasForbiddenTriple(const Surjection& u);

/// An element of C'_n together with the element of C'_{n-1} it was grown
/// from: cactus = insertLobe(*parent, insertedAt).
struct CPrimeEntry {
  Surjection cactus;
  std::optional<Surjection> parent;
  std::size_t insertedAt = 0;
};

/// C'_n built by inserting lobe n into every arc of each element of C'_{n-1}
/// except the arcs of lobe n-1. Sorted lexicographically by cactus.
std::vector<CPrimeEntry> cprimeFamily(int n, std::size_t maxLength = kDefaultMaxLength);
std::vector<Surjection> generateCPrime(int n, std::size_t maxLength = kDefaultMaxLength);

/// C'_n by filtering enumerateBasis(n, n-2, 2) through hasForbiddenTriple.
std::vector<Surjection> filterCPrime(int n, std::size_t maxLength = kDefaultMaxLength);

/// 2(2n-5)!! for n >= 3, and 2 for n = 2.
long long cprimeCount(int n);

}  // namespace cactus
