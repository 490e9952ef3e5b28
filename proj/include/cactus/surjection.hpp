#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cactus {

/// A non-degenerate surjection u: {1,...,n+k} -> {1,...,n}, stored as the
/// sequence of its values. Arity is n, degree is k.
///
/// Values and positions are 1-based throughout the public API.
class Surjection {
 public:
  /// Checks surjectivity, non-degeneracy and positivity. The arity is the
  /// maximal value of the sequence.
  static Surjection validate(std::span<const int> seq);
  static Surjection validate(std::initializer_list<int> seq) {
    return validate(std::span<const int>(seq.begin(), seq.size()));
  }

  /// The operadic unit (1).
  static Surjection unit() { return validate({1}); }

  const std::vector<int>& values() const noexcept { return seq_; }
  int arity() const noexcept { return arity_; }
  int degree() const noexcept { return static_cast<int>(seq_.size()) - arity_; }
  std::size_t length() const noexcept { return seq_.size(); }

  /// u(pos), 1-based.
  int at(std::size_t pos) const;
  int operator()(std::size_t pos) const { return at(pos); }

  /// Number of occurrences of `value`.
  int multiplicity(int value) const;

  /// "(1,3,1,2)"
  std::string toString() const;

  /// u with position `pos` deleted. Throws unless the value there occurs
  /// elsewhere and its neighbours differ, i.e. unless the face is again a
  /// non-degenerate surjection of the same arity.
  Surjection withoutPosition(std::size_t pos) const;

  friend bool operator==(const Surjection&, const Surjection&) = default;
  friend std::strong_ordering operator<=>(const Surjection& a, const Surjection& b) {
    return a.seq_ <=> b.seq_;
  }

 private:
  Surjection(std::vector<int> seq, int arity) : seq_(std::move(seq)), arity_(arity) {}

  std::vector<int> seq_;
  int arity_ = 0;
};

/// Number of positions i in [a, b-1] whose value u(i) occurs again at some
/// position after i in the whole sequence.
int relativeDegree(const Surjection& u, std::size_t a, std::size_t b);

/// Per-position flags: recursLater[i-1] is true iff u(i) occurs again after i.
/// Prefix sums over this give relativeDegree in O(1).
class RecurrenceIndex {
 public:
  explicit RecurrenceIndex(const Surjection& u);

  int relativeDegree(std::size_t a, std::size_t b) const;

 private:
  std::vector<int> prefix_;  // prefix_[i] = #recurring positions among 1..i
};

struct OccurrenceInfo {
  bool isOnly = false;
  bool isLast = false;
  std::optional<std::size_t> penultimatePosition;

  friend bool operator==(const OccurrenceInfo&, const OccurrenceInfo&) = default;
};

OccurrenceInfo occurrenceInfo(const Surjection& u, std::size_t pos);

}  // namespace cactus
