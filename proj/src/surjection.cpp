#include "cactus/surjection.hpp"

#include <algorithm>
#include <sstream>

#include "cactus/error.hpp"

namespace cactus {

namespace {

std::string describe(std::span<const int> seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ',';
    os << seq[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

Surjection Surjection::validate(std::span<const int> seq) {
  if (seq.empty()) throw Error(ErrorKind::NotSurjective, "empty sequence");
  int arity = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) {
      throw Error(ErrorKind::NonPositive,
                  describe(seq) + " has entry " + std::to_string(seq[i]) + " at position " +
                      std::to_string(i + 1));
    }
    if (i + 1 < seq.size() && seq[i] == seq[i + 1]) {
      throw Error(ErrorKind::Degenerate, describe(seq) + " repeats " + std::to_string(seq[i]) +
                                             " at positions " + std::to_string(i + 1) + "," +
                                             std::to_string(i + 2));
    }
    arity = std::max(arity, seq[i]);
  }
  if (static_cast<std::size_t>(arity) > seq.size()) {
    throw Error(ErrorKind::NotSurjective, describe(seq) + " misses some value below " +
                                              std::to_string(arity));
  }
  std::vector<bool> seen(static_cast<std::size_t>(arity) + 1, false);
  for (int v : seq) seen[static_cast<std::size_t>(v)] = true;
  for (int v = 1; v <= arity; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::NotSurjective,
                  describe(seq) + " misses value " + std::to_string(v));
    }
  }
  return Surjection(std::vector<int>(seq.begin(), seq.end()), arity);
}

int Surjection::at(std::size_t pos) const {
  if (pos < 1 || pos > seq_.size()) {
    throw Error(ErrorKind::OutOfRange, "position " + std::to_string(pos) + " in " + toString());
  }
  return seq_[pos - 1];
}

int Surjection::multiplicity(int value) const {
  return static_cast<int>(std::count(seq_.begin(), seq_.end(), value));
}

std::string Surjection::toString() const { return describe(seq_); }

Surjection Surjection::withoutPosition(std::size_t pos) const {
  const int value = at(pos);
  const std::size_t i = pos - 1;
  if (i > 0 && i + 1 < seq_.size() && seq_[i - 1] == seq_[i + 1]) {
    throw Error(ErrorKind::Degenerate, "deleting position " + std::to_string(pos) + " of " +
                                           toString() + " joins two equal values");
  }
  if (multiplicity(value) == 1) {
    throw Error(ErrorKind::NotSurjective, "position " + std::to_string(pos) + " of " +
                                              toString() + " is the only occurrence of " +
                                              std::to_string(value));
  }
  std::vector<int> face;
  face.reserve(seq_.size() - 1);
  face.insert(face.end(), seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(i));
  face.insert(face.end(), seq_.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq_.end());
  return Surjection(std::move(face), arity_);
}

RecurrenceIndex::RecurrenceIndex(const Surjection& u) : prefix_(u.length() + 1, 0) {
  const auto& s = u.values();
  std::vector<bool> seenAfter(static_cast<std::size_t>(u.arity()) + 1, false);
  std::vector<int> recurs(s.size(), 0);
  for (std::size_t i = s.size(); i-- > 0;) {
    const auto v = static_cast<std::size_t>(s[i]);
    recurs[i] = seenAfter[v] ? 1 : 0;
    seenAfter[v] = true;
  }
  for (std::size_t i = 0; i < s.size(); ++i) prefix_[i + 1] = prefix_[i] + recurs[i];
}

int RecurrenceIndex::relativeDegree(std::size_t a, std::size_t b) const {
  // positions a..b-1
  return prefix_[b - 1] - prefix_[a - 1];
}

int relativeDegree(const Surjection& u, std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > u.length()) {
    throw Error(ErrorKind::OutOfRange, "window [" + std::to_string(a) + "," + std::to_string(b) +
                                           "] in " + u.toString());
  }
  return RecurrenceIndex(u).relativeDegree(a, b);
}

OccurrenceInfo occurrenceInfo(const Surjection& u, std::size_t pos) {
  const int value = u.at(pos);
  const auto& s = u.values();
  OccurrenceInfo info;
  info.isOnly = u.multiplicity(value) == 1;
  info.isLast = std::find(s.begin() + static_cast<std::ptrdiff_t>(pos), s.end(), value) == s.end();
  if (info.isLast && !info.isOnly) {
    for (std::size_t j = pos - 1; j >= 1; --j) {
      if (s[j - 1] == value) {
        info.penultimatePosition = j;
        break;
      }
    }
  }
  return info;
}

}  // namespace cactus
