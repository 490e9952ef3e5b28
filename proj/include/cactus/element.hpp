#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "cactus/surjection.hpp"

namespace cactus {

using Coefficient = std::int64_t;

/// Finite formal sum of surjections with integer coefficients. Zero
/// coefficients are never stored, so two Elements are equal iff their term
/// maps are equal.
class Element {
 public:
  using TermMap = std::map<Surjection, Coefficient>;

  Element() = default;
  Element(const Surjection& u, Coefficient coeff = 1) { addTerm(u, coeff); }  // NOLINT

  const TermMap& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coefficient coefficient(const Surjection& u) const;

  /// Adds `coeff * u` in place with overflow checking.
  void addTerm(const Surjection& u, Coefficient coeff);
  void addTerm(Surjection&& u, Coefficient coeff);

  /// this += c * other, reusing other's storage.
  void addScaled(Element&& other, Coefficient c);

  /// (arity, degree) shared by every term; nullopt for mixed Elements.
  /// The zero element has no type and is reported as nullopt too; use
  /// isHomogeneous() for the predicate.
  std::optional<std::pair<int, int>> type() const;
  bool isHomogeneous() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  TermMap terms_;
};

Coefficient checkedAdd(Coefficient a, Coefficient b);
Coefficient checkedMul(Coefficient a, Coefficient b);

Element add(const Element& a, const Element& b);
Element scale(Coefficient c, const Element& a);

using BasisMap = std::function<Element(const Surjection&)>;

/// Linear extension of a basis-level map. Errors thrown by `f` are re-raised
/// with the offending basis term appended.
Element applyLinear(const BasisMap& f, const Element& a);

/// Throws NotHomogeneous unless `a` is zero or homogeneous.
void requireHomogeneous(const Element& a, const char* operation);

}  // namespace cactus
