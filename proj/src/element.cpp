#include "cactus/element.hpp"

#include "cactus/error.hpp"

namespace cactus {

Coefficient checkedAdd(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::IntegerOverflow,
                std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

Coefficient checkedMul(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::IntegerOverflow,
                std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

Coefficient Element::coefficient(const Surjection& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? 0 : it->second;
}

void Element::addTerm(const Surjection& u, Coefficient coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(u, coeff);
  if (inserted) return;
  it->second = checkedAdd(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void Element::addTerm(Surjection&& u, Coefficient coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(u), coeff);
  if (inserted) return;
  it->second = checkedAdd(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void Element::addScaled(Element&& other, Coefficient c) {
  if (c == 0) return;
  while (!other.terms_.empty()) {
    auto node = other.terms_.extract(other.terms_.begin());
    node.mapped() = checkedMul(node.mapped(), c);
    auto result = terms_.insert(std::move(node));
    if (result.inserted) continue;
    result.position->second = checkedAdd(result.position->second, result.node.mapped());
    if (result.position->second == 0) terms_.erase(result.position);
  }
}

std::optional<std::pair<int, int>> Element::type() const {
  if (terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  std::pair<int, int> t{first.arity(), first.degree()};
  for (const auto& [u, c] : terms_) {
    if (u.arity() != t.first || u.degree() != t.second) return std::nullopt;
  }
  return t;
}

bool Element::isHomogeneous() const { return terms_.empty() || type().has_value(); }

Element& Element::operator+=(const Element& other) {
  for (const auto& [u, c] : other.terms_) addTerm(u, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [u, c] : other.terms_) addTerm(u, checkedMul(c, -1));
  return *this;
}

Element Element::operator-() const { return scale(-1, *this); }

Element add(const Element& a, const Element& b) { return a + b; }

Element scale(Coefficient c, const Element& a) {
  Element out;
  if (c == 0) return out;
  for (const auto& [u, coeff] : a.terms()) out.addTerm(u, checkedMul(c, coeff));
  return out;
}

Element applyLinear(const BasisMap& f, const Element& a) {
  Element out;
  for (const auto& [u, c] : a.terms()) {
    try {
      out.addScaled(f(u), c);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail() + " [basis term " + u.toString() + "]");
    }
  }
  return out;
}

void requireHomogeneous(const Element& a, const char* operation) {
  if (!a.isHomogeneous()) {
    throw Error(ErrorKind::NotHomogeneous,
                std::string(operation) + " needs terms of a single arity and degree");
  }
}

}  // namespace cactus
