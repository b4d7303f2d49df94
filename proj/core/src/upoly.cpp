#include "orbiring/upoly.hpp"

namespace orbiring {

UPoly::UPoly(const Rational& constant) { add_term(0, constant); }

UPoly UPoly::monomial(const Rational& coefficient, unsigned exponent) {
  UPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

UPoly UPoly::from_terms(const Terms& terms) {
  UPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

std::optional<unsigned> UPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rational UPoly::coefficient(unsigned exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

UPoly UPoly::truncated(unsigned bound) const {
  UPoly p;
  for (auto it = terms_.begin(); it != terms_.end() && it->first < bound; ++it) {
    p.terms_.emplace(it->first, it->second);
  }
  return p;
}

void UPoly::add_term(unsigned exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

UPoly UPoly::operator-() const {
  UPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

std::string UPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef = c.str();
    if (out.empty()) {
      out = coef;
    } else if (c.sign() < 0) {
      out += " - " + (-c).str();
    } else {
      out += " + " + coef;
    }
    out += " u^" + std::to_string(e);
  }
  return out;
}

}  // namespace orbiring
