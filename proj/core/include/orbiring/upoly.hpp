#pragma once

#include "orbiring/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace orbiring {

/// Sparse univariate polynomial in u over the rationals. Zero coefficients are
/// never stored, so two polynomials are equal iff their term maps are equal.
class UPoly {
 public:
  using Terms = std::map<unsigned, Rational>;

  UPoly() = default;
  UPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& coefficient, unsigned exponent);
  static UPoly from_terms(const Terms& terms);

  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent with a nonzero coefficient; empty for the zero polynomial.
  std::optional<unsigned> degree() const;
  Rational coefficient(unsigned exponent) const;
  const Terms& terms() const { return terms_; }

  /// Drops every term u^k with k >= bound.
  UPoly truncated(unsigned bound) const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Human-readable form, highest power first: "2 u^1", "u^2 + 1", "0".
  std::string str() const;

 private:
  void add_term(unsigned exponent, const Rational& coefficient);

  Terms terms_;
};

}  // namespace orbiring
