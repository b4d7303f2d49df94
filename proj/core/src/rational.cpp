#include "orbiring/rational.hpp"

#include "orbiring/errors.hpp"

#include <stdexcept>

namespace orbiring {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ClosedFormInapplicable: return "ClosedFormInapplicable";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::PositivityRequired: return "PositivityRequired";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::CoefficientMismatch: return "CoefficientMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Rational::Rational(std::int64_t value) {
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    value_ = static_cast<long>(value);
  } else {
    value_ = mpq_class(std::to_string(value));
  }
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace orbiring
