#include "orbiring/rational.hpp"
#include "orbiring/upoly.hpp"

#include <doctest.h>

#include <random>

using namespace orbiring;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  // wide enough that products overflow 64 bits
  std::uniform_int_distribution<long> digits(-999'999'999'999L, 999'999'999'999L);
  Integer num = Integer(digits(rng)) * Integer(digits(rng));
  Integer den = Integer(digits(rng));
  if (den == 0) den = 1;
  return Rational(num, den);
}

UPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> terms(0, 4);
  std::uniform_int_distribution<unsigned> exp(0, 6);
  std::uniform_int_distribution<long> coef(-5, 5);
  UPoly::Terms t;
  for (unsigned k = terms(rng); k > 0; --k) t[exp(rng)] = Rational(coef(rng));
  return UPoly::from_terms(t);
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(Integer(6), Integer(-4)).str() == "-3/2");
  CHECK(Rational(Integer(8), Integer(4)).str() == "2");
  CHECK(Rational(Integer(0), Integer(-7)).str() == "0");
  CHECK(Rational(Integer(6), Integer(-4)).denominator() == 2);
  CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto a = random_rational(rng);
    const auto b = random_rational(rng);
    const auto c = random_rational(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(Rational::parse((a * b).str()) == a * b);
  }
}

TEST_CASE("polynomial examples") {
  const auto u = UPoly::monomial(1, 1);
  const auto u2 = UPoly::monomial(1, 2);

  CHECK((u2 + UPoly(1)) + (-u2) == UPoly(1));
  CHECK(UPoly() + u2 == u2);
  CHECK(UPoly::monomial(2, 1) + UPoly::monomial(2, 1) == UPoly::monomial(4, 1));

  CHECK(u * (-u) == UPoly::monomial(-1, 2));
  CHECK((-u2) * (-u2) == UPoly::monomial(1, 4));
  CHECK(UPoly(1) * u2 == u2);
}

TEST_CASE("zero polynomial has no degree and stores no terms") {
  UPoly zero = UPoly::monomial(0, 5);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK(zero.terms().empty());
  const auto p = UPoly::monomial(3, 2) - UPoly::monomial(3, 2);
  CHECK(p.is_zero());
  CHECK(p == UPoly());
  CHECK(UPoly::monomial(3, 2).degree() == 2U);
}

TEST_CASE("truncation and rendering") {
  const auto p = UPoly::monomial(2, 0) + UPoly::monomial(-1, 3) + UPoly::monomial(5, 4);
  CHECK(p.truncated(4) == UPoly::monomial(2, 0) + UPoly::monomial(-1, 3));
  CHECK(p.truncated(0).is_zero());
  CHECK(p.str() == "5 u^4 - 1 u^3 + 2 u^0");
  CHECK(UPoly().str() == "0");
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2'000; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto c = random_poly(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == UPoly());
    // canonical form is idempotent
    REQUIRE(UPoly::from_terms(a.terms()) == a);
    for (const auto& [e, coef] : a.terms()) REQUIRE_FALSE(coef.is_zero());
  }
}
