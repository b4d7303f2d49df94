#include "orbiring/errors.hpp"
#include "orbiring/weights.hpp"

#include "random_systems.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace orbiring;

namespace {
Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }
}  // namespace

TEST_CASE("default order is the lcm of the nonzero weights") {
  CHECK(default_order(std::vector<Weight>{2, 1, 1}) == 2);
  CHECK(default_order(std::vector<Weight>{1, 1, 1}) == 1);
  CHECK(default_order(std::vector<Weight>{0, 0}) == 1);
  CHECK(default_order(std::vector<Weight>{}) == 1);
  CHECK(default_order(std::vector<Weight>{4, -6, 0}) == 12);
}

TEST_CASE("logweight") {
  CHECK(logweight(2, 1, 3) == q(2, 3));
  CHECK(logweight(2, 1, 2) == Rational(0));
  CHECK(logweight(-1, 1, 2) == q(1, 2));
  CHECK(logweight(5, -1, 7) == q(2, 7));
  CHECK_THROWS_AS(logweight(1, 1, 0), DomainError);
}

TEST_CASE("sector data for the (2,1,1) systems") {
  const CircleWeightSystem hyper({2, 1, 1}, Mode::Hyper);
  const auto h1 = sector_data(hyper, 1);
  CHECK(h1.fixed == std::vector<std::size_t>{0});
  CHECK(h1.age == Rational(2));
  CHECK(h1.degree == Rational(4));

  const CircleWeightSystem sym({2, 1, 1}, Mode::Symplectic);
  const auto s1 = sector_data(sym, 1);
  CHECK(s1.fixed == std::vector<std::size_t>{0});
  CHECK(s1.age == Rational(1));
  CHECK(s1.degree == Rational(2));

  for (const auto* ws : {&hyper, &sym}) {
    const auto s0 = sector_data(*ws, 0);
    CHECK(s0.fixed == std::vector<std::size_t>{0, 1, 2});
    CHECK(s0.age == Rational(0));
    CHECK(s0.degree == Rational(0));
  }
}

TEST_CASE("order override and degenerate weights") {
  const CircleWeightSystem line({2}, Mode::Symplectic, 3);
  CHECK(line.order() == 3);
  CHECK_FALSE(line.has_default_order());
  CHECK(sector_data(line, 1).fixed.empty());
  CHECK(sector_data(line, 1).age == q(2, 3));

  const CircleWeightSystem zeros({0, 0}, Mode::Hyper);
  CHECK(zeros.order() == 1);
  CHECK(all_sectors(zeros).size() == 1);

  CHECK_THROWS_AS(CircleWeightSystem({1}, Mode::Hyper, 0), DomainError);
}

TEST_CASE("weight and mode parsing") {
  CHECK(parse_weights("2,1,1") == std::vector<Weight>{2, 1, 1});
  CHECK(parse_weights(" -3, +4 ,0") == std::vector<Weight>{-3, 4, 0});
  CHECK(parse_weights("").empty());
  CHECK_THROWS_AS(parse_weights("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weights("1;2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weights("1,2,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weights("99999999999999"), std::invalid_argument);
  CHECK(parse_mode("HYPER") == Mode::Hyper);
  CHECK(parse_mode("symplectic") == Mode::Symplectic);
  CHECK_THROWS_AS(parse_mode("kahler"), std::invalid_argument);
}

TEST_CASE("logweight complement identity") {
  for (Residue m = 1; m <= 24; ++m) {
    for (Weight w = -30; w <= 30; ++w) {
      for (Residue g = 0; g < m; ++g) {
        const auto a = logweight(w, g, m);
        REQUIRE(a >= Rational(0));
        REQUIRE(a < Rational(1));
        REQUIRE(a + logweight(-w, g, m) == (a.is_zero() ? Rational(0) : Rational(1)));
      }
    }
  }
}

TEST_CASE("sector invariants over random systems") {
  for (const auto& base : testing::small_systems(99, 150, -12, 12)) {
    for (Mode mode : {Mode::Symplectic, Mode::Hyper}) {
      const CircleWeightSystem ws(base.weights(), mode);
      const Residue m = ws.order();
      const auto sectors = all_sectors(ws);
      for (Residue g = 0; g < m; ++g) {
        const auto& sg = sectors[static_cast<std::size_t>(g)];
        REQUIRE(sg.degree == Rational(2) * sg.age);
        REQUIRE((m % sg.age.denominator()) == 0);
        if (mode == Mode::Hyper) REQUIRE(sg.age.is_integer());
        for (Residue h = 0; h < m; ++h) {
          const auto& sh = sectors[static_cast<std::size_t>(h)];
          // same subgroup => same fixed set
          if (std::gcd(g, m) == std::gcd(h, m)) REQUIRE(sg.fixed == sh.fixed);
          // <h> inside <g> => S_g inside S_h
          if (h % std::gcd(g, m) == 0) {
            REQUIRE(std::includes(sh.fixed.begin(), sh.fixed.end(), sg.fixed.begin(),
                                  sg.fixed.end()));
          }
        }
      }
    }
  }
}
