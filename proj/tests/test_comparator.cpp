#include "orbiring/comparator.hpp"
#include "orbiring/errors.hpp"

#include "random_systems.hpp"

#include <doctest.h>

#include <random>

using namespace orbiring;

namespace {
FiniteGradedAlgebra ring(std::vector<Weight> b, Mode mode) {
  return cr_algebra(CircleWeightSystem(std::move(b), mode));
}
}  // namespace

TEST_CASE("hilbert functions of the (2,1,1) rings") {
  const auto sym = fingerprint(ring({2, 1, 1}, Mode::Symplectic));
  const auto hyp = fingerprint(ring({2, 1, 1}, Mode::Hyper));
  const std::map<Degree, std::size_t> hs{{Rational(0), 1}, {Rational(2), 2}, {Rational(4), 1}};
  const std::map<Degree, std::size_t> hh{{Rational(0), 1}, {Rational(2), 1}, {Rational(4), 2}};
  CHECK(sym.hilbert == hs);
  CHECK(hyp.hilbert == hh);
  // A_2 x A_2 -> A_4 hits u^2 in both rings
  CHECK(sym.pairing_rank(Rational(2), Rational(2)) == 1);
  CHECK(hyp.pairing_rank(Rational(2), Rational(2)) == 1);
  CHECK(sym.pairing_rank(Rational(2), Rational(6)) == 0);
}

TEST_CASE("distinguish") {
  const auto r = distinguish(ring({2, 1, 1}, Mode::Symplectic), ring({2, 1, 1}, Mode::Hyper));
  CHECK(r.verdict == Verdict::Distinguished);
  REQUIRE(r.witness);
  CHECK(r.witness->invariant == "hilbert");
  CHECK(r.witness->at == std::vector<Degree>{Rational(2)});
  CHECK(r.witness->values == std::pair<std::size_t, std::size_t>{2, 1});

  for (std::size_t n1 = 1; n1 <= 6; ++n1) {
    const std::vector<Weight> ones(n1, 1);
    CHECK(distinguish(ring(ones, Mode::Symplectic), ring(ones, Mode::Hyper)).verdict ==
          Verdict::Indistinguishable);
  }

  // equal Hilbert functions 1,1,1; only the square of x separates them
  std::vector<BasisElement> basis{{"1", 0, 0, Rational(0)},
                                  {"x", 0, 1, Rational(2)},
                                  {"z", 0, 2, Rational(4)}};
  FiniteGradedAlgebra::Constants unit{{{0, 0}, {{0, Rational(1)}}},
                                      {{0, 1}, {{1, Rational(1)}}},
                                      {{0, 2}, {{2, Rational(1)}}}};
  auto square = unit;
  square[{1, 1}] = {{2, Rational(1)}};
  const auto p = distinguish(FiniteGradedAlgebra(basis, unit, CoefficientRing::Rational),
                             FiniteGradedAlgebra(basis, square, CoefficientRing::Rational));
  CHECK(p.verdict == Verdict::Distinguished);
  REQUIRE(p.witness);
  CHECK(p.witness->invariant == "pairing_rank");
  CHECK(p.witness->values == std::pair<std::size_t, std::size_t>{0, 1});

  const auto z = conjectural_integral_algebra(CircleWeightSystem({1, 1}, Mode::Hyper));
  CHECK_THROWS_AS(distinguish(ring({1, 1}, Mode::Hyper), z), DomainError);
}

TEST_CASE("distinguished pairs have a genuine difference") {
  const auto systems = testing::small_systems(61, 24, 1, 6, 3);
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = 0; j < systems.size(); ++j) {
      const auto a = cr_algebra(systems[i]);
      const auto b = cr_algebra(systems[j]);
      const auto r = distinguish(a, b);
      if (i == j) REQUIRE(r.verdict == Verdict::Indistinguishable);
      if (a.dimension() != b.dimension()) REQUIRE(r.verdict == Verdict::Distinguished);
      REQUIRE(distinguish(b, a).verdict == r.verdict);
    }
  }
}

TEST_CASE("rational rank") {
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(rational_rank({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == 2);
}

TEST_CASE("representation homotopy") {
  using V = std::vector<Weight>;
  CHECK_FALSE(rep_homotopy_equivalent(V{2}, V{}));
  CHECK(rep_homotopy_equivalent(V{1}, V{1, 0, 0}));
  CHECK(rep_homotopy_equivalent(V{3, 0, -2}, V{-2, 3}));
  CHECK_FALSE(rep_homotopy_equivalent(V{2}, V{-2}));

  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<Weight> w(-2, 2);
  auto draw = [&] {
    V v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = w(rng);
    return v;
  };
  for (int t = 0; t < 3000; ++t) {
    const V a = draw(), b = draw(), c = draw();
    REQUIRE(rep_homotopy_equivalent(a, a));
    REQUIRE(rep_homotopy_equivalent(a, b) == rep_homotopy_equivalent(b, a));
    if (rep_homotopy_equivalent(a, b) && rep_homotopy_equivalent(b, c))
      REQUIRE(rep_homotopy_equivalent(a, c));
  }
}

TEST_CASE("homotopy theorem") {
  CHECK(check_homotopy_theorem(CircleWeightSystem({1}, Mode::Symplectic), 2));
  CHECK(check_homotopy_theorem(CircleWeightSystem({2}, Mode::Symplectic, 3), 3));
  for (const auto& ws : testing::small_systems(73, 40, 0, 8, 3))
    for (std::size_t k = 0; k <= 3; ++k) REQUIRE(check_homotopy_theorem(ws, k));
}
