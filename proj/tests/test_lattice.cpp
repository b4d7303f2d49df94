#include "orbiring/errors.hpp"
#include "orbiring/lattice.hpp"

#include "random_systems.hpp"

#include <doctest.h>

using namespace orbiring;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (auto r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

Integer dot(const std::vector<Weight>& b, const IntVector& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += Integer(static_cast<long>(b[i])) * x[i];
  return s;
}

// Every kernel vector with entries in [-r, r], by brute force.
std::vector<IntVector> small_kernel_vectors(const std::vector<Weight>& b, long r) {
  std::vector<IntVector> out;
  IntVector x(b.size(), Integer(-r));
  while (true) {
    if (dot(b, x) == 0) out.push_back(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == r) x[i++] = -r;
    if (i == x.size()) break;
    x[i] += 1;
  }
  return out;
}

}  // namespace

TEST_CASE("kernel of (2,1,1)") {
  const std::vector<Weight> b{2, 1, 1};
  const auto k = integer_kernel(b);
  CHECK(k == ints({{0, 1, -1}, {1, 0, -2}}));
  for (const auto& v : small_kernel_vectors(b, 3)) CHECK(in_lattice(hermite_normal_form(k), v));
  CHECK_FALSE(in_lattice(hermite_normal_form(k), ints({{1, 0, 0}})[0]));
}

TEST_CASE("small kernels") {
  CHECK(integer_kernel(std::vector<Weight>{1, 1}) == ints({{1, -1}}));
  CHECK(integer_kernel(std::vector<Weight>{1}).empty());
  CHECK(integer_kernel(std::vector<Weight>{0, 0}).size() == 2);
  CHECK(integer_kernel(std::vector<Weight>{6, 10, 15}).size() == 2);
}

TEST_CASE("hermite normal form") {
  CHECK(hermite_normal_form(ints({{2, 4}, {3, 6}})) == ints({{1, 2}}));
  CHECK(hermite_normal_form(ints({{0, 0}})).empty());
  CHECK(hermite_normal_form(ints({{4, 1}, {2, 3}})) == ints({{2, 3}, {0, 5}}));
  CHECK_THROWS_AS(hermite_normal_form(ints({{1, 2}, {1}})), std::invalid_argument);
}

TEST_CASE("kernel is saturated and of full rank on random weights") {
  for (const auto& ws : testing::small_systems(41, 60, -5, 5, 3)) {
    const auto& b = ws.weights();
    std::size_t nonzero = 0;
    for (Weight w : b) nonzero += w != 0;
    const auto k = integer_kernel(b);
    REQUIRE(k.size() == b.size() - (nonzero ? 1 : 0));
    for (const auto& row : k) REQUIRE(dot(b, row) == 0);
    const auto hnf = hermite_normal_form(k);
    for (const auto& v : small_kernel_vectors(b, 2)) REQUIRE(in_lattice(hnf, v));
  }
}

TEST_CASE("lattice maps") {
  const auto maps = lattice_maps(CircleWeightSystem({2, 1, 1}, Mode::Symplectic));
  CHECK(maps.iota == std::vector<Weight>{2, 1, 1});
  CHECK(maps.j_generators == ints({{0, 1, -1}, {1, 0, -2}}));
  CHECK(maps.per_sector_iota.size() == 2);
  CHECK(maps.per_sector_iota[1] == std::vector<Weight>{2});
  CHECK_THROWS_AS(lattice_maps(CircleWeightSystem({0, 0}, Mode::Hyper)), DomainError);
}
