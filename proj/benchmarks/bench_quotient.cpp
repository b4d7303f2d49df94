#include <benchmark/benchmark.h>

#include "orbiring/comparator.hpp"
#include "orbiring/quotient.hpp"

using namespace orbiring;

namespace {
const std::vector<std::vector<Weight>> kSystems{
    {2, 1, 1}, {3, 2, 1, 1}, {4, 3, 2, 1, 1}, {6, 4, 3, 2, 1}};
}

static void BM_CrAlgebra(benchmark::State& state) {
  const CircleWeightSystem ws(kSystems[static_cast<std::size_t>(state.range(0))], Mode::Hyper);
  std::size_t dim = 0;
  for (auto _ : state) {
    const auto a = cr_algebra(ws);
    dim = a.dimension();
    benchmark::DoNotOptimize(dim);
  }
  state.counters["dim"] = static_cast<double>(dim);
}
BENCHMARK(BM_CrAlgebra)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_Fingerprint(benchmark::State& state) {
  const auto a =
      cr_algebra(CircleWeightSystem(kSystems[static_cast<std::size_t>(state.range(0))],
                                    Mode::Symplectic));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(a));
}
BENCHMARK(BM_Fingerprint)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_Distinguish(benchmark::State& state) {
  const auto a = cr_algebra(CircleWeightSystem({2, 1, 1}, Mode::Symplectic));
  const auto b = cr_algebra(CircleWeightSystem({2, 1, 1}, Mode::Hyper));
  for (auto _ : state) benchmark::DoNotOptimize(distinguish(a, b));
}
BENCHMARK(BM_Distinguish);
