#include <benchmark/benchmark.h>

#include "orbiring/inertial.hpp"

using namespace orbiring;

namespace {

CircleWeightSystem system_for(const benchmark::State& state) {
  const Mode mode = state.range(0) ? Mode::Hyper : Mode::Symplectic;
  return CircleWeightSystem({7, 8, 9, 11}, mode);  // m = 5544
}

// Walks all sector pairs row by row so the cost per pair is comparable.
template <class F>
void all_pairs(benchmark::State& state, F product) {
  const auto ws = system_for(state);
  const Residue m = ws.order();
  Residue g = 0, h = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(product(ws, g, h));
    if (++h == m) {
      h = 0;
      g = (g + 1) % m;
    }
  }
  state.SetLabel(std::string(to_string(ws.mode())));
}

}  // namespace

static void BM_UnitProduct(benchmark::State& state) { all_pairs(state, unit_product); }
BENCHMARK(BM_UnitProduct)->Arg(0)->Arg(1);

static void BM_UnitProductClosedForm(benchmark::State& state) {
  all_pairs(state, unit_product_closed_form);
}
BENCHMARK(BM_UnitProductClosedForm)->Arg(0)->Arg(1);

static void BM_ObstructionData(benchmark::State& state) { all_pairs(state, obstruction_data); }
BENCHMARK(BM_ObstructionData)->Arg(0)->Arg(1);

static void BM_InertialPresentation(benchmark::State& state) {
  const CircleWeightSystem ws({4, 6, 5, 1}, Mode::Hyper);  // m = 60
  for (auto _ : state) benchmark::DoNotOptimize(inertial_presentation(ws));
}
BENCHMARK(BM_InertialPresentation)->Unit(benchmark::kMillisecond);
