#include <benchmark/benchmark.h>

#include "gridups/homology.hpp"
#include "gridups/moves.hpp"
#include "gridups/tcomplex.hpp"
#include "gridups/upsilon.hpp"

using namespace gridups;

namespace {

// The trefoil stabilized up to grid number n.
GridDiagram trefoil_of_size(int n) {
  GridDiagram d = preset_torus(2, 3);
  while (d.size() < n) d = stabilize(d, d.size() - 1, StabVariant::sw);
  return d;
}

void BM_EnumerateStates(benchmark::State& state) {
  const GridDiagram d = trefoil_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(state_count(d.size())));
}
BENCHMARK(BM_EnumerateStates)->DenseRange(5, 8);

void BM_BuildComplex(benchmark::State& state) {
  const GridDiagram d = trefoil_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_t_complex(d, RationalT(1, 2)));
}
BENCHMARK(BM_BuildComplex)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const GridDiagram d = trefoil_of_size(static_cast<int>(state.range(0)));
  const TComplex c = build_t_complex(d, RationalT(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(c, d.size()));
}
BENCHMARK(BM_Decompose)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const GridDiagram d = trefoil_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(upsilon_profile(d, 4));
}
BENCHMARK(BM_Profile)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
