#include <benchmark/benchmark.h>

#include <numbers>

#include "ltiest/lattice.hpp"
#include "ltiest/lti.hpp"
#include "ltiest/tb.hpp"

namespace {

const ltiest::LatticeParams kParams = ltiest::LatticeParams::reference();

static void BM_TbSweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ltiest::KGrid grid(0.0, std::numbers::pi, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto bands = ltiest::band_sweep(kParams, m, grid);
    benchmark::DoNotOptimize(bands);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

static void BM_LtiSweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ltiest::KGrid grid(0.0, std::numbers::pi, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto bands = ltiest::lti_band_sweep(kParams, m, grid);
    benchmark::DoNotOptimize(bands);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

static void BM_Eigenvalues(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto h = ltiest::build_hamiltonian(kParams, m, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(ltiest::eigenvalues_hermitian(h));
  state.SetComplexityN(m);
}

static void BM_FoldedBands(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ltiest::folded_bands(kParams, m, 0.7));
  state.SetComplexityN(m);
}

}  // namespace

BENCHMARK(BM_TbSweep)->ArgsProduct({{1, 2, 4, 8, 16}, {256}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LtiSweep)->ArgsProduct({{1, 2, 4, 8, 16}, {256}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(2, 32)->Complexity();
BENCHMARK(BM_FoldedBands)->RangeMultiplier(2)->Range(2, 32)->Complexity();

BENCHMARK_MAIN();
