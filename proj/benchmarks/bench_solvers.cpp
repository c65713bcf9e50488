#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bcs/experiments.hpp"
#include "bcs/fullspace.hpp"
#include "bcs/gap.hpp"
#include "bcs/subspace.hpp"

namespace {

bcs::PairingModel strong_model(int n) { return bcs::make_model({n, 1.0, 10.0, 0}); }

// O(N^2) secular path.
void BM_Sub1Secular(benchmark::State& state) {
  const bcs::Sub1Matrix m = bcs::build_sub1(strong_model(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bcs::sub1_eigenvalues_secular(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sub1Secular)->RangeMultiplier(2)->Range(8, 1024)->Complexity(benchmark::oNSquared);

// Jacobi oracle on the same matrix, for comparison.
void BM_Sub1Dense(benchmark::State& state) {
  const bcs::SymmetricMatrix a = bcs::build_sub1(strong_model(static_cast<int>(state.range(0)))).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(bcs::dense_eigenvalues(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sub1Dense)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

// Matrix-free H|x> on the full 2^N space.
void BM_ApplyFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bcs::PairingModel model = strong_model(n);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss;
  std::vector<double> x(bcs::basis::dimension(n));
  for (double& v : x) v = gauss(rng);
  for (auto _ : state) benchmark::DoNotOptimize(bcs::apply_full_hamiltonian(model, x));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_ApplyFull)->DenseRange(8, 16, 4);

// Exponential route: every weight block of the full space, densely.
void BM_FullBlockSpectra(benchmark::State& state) {
  const bcs::PairingModel model = strong_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bcs::block_spectra(model));
}
BENCHMARK(BM_FullBlockSpectra)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_GapEquation(benchmark::State& state) {
  const bcs::PairingModel model = strong_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bcs::solve_gap_equation(model));
}
BENCHMARK(BM_GapEquation)->Arg(20)->Arg(100);

void BM_PresetSweep(benchmark::State& state) {
  const auto preset = static_cast<bcs::SweepPreset>(state.range(0));
  const bcs::SweepSpec spec = bcs::preset_spec(preset);
  for (auto _ : state) benchmark::DoNotOptimize(bcs::run_sweep(spec));
  state.SetLabel(bcs::to_string(preset));
}
BENCHMARK(BM_PresetSweep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
