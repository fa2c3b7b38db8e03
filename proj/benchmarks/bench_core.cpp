#include <benchmark/benchmark.h>

#include <vector>

#include "ecc/energy.hpp"
#include "ecc/optimize.hpp"
#include "ecc/series.hpp"
#include "ecc/sphere.hpp"
#include "ecc/tensor.hpp"
#include "ecc/welch.hpp"

using namespace ecc;

namespace {

UnitVectorCollection random_lines(int n, int m) { return UnitVectorCollection::real(sample_real_sphere(n, m, {1, 0})); }

void BM_MomentTensor(benchmark::State& state) {
  const auto x = random_lines(4, 64);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moment_tensor(x, k));
}
BENCHMARK(BM_MomentTensor)->DenseRange(2, 8, 2);

void BM_UniformTensor(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_sphere_moment_tensor(5, k));
}
BENCHMARK(BM_UniformTensor)->DenseRange(2, 8, 2);

void BM_FramePotential(benchmark::State& state) {
  const auto x = random_lines(8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential(x, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FramePotential)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_Minimize(benchmark::State& state) {
  OptimizeConfig cfg;
  cfg.m = 7;
  cfg.n = 2;
  cfg.k = 3;
  cfg.restarts = static_cast<int>(state.range(0));
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_potential(cfg));
}
BENCHMARK(BM_Minimize)->Args({8, 1})->Args({32, 1})->Args({32, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ArccosPower(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arccos_power_series(0.5, order));
}
BENCHMARK(BM_ArccosPower)->RangeMultiplier(4)->Range(16, 1024);

void BM_UniformEnergy(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(uniform_energy(3, EnergyKind::Geodesic, 0.5, state.range(0), {3, 0}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UniformEnergy)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
