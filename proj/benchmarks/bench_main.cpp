#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lorenz/lorenz.hpp"

namespace lorenz {
namespace {

void BM_LorenzDistance(benchmark::State& state) {
  const WeightedSample s1 = sample(model_preset(1).first, state.range(0), 1);
  const WeightedSample s2 = sample(model_preset(1).second, state.range(0), 2);
  const LorenzCurve c1 = empirical_lorenz(s1);
  const LorenzCurve c2 = empirical_lorenz(s2);
  for (auto _ : state) benchmark::DoNotOptimize(lorenz_distance(c1, c2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LorenzDistance)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

void BM_BruteForceMax(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max(0.3, 0.6, grid).value);
}
BENCHMARK(BM_BruteForceMax)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Gb2LorenzCurve(benchmark::State& state) {
  const Gb2Params g = model_preset(2).first;
  for (auto _ : state) benchmark::DoNotOptimize(lorenz_curve(g));
}
BENCHMARK(BM_Gb2LorenzCurve)->Unit(benchmark::kMillisecond);

void BM_IbetaInverse(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
  std::vector<double> t(1024);
  for (double& v : t) v = u(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::ibeta_inv(t[i++ & 1023], 0.8, 2.1));
  }
}
BENCHMARK(BM_IbetaInverse);

void BM_EmpiricalLorenz(benchmark::State& state) {
  const WeightedSample s = sample(model_preset(3).first, state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(empirical_lorenz(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EmpiricalLorenz)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity()
    ->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace lorenz

BENCHMARK_MAIN();
