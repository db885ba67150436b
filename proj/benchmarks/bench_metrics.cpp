#include <benchmark/benchmark.h>

#include "flatmod/extremal.hpp"
#include "flatmod/metrics.hpp"
#include "flatmod/oracle.hpp"

namespace {

using flatmod::HPoint;

void BM_Lambda(benchmark::State& state) {
  const HPoint a(0.2, 0.9), b(-0.7, 1.6);
  for (auto _ : state) benchmark::DoNotOptimize(flatmod::lambda_metric(a, b));
}
BENCHMARK(BM_Lambda);

void BM_KappaEnumeration(benchmark::State& state) {
  const HPoint a(0, 1), b(1, 1);
  const int bound = static_cast<int>(state.range(0));
  const int parts = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(flatmod::kappa_metric(a, b, bound, parts));
}
BENCHMARK(BM_KappaEnumeration)
    ->Args({100, 1})
    ->Args({500, 1})
    ->Args({500, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SampledFamilyLipschitz(benchmark::State& state) {
  const flatmod::PiecewiseStretchMap f(2, 0.4, 0.4);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flatmod::sampled_family_lipschitz(f, grid));
}
BENCHMARK(BM_SampledFamilyLipschitz)->Arg(30)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
