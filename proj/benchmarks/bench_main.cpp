#include <benchmark/benchmark.h>

#include "gnyamabe/functional.hpp"
#include "gnyamabe/periodic.hpp"
#include "gnyamabe/products.hpp"
#include "gnyamabe/shooting.hpp"

using namespace gnyamabe;

static void BM_Shot(benchmark::State& state) {
  const Dims d(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_shot(2.208, d));
}
BENCHMARK(BM_Shot);

static void BM_GroundState(benchmark::State& state) {
  const Dims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(find_ground_state(d));
}
BENCHMARK(BM_GroundState)->Args({2, 2})->Args({2, 7})->Args({7, 2});

static void BM_GNValue(benchmark::State& state) {
  const Dims d(2, 2);
  const GroundState gs = find_ground_state(d);
  for (auto _ : state) benchmark::DoNotOptimize(gn_value(gs.profile, d));
}
BENCHMARK(BM_GNValue);

static void BM_OrbitPeriod(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_period(4, 0.95));
}
BENCHMARK(BM_OrbitPeriod);

static void BM_Table(benchmark::State& state) {
  TableOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(build_table(9, opts));
}
BENCHMARK(BM_Table)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
