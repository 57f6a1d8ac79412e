#include <benchmark/benchmark.h>

#include "dtopo/classifier.hpp"
#include "dtopo/generators.hpp"

namespace {

void BM_FastSphere(benchmark::State& state) {
  const auto k = dtopo::sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dtopo::classify_fast(k));
  state.counters["faces"] = static_cast<double>(k.size());
}

void BM_RecursiveSphere(benchmark::State& state) {
  const auto k = dtopo::sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dtopo::classify_recursive(k));
  state.counters["faces"] = static_cast<double>(k.size());
}

void BM_RecursiveSphereNoMemo(benchmark::State& state) {
  const auto k = dtopo::sphere(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(dtopo::classify_recursive(k, {.memoize = false}));
}

void BM_FastPinchedBox(benchmark::State& state) {
  const auto k = dtopo::pinched_box(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dtopo::classify_fast(k));
  state.counters["faces"] = static_cast<double>(k.size());
}

void BM_RecursivePinchedBox(benchmark::State& state) {
  const auto k = dtopo::pinched_box(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dtopo::classify_recursive(k));
  state.counters["faces"] = static_cast<double>(k.size());
}

}  // namespace

BENCHMARK(BM_FastSphere)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecursiveSphere)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecursiveSphereNoMemo)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FastPinchedBox)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecursivePinchedBox)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
