#include <benchmark/benchmark.h>

#include "ea/enumerate.hpp"
#include "ea/suite.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ea::enumerate_models_serial(n));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ea::enumerate_models({n, true, 0}));
}

ea::CorpusManifest bench_manifest() {
  ea::CorpusManifest m;
  m.enumerate_sizes = {2, 3, 4, 5, 6};
  m.recipes = {"chain:8", "boolean:3", "hsum(boolean:2,boolean:2,boolean:2)", "prod(chain:2,chain:2,chain:2)"};
  return m;
}

void BM_SuiteSerial(benchmark::State& state) {
  const auto m = bench_manifest();
  for (auto _ : state) benchmark::DoNotOptimize(ea::run_suite_serial(m));
}

void BM_SuiteParallel(benchmark::State& state) {
  const auto m = bench_manifest();
  for (auto _ : state) benchmark::DoNotOptimize(ea::run_suite(m));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
