#include <benchmark/benchmark.h>

#include "numsg/doubles.hpp"
#include "numsg/oracle.hpp"
#include "numsg/varieties.hpp"
#include "numsg/variety_tree.hpp"

namespace {

using numsg::NumericalSemigroup;

void BM_FromGenerators(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(NumericalSemigroup::from_generators({a, a + 1, 2 * a + 3}));
  }
}
BENCHMARK(BM_FromGenerators)->RangeMultiplier(4)->Range(8, 512);

void BM_ArithmeticExtensions(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const auto s = NumericalSemigroup::from_generators({a, a + 2, a + 3});
  for (auto _ : state) benchmark::DoNotOptimize(numsg::arithmetic_extensions(s));
}
BENCHMARK(BM_ArithmeticExtensions)->DenseRange(5, 13, 4);

void BM_DoublesBounded(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({4, 5, 11});
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numsg::doubles_bounded(s, bound));
}
BENCHMARK(BM_DoublesBounded)->DenseRange(15, 35, 10);

void BM_EnumerateTree(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  const auto all = numsg::all_semigroups();
  for (auto _ : state) benchmark::DoNotOptimize(numsg::enumerate(bound, all));
}
BENCHMARK(BM_EnumerateTree)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_BruteForceEnumeration(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numsg::oracle::all_semigroups_up_to(bound));
}
BENCHMARK(BM_BruteForceEnumeration)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
