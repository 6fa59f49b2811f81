#include <random>

#include <benchmark/benchmark.h>

#include "modeg/kronecker.hpp"
#include "modeg/mahler.hpp"
#include "modeg/polyrep.hpp"
#include "modeg/suites.hpp"

using namespace modeg;

static void BM_Moebius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  TruthTable f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1U);
  for (auto _ : state) benchmark::DoNotOptimize(degree(f, Modulus(6)));
}
BENCHMARK(BM_Moebius)->DenseRange(8, 20, 4);

static void BM_MahlerExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto F = families::exact(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(mahler_expand(F, Modulus(30)));
}
BENCHMARK(BM_MahlerExpand)->RangeMultiplier(4)->Range(16, 1024);

static void BM_MinDegreeSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_degree_search(n, 6));
}
BENCHMARK(BM_MinDegreeSearch)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);

static void BM_KroneckerSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kronecker_search(6, 5, Rational::make(3, 10), state.range(0)));
  }
}
BENCHMARK(BM_KroneckerSearch)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
