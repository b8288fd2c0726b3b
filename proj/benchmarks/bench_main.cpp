#include <benchmark/benchmark.h>

#include <random>

#include "sixtermk/snf.hpp"
#include "sixtermk/solver.hpp"

using namespace sixtermk;

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> val(-50, 50);
  const std::size_t n = state.range(0);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = val(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_CoefficientLayer(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        compute_invariant(ExtensionDescriptor::E(n, 0), {n}));
}
BENCHMARK(BM_CoefficientLayer)->Arg(2)->Arg(6)->Arg(12);

static void BM_SolveHLayer(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(n, 0), {6});
    benchmark::DoNotOptimize(solve_H_layer(inv));
  }
}
BENCHMARK(BM_SolveHLayer)->Arg(2)->Arg(4)->Arg(9);

static void BM_WitnessSearch(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(n, 0), {n});
    solve_H_layer(inv);
    benchmark::DoNotOptimize(witness_search_layer(inv, n, 6));
  }
}
BENCHMARK(BM_WitnessSearch)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
