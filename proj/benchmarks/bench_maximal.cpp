#include <benchmark/benchmark.h>

#include "sunrise/maximal.hpp"
#include "sunrise/sampling.hpp"

using namespace sunrise;

static void BM_SuperlevelDecomposition(benchmark::State& state) {
  Rng rng(42);
  const IntervalSet e =
      rng.interval_set(Rational(-8), Rational(8), static_cast<int>(state.range(0)),
                       Rational(1, 256));
  const Rational alpha(1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(superlevel_indicator(e, alpha));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SuperlevelDecomposition)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

static void BM_HaloIteration(benchmark::State& state) {
  Rng rng(7);
  const IntervalSet e = rng.interval_set(Rational(-8), Rational(8), 6, Rational(1, 64));
  for (auto _ : state) {
    benchmark::DoNotOptimize(halo_iterate(e, Rational(9, 10), state.range(0)));
  }
}
BENCHMARK(BM_HaloIteration)->Arg(1)->Arg(4)->Arg(16);
