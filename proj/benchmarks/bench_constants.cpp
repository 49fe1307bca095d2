#include <benchmark/benchmark.h>

#include "sunrise/constants.hpp"
#include "sunrise/weight_spec.hpp"

using namespace sunrise;

static void BM_MminusIntegral(benchmark::State& state) {
  const StepWeight w = make_exp_decay(Rational(0), Rational(state.range(0)), -1.0, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_mminus_truncated(w, w.support_left(), w.support_right(), 1e-5));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MminusIntegral)->Arg(1)->Arg(4)->Arg(16)->Complexity();

static void BM_FujiiWilson(benchmark::State& state) {
  const StepWeight w = make_exp_decay(Rational(0), Rational(8), -1.0, state.range(0));
  SearchConfig cfg;
  cfg.base_candidates = 8;
  cfg.refine_rounds = 2;
  cfg.ascent_cycles = 2;
  cfg.quad_tol = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fujii_wilson(w, cfg));
  }
}
BENCHMARK(BM_FujiiWilson)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
