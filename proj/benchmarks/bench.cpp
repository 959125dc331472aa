#include <benchmark/benchmark.h>

#include "agq/halfderiv.hpp"
#include "agq/qseries.hpp"
#include "agq/unity.hpp"

using namespace agq;

static void BM_qbinomial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qbinomial(n, n / 2));
}
BENCHMARK(BM_qbinomial)->Arg(20)->Arg(40)->Arg(80);

static void BM_multisum_tseries(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(x_multisum_tseries(3, 1, order));
}
BENCHMARK(BM_multisum_tseries)->Arg(6)->Arg(10)->Arg(14);

static void BM_eval_x_unity(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_x_unity(2, 0, N, 256));
}
BENCHMARK(BM_eval_x_unity)->Arg(25)->Arg(50)->Arg(100);

BENCHMARK_MAIN();
