// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "chungfeller/enumerate.hpp"
#include "chungfeller/series.hpp"
#include "chungfeller/stepset.hpp"

namespace {

using cf::Execution;

cf::StepSetSpec bench_spec() { return cf::make_spec(2, {{1, 1}, {2, 1}}, {{1, 1}}); }

void BM_DyckTable(benchmark::State& state, Execution exec) {
  const auto spec = bench_spec();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cf::dyck_table(spec, n, exec));
}

void BM_NonnegativeCount(benchmark::State& state, Execution exec) {
  const auto spec = cf::motzkin_spec();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cf::nonneg_weight_sums(spec, n, exec));
}

void BM_SeriesBiMul(benchmark::State& state, Execution exec) {
  const int order = static_cast<int>(state.range(0));
  const auto spec = bench_spec();
  const cf::SeriesUni f = cf::solve_F(spec, order);
  const cf::SeriesBi g = cf::build_G(spec, f, order);
  const cf::SeriesBi p = cf::build_P(spec, f, order);
  for (auto _ : state) benchmark::DoNotOptimize(cf::mul(g, p, exec));
}

BENCHMARK_CAPTURE(BM_DyckTable, serial, Execution::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DyckTable, parallel, Execution::parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NonnegativeCount, serial, Execution::serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NonnegativeCount, parallel, Execution::parallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SeriesBiMul, serial, Execution::serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SeriesBiMul, parallel, Execution::parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
