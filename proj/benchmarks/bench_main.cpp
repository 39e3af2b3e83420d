#include <benchmark/benchmark.h>

#include "projflow/classify.hpp"
#include "projflow/dixon.hpp"
#include "projflow/hypergeom.hpp"
#include "projflow/series.hpp"
#include "projflow/special.hpp"

using namespace projflow;

static void series_integrate(benchmark::State& state) {
  const VectorField vf = quadratic_field(2, -4, -3, 1);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_series(vf, order));
}
BENCHMARK(series_integrate)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void series_ratio_on_line(benchmark::State& state) {
  const SeriesFlow sf = integrate_series(quadratic_field(2, -4, -3, 1), 13);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_on_line(sf, 1, -1));
}
BENCHMARK(series_ratio_on_line)->Unit(benchmark::kMillisecond);

static void abelian_jet(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_jet(order));
}
BENCHMARK(abelian_jet)->Arg(11)->Arg(30);

static void classify_quadratic(benchmark::State& state) {
  const VectorField vf = quadratic_field(-3, 5, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(classify(vf));
}
BENCHMARK(classify_quadratic);

static void alpha_quadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(alpha_integral(-1.0L));
}
BENCHMARK(alpha_quadrature);

static void algebraic_flow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_flow_eval(1, Rat(-2), 0.3L, 0.2L, 1.0L));
}
BENCHMARK(algebraic_flow);

static void dixon_pq(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pq_series(order));
}
BENCHMARK(dixon_pq)->Arg(20)->Arg(60);

BENCHMARK_MAIN();
