#include <benchmark/benchmark.h>

#include "cpdetect/berk_jones.hpp"
#include "cpdetect/generators.hpp"
#include "cpdetect/likelihood.hpp"
#include "cpdetect/normal.hpp"

using namespace cpdetect;

namespace {

ObservationMatrix null_matrix(std::int64_t p, std::int64_t n, std::uint64_t seed) {
  return generate_null(p, n, {}, RngStream(seed));
}

void BM_NormalSf(benchmark::State& state) {
  double x = -8.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(std_normal_sf(x));
    x += 0.001;
    if (x > 8.0) x = -8.0;
  }
}
BENCHMARK(BM_NormalSf);

void BM_NormalQuantile(benchmark::State& state) {
  double q = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(std_normal_quantile_sf(q));
    q *= 1.7;
    if (q > 0.99) q = 1e-10;
  }
}
BENCHMARK(BM_NormalQuantile);

void BM_RngNormal(benchmark::State& state) {
  RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rng.next_normal());
}
BENCHMARK(BM_RngNormal);

void BM_GenerateNull(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const std::int64_t n = state.range(1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(null_matrix(p, n, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * p * n);
}
BENCHMARK(BM_GenerateNull)->Args({200, 2000})->Args({500, 2000});

void BM_ContrastMatrix(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const std::int64_t n = state.range(1);
  const ObservationMatrix x = null_matrix(p, n, 7);
  const Grid grid = build_upper_grid(n);
  for (auto _ : state) benchmark::DoNotOptimize(contrast_matrix(x, grid));
  state.SetItemsProcessed(state.iterations() * p * (n + grid.size()));
}
BENCHMARK(BM_ContrastMatrix)->Args({200, 2000})->Args({500, 8000});

void BM_BjColumn(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  RngStream rng(3);
  std::vector<double> pv(static_cast<std::size_t>(p));
  for (auto& v : pv) v = rng.next_unit();
  for (auto _ : state) {
    std::vector<double> copy = pv;
    benchmark::DoNotOptimize(bj_at_column(std::move(copy)));
  }
}
BENCHMARK(BM_BjColumn)->Arg(500)->Arg(5000);

void BM_CombinedTest(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const std::int64_t n = state.range(1);
  const ObservationMatrix x = null_matrix(p, n, 11);
  const Grid grid = build_upper_grid(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(combined_test(x, grid, Side::two_sided, 2.0));
}
BENCHMARK(BM_CombinedTest)->Args({200, 2000})->Args({500, 2000});

void BM_LogLikelihoodRatio(benchmark::State& state) {
  const std::int64_t p = 50, n = 64;
  SparseMixture prior;
  prior.epsilon = 0.14;
  prior.rho = 1.5;
  prior.grid = build_lower_grid(n);
  prior.side = Side::one_sided;
  const ObservationMatrix x = null_matrix(p, n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(log_likelihood_ratio(x, prior));
}
BENCHMARK(BM_LogLikelihoodRatio);

} // namespace

BENCHMARK_MAIN();
