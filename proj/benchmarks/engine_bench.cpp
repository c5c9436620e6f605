#include <benchmark/benchmark.h>

#include "coupon/coupon.hpp"

namespace {

coupon::Population mandelbrot_population(int m) {
  return coupon::population_from_weights(coupon::mandelbrot_weights(m, 0.30, 1.75), 1000);
}

// 2^m - 1 subset terms with O(g) work each.
void BM_SamplingExpectation(benchmark::State& state) {
  const auto pop = mandelbrot_population(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coupon::sampling_expectation(pop, 2).value);
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << state.range(0)) - 1));
}
BENCHMARK(BM_SamplingExpectation)->DenseRange(8, 24, 4)->Unit(benchmark::kMillisecond);

void BM_IidExpectation(benchmark::State& state) {
  const auto model = coupon::GroupModel::iid_within_group(coupon::mandelbrot_weights(static_cast<int>(state.range(0)), 0.3, 1.75), 3);
  for (auto _ : state) benchmark::DoNotOptimize(coupon::inclusion_exclusion_expectation(model).value);
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << state.range(0)) - 1));
}
BENCHMARK(BM_IidExpectation)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

// Subset-sum transform over the full lattice dominates here.
void BM_DraftLotteryExpectation(benchmark::State& state) {
  const auto model = coupon::GroupModel::draft_lottery(coupon::mandelbrot_weights(static_cast<int>(state.range(0)), 0.3, 1.75), 3);
  for (auto _ : state) benchmark::DoNotOptimize(coupon::inclusion_exclusion_expectation(model).value);
}
BENCHMARK(BM_DraftLotteryExpectation)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ChainExpectation(benchmark::State& state) {
  const auto model = coupon::GroupModel::without_replacement(mandelbrot_population(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(coupon::chain_expectation(model).expected_from_empty);
}
BENCHMARK(BM_ChainExpectation)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

void BM_SimulateCollection(benchmark::State& state) {
  const auto model = coupon::GroupModel::without_replacement(mandelbrot_population(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupon::simulate_collection(model, 10'000, 1, coupon::SimOptions{1}).mean);
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_SimulateCollection)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
