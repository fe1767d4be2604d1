#include <benchmark/benchmark.h>
#include <omp.h>

#include "zmn/arith.hpp"
#include "zmn/summatory.hpp"
#include "zmn/tau_kernel.hpp"

using namespace zmn;

static void BM_TauSquareReference(benchmark::State& state) {
  const auto y = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau_square_sum_reference(y));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TauSquareReference)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

// Second argument: OpenMP thread count.
static void BM_TauSquareSegmented(benchmark::State& state) {
  const auto y = static_cast<double>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tau_square_sum(y));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
static void segmented_args(benchmark::internal::Benchmark* b) {
  for (std::int64_t y : {100'000, 1'000'000, 10'000'000, 100'000'000}) {
    b->Args({y, 1});
    if (omp_get_num_procs() > 1) b->Args({y, omp_get_num_procs()});
  }
}
BENCHMARK(BM_TauSquareSegmented)->Apply(segmented_args)->Unit(benchmark::kMillisecond);

static void BM_WeightedKernel(benchmark::State& state) {
  const auto y = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_kernel(y, 20.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeightedKernel)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_SummatoryNaive(benchmark::State& state) {
  const auto x = static_cast<double>(state.range(0));
  const ArithTables tables(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summatory(Variant::S, true, x, Algorithm::Naive, tables).value);
}
BENCHMARK(BM_SummatoryNaive)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMillisecond);

static void BM_SummatoryReduced(benchmark::State& state) {
  const auto x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summatory(Variant::S, true, x, Algorithm::Reduced).value);
}
BENCHMARK(BM_SummatoryReduced)->RangeMultiplier(10)->Range(1'000, 100'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
