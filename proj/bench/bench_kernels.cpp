// Serial reference vs OpenMP kernels: the walk-count DP step over S_n and
// the per-partition multiplicity sum.

#include <benchmark/benchmark.h>

#include "starspec/cayley_oracle.hpp"
#include "starspec/spectrum.hpp"

namespace {

using starspec::Execution;

void walk_steps(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto w = starspec::closed_walk_counts(n, 2 * n - 2, exec);
    benchmark::DoNotOptimize(w.counts.back());
  }
}

void BM_WalkCountsSerial(benchmark::State& state) { walk_steps(state, Execution::serial); }
void BM_WalkCountsParallel(benchmark::State& state) { walk_steps(state, Execution::parallel); }

void BM_MultiplicityTableSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto t = starspec::multiplicity_table_serial(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.nonzero().size());
  }
}

void BM_MultiplicityTableParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto t = starspec::multiplicity_table(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.nonzero().size());
  }
}

}  // namespace

BENCHMARK(BM_WalkCountsSerial)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalkCountsParallel)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicityTableSerial)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicityTableParallel)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
