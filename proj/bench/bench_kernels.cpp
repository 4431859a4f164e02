#include <benchmark/benchmark.h>
#include <omp.h>

#include "eds/classifier.hpp"

namespace {

void BM_Sequence(benchmark::State& state, eds::Schedule schedule) {
  const eds::CatalogEntry e = eds::ex_7_4();
  for (auto _ : state) {
    auto seq = eds::eds_sequence_or_throw(e.curve, e.point, static_cast<int>(state.range(0)), schedule);
    benchmark::DoNotOptimize(seq.terms().data());
  }
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Sweep(benchmark::State& state, eds::Schedule schedule) {
  const auto entries = eds::catalog_generators();
  for (auto _ : state) {
    auto rep = eds::consistency_sweep(entries, schedule);
    if (!rep.ok()) state.SkipWithError("sweep failed");
    benchmark::DoNotOptimize(rep.lines.size());
  }
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sequence, serial, eds::Schedule::Serial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sequence, parallel, eds::Schedule::Parallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, serial, eds::Schedule::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, parallel, eds::Schedule::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
