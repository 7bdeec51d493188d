#include <benchmark/benchmark.h>

#include "circis/census.hpp"

namespace {

using namespace circis;

void BM_CensusFullRecords(benchmark::State& state) {
  CensusOptions opts;
  opts.n_min = opts.n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(census(opts).records.size());
}
BENCHMARK(BM_CensusFullRecords)->Arg(12)->Arg(16);

void BM_CensusCISFilter(benchmark::State& state) {
  CensusOptions opts;
  opts.n_min = opts.n_max = state.range(0);
  opts.filter = parse_filter("connected,co-connected,cis");
  for (auto _ : state) benchmark::DoNotOptimize(census(opts).records.size());
}
BENCHMARK(BM_CensusCISFilter)->Arg(24)->Arg(30)->Arg(36);

}  // namespace

// the system libbenchmark_main.a ships stale LTO bytecode; expand main here
BENCHMARK_MAIN();
