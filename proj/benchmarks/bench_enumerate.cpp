#include <benchmark/benchmark.h>

#include <random>

#include "circis/circulant.hpp"
#include "circis/cis.hpp"
#include "circis/enumerate.hpp"
#include "circis/paired.hpp"
#include "circis/simple_graph.hpp"

namespace {

using namespace circis;

SimpleGraph random_graph(unsigned seed, int n, double p) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void BM_MaximalCliques_TwoPaired60(benchmark::State& state) {
  SimpleGraph g = to_graph(realize(parse_paired("C(60;2,2;3,5)")));
  for (auto _ : state) {
    long long count = 0;
    for_each_maximal_clique(g, [&](const std::vector<int>&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MaximalCliques_TwoPaired60);

void BM_MaximalCliques_Random(benchmark::State& state) {
  SimpleGraph g = random_graph(42, (int)state.range(0), 0.5);
  for (auto _ : state) {
    long long count = 0;
    for_each_maximal_clique(g, [&](const std::vector<int>&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MaximalCliques_Random)->Arg(16)->Arg(24)->Arg(32);

void BM_IsCISCirculant36(benchmark::State& state) {
  Circulant g = realize(parse_paired("C(36;2,2;3,3)"));
  for (auto _ : state) benchmark::DoNotOptimize(is_cis_circulant(g).is_cis);
}
BENCHMARK(BM_IsCISCirculant36);

void BM_RecognizePaired(benchmark::State& state) {
  Circulant g = realize(parse_paired("C(36;2,2;3,3)"));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_paired(g, 3).has_value());
}
BENCHMARK(BM_RecognizePaired);

}  // namespace
