#include <benchmark/benchmark.h>

#include <random>

#include "iset/bounds.hpp"
#include "iset/corpus.hpp"
#include "iset/counting.hpp"
#include "iset/entropy.hpp"
#include "iset/graph_io.hpp"
#include "iset/swap.hpp"

namespace {

iset::Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  iset::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_CountRecursive(benchmark::State& state) {
  iset::Graph g = random_graph(static_cast<int>(state.range(0)), 0.15, 12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::count_independent_sets(g));
  }
}
BENCHMARK(BM_CountRecursive)->Arg(24)->Arg(32)->Arg(40)->Arg(48);

void BM_CountBruteForce(benchmark::State& state) {
  iset::Graph g = random_graph(static_cast<int>(state.range(0)), 0.15, 12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::brute_force_count(g));
  }
}
BENCHMARK(BM_CountBruteForce)->Arg(16)->Arg(20);

void BM_IndependencePolynomial(benchmark::State& state) {
  iset::Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 777);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::independence_polynomial(g));
  }
}
BENCHMARK(BM_IndependencePolynomial)->Arg(24)->Arg(32);

void BM_ExhaustiveOracleN5(benchmark::State& state) {
  for (auto _ : state) {
    mpz_class total = 0;
    iset::for_each_labeled_graph(5, [&](const iset::Graph& g) {
      total += iset::count_independent_sets(g);
    });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ExhaustiveOracleN5);

void BM_BoundsPetersen(benchmark::State& state) {
  iset::Graph g = iset::petersen_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::irregular_upper_bound(g));
    benchmark::DoNotOptimize(iset::lower_bound(g));
  }
}
BENCHMARK(BM_BoundsPetersen);

void BM_SwapPairEnumeration(benchmark::State& state) {
  iset::Graph g = iset::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::count_swap_pairs(g));
  }
}
BENCHMARK(BM_SwapPairEnumeration)->Arg(10)->Arg(12);

void BM_EntropyAudit(benchmark::State& state) {
  iset::Bigraph bg = *iset::bipartition(iset::cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::audit_kahn_chain(bg, 2));
  }
}
BENCHMARK(BM_EntropyAudit)->Arg(10)->Arg(14);

void BM_Graph6RoundTrip(benchmark::State& state) {
  iset::Graph g = random_graph(50, 0.3, 999);
  std::string encoded = iset::emit_graph6(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iset::parse_graph6(encoded));
    benchmark::DoNotOptimize(iset::emit_graph6(g));
  }
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();
