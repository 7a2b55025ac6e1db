#include "iset/swap.hpp"

namespace iset {

bool is_swap_pair(const Graph& g, VertexSet a, VertexSet b) {
  return is_cross_independent(g, a, b) && bipartition_within(g, a | b).has_value();
}

SwapPair swap_forward(const Graph& g, const IndependentPair& pair) {
  if (!is_independent_set(g, pair.first) || !is_independent_set(g, pair.second)) {
    throw DomainError("swap_forward requires two independent sets");
  }
  VertexSet w = pair.first | pair.second;
  auto parts = bipartition_within(g, w);
  if (!parts) throw DomainError("union of independent sets must induce a bipartite graph");
  auto [w1, w2] = *parts;
  VertexSet s1 = pair.first & w1, s2 = pair.first & w2;
  VertexSet s3 = pair.second & w1, s4 = pair.second & w2;
  return SwapPair{s1 | s4, s2 | s3};
}

IndependentPair swap_backward(const Graph& g, const SwapPair& pair) {
  if (!is_cross_independent(g, pair.first, pair.second)) {
    throw DomainError("swap_backward requires a cross-independent pair");
  }
  auto parts = bipartition_within(g, pair.first | pair.second);
  if (!parts) throw DomainError("swap_backward requires a bipartite union");
  auto [w1, w2] = *parts;
  VertexSet s1 = pair.first & w1, s4 = pair.first & w2;
  VertexSet s3 = pair.second & w1, s2 = pair.second & w2;
  return IndependentPair{s1 | s2, s3 | s4};
}

std::vector<SwapPair> enumerate_swap_pairs(const Graph& g) {
  std::vector<SwapPair> pairs;
  for_each_swap_pair(g, [&](const SwapPair& p) { pairs.push_back(p); });
  return pairs;
}

mpz_class count_swap_pairs(const Graph& g) {
  mpz_class count = 0;
  for_each_swap_pair(g, [&](const SwapPair&) { ++count; });
  return count;
}

DoubleCoverReport verify_double_cover_inequality(const Graph& g) {
  int n = g.vertex_count();
  if (2 * n > 30) {
    throw CapacityError("double-cover verification capped at 15 vertices");
  }
  DoubleCoverReport report;
  report.count = count_independent_sets(g);
  Bigraph cover = double_cover(g);
  report.cover_count = count_independent_sets(cover.graph);

  // Ordered pairs (A, B) with no edge between A and B: B ranges over all
  // subsets avoiding the neighborhood of A.
  report.cross_pairs = 0;
  VertexSet all = g.vertices();
  VertexSet a = 0;
  while (true) {
    int free_vertices = n - set_size(neighborhood_of_set(g, a));
    report.cross_pairs += mpz_class(1) << free_vertices;
    if (a == all) break;
    ++a;
  }
  report.cross_equals_cover = report.cross_pairs == report.cover_count;

  mpz_class count_squared = report.count * report.count;
  bool chain = report.cross_equals_cover && count_squared <= report.cover_count;
  if (n <= 14) {
    report.swap_pairs = count_swap_pairs(g);
    chain = chain && *report.swap_pairs == count_squared &&
            *report.swap_pairs <= report.cross_pairs;
  }
  report.pass = chain;
  return report;
}

}  // namespace iset
