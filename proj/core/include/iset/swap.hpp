#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "iset/counting.hpp"
#include "iset/graph.hpp"

namespace iset {

/// An ordered pair of independent sets of G (they may intersect).
struct IndependentPair {
  VertexSet first = 0;
  VertexSet second = 0;
  bool operator==(const IndependentPair&) const = default;
};

/// An ordered pair (A', B') with no edge joining A' to B' and G[A' ∪ B']
/// bipartite; the members themselves need not be independent.
struct SwapPair {
  VertexSet first = 0;
  VertexSet second = 0;
  bool operator==(const SwapPair&) const = default;
};

bool is_swap_pair(const Graph& g, VertexSet a, VertexSet b);

/// The swapping bijection: with W = A ∪ B canonically bipartitioned into
/// (W1, W2), maps (A, B) to (S1 ∪ S4, S2 ∪ S3) where S1 = A∩W1, S2 = A∩W2,
/// S3 = B∩W1, S4 = B∩W2. DomainError unless both inputs are independent.
SwapPair swap_forward(const Graph& g, const IndependentPair& pair);

/// Two-sided inverse of swap_forward; uses the same canonical bipartition of
/// the (preserved) union. DomainError unless the input is a valid swap pair.
IndependentPair swap_backward(const Graph& g, const SwapPair& pair);

/// Visits every swap pair exactly once, ordered by (first, second) mask.
/// Prunes by picking the first set, then scanning subsets of its
/// non-neighborhood. Requires n <= 14.
template <typename Fn>
void for_each_swap_pair(const Graph& g, Fn&& fn) {
  if (g.vertex_count() > 14) {
    throw CapacityError("swap-pair enumeration capped at 14 vertices");
  }
  VertexSet all = g.vertices();
  VertexSet a = 0;
  while (true) {
    VertexSet allowed = all & ~neighborhood_of_set(g, a);
    VertexSet b = 0;
    while (true) {
      if (bipartition_within(g, a | b)) fn(SwapPair{a, b});
      if (b == allowed) break;
      b = (b - allowed) & allowed;
    }
    if (a == all) break;
    ++a;
  }
}

std::vector<SwapPair> enumerate_swap_pairs(const Graph& g);
mpz_class count_swap_pairs(const Graph& g);

/// The counting chain behind the double-cover argument:
///   i(G)^2 = |J(G)| <= #cross-independent pairs = i(G x K_2).
struct DoubleCoverReport {
  mpz_class count;              // i(G)
  mpz_class cover_count;        // i(G x K_2)
  mpz_class cross_pairs;        // ordered pairs (A, B) with no A-B edge
  std::optional<mpz_class> swap_pairs;  // |J(G)|, when n <= 14
  bool cross_equals_cover = false;
  bool pass = false;
};

/// Requires 2n <= 30 so the cover stays within the brute-force range.
DoubleCoverReport verify_double_cover_inequality(const Graph& g);

}  // namespace iset
