#include "iset/swap.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "iset/corpus.hpp"

using namespace iset;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Direct enumeration of the swap-pair family from its definition, with no
// pruning; the oracle for for_each_swap_pair.
std::vector<SwapPair> swap_pairs_by_definition(const Graph& g) {
  std::vector<SwapPair> out;
  VertexSet all = g.vertices();
  for (VertexSet a = 0;; ++a) {
    for (VertexSet b = 0;; ++b) {
      if (is_cross_independent(g, a, b) && bipartition_within(g, a | b)) {
        out.push_back(SwapPair{a, b});
      }
      if (b == all) break;
    }
    if (a == all) break;
  }
  return out;
}

void check_bijection_exhaustively(const Graph& g) {
  std::vector<VertexSet> sets = independent_sets(g);
  std::vector<SwapPair> image;
  for (VertexSet a : sets) {
    for (VertexSet b : sets) {
      IndependentPair p{a, b};
      SwapPair f = swap_forward(g, p);
      CHECK(is_swap_pair(g, f.first, f.second));
      CHECK((f.first | f.second) == (a | b));  // the union never changes
      CHECK(swap_backward(g, f) == p);
      image.push_back(f);
    }
  }
  std::vector<SwapPair> family = enumerate_swap_pairs(g);
  for (const SwapPair& q : family) {
    IndependentPair p = swap_backward(g, q);
    CHECK(is_independent_set(g, p.first));
    CHECK(is_independent_set(g, p.second));
    CHECK(swap_forward(g, p) == q);
  }
  auto less = [](const SwapPair& x, const SwapPair& y) {
    return std::pair(x.first, x.second) < std::pair(y.first, y.second);
  };
  std::sort(image.begin(), image.end(), less);
  CHECK(image == family);
  CHECK(mpz_class(static_cast<long>(family.size())) ==
        count_independent_sets(g) * count_independent_sets(g));
}

}  // namespace

TEST_CASE("swap on trivial pairs") {
  Graph c5 = cycle_graph(5);
  CHECK(swap_forward(c5, IndependentPair{0, 0}) == SwapPair{0, 0});
  CHECK(swap_backward(c5, SwapPair{0, 0}) == IndependentPair{0, 0});

  // A = B = S: the union has no edges, every vertex is its own component and
  // lands in W1, so S1 = S3 = S and the image is (S, S); the fixed point is
  // forced by the round trip, since the backward map also sends (S, S) to
  // (S, S).
  VertexSet s = vertex_bit(0) | vertex_bit(2);
  SwapPair f = swap_forward(c5, IndependentPair{s, s});
  CHECK(f == SwapPair{s, s});
  CHECK((f.first | f.second) == s);
  CHECK(swap_backward(c5, f) == IndependentPair{s, s});
}

TEST_CASE("swap rejects invalid inputs") {
  Graph k2 = clique(2);
  VertexSet both = vertex_bit(0) | vertex_bit(1);
  CHECK_THROWS_AS(swap_forward(k2, IndependentPair{both, 0}), DomainError);
  CHECK_THROWS_AS(swap_backward(k2, SwapPair{vertex_bit(0), vertex_bit(1)}), DomainError);
}

TEST_CASE("swap-pair family sizes on the smallest graphs") {
  CHECK(count_swap_pairs(clique(2)) == 9);    // 3^2
  CHECK(count_swap_pairs(clique(3)) == 16);   // 4^2; the full triangle never appears
  for (const SwapPair& p : enumerate_swap_pairs(clique(3))) {
    CHECK(set_size(p.first | p.second) < 3);
  }
}

TEST_CASE("pruned enumeration matches the definition") {
  std::mt19937 rng(67);
  for (int round = 0; round < 25; ++round) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 5), 0.4, rng);
    CHECK(enumerate_swap_pairs(g) == swap_pairs_by_definition(g));
  }
}

TEST_CASE("the swap is a bijection on small fixed graphs") {
  check_bijection_exhaustively(clique(2));
  check_bijection_exhaustively(clique(3));
  check_bijection_exhaustively(cycle_graph(5));
  check_bijection_exhaustively(complete_bipartite(2, 2).graph);
  check_bijection_exhaustively(path_graph(5));
  check_bijection_exhaustively(disjoint_union(clique(2), clique(2)));
  check_bijection_exhaustively(Graph(3));
}

TEST_CASE("the swap is a bijection on random graphs") {
  std::mt19937 rng(71);
  for (int round = 0; round < 15; ++round) {
    check_bijection_exhaustively(random_graph(1 + static_cast<int>(rng() % 6), 0.4, rng));
  }
}

TEST_CASE("double cover chain on fixed graphs") {
  DoubleCoverReport c5 = verify_double_cover_inequality(cycle_graph(5));
  CHECK(c5.pass);
  CHECK(c5.count == 11);
  CHECK(c5.cover_count == 123);  // the cover of C_5 is C_10
  CHECK(c5.cross_pairs == 123);
  REQUIRE(c5.swap_pairs.has_value());
  CHECK(*c5.swap_pairs == 121);

  DoubleCoverReport k3 = verify_double_cover_inequality(clique(3));
  CHECK(k3.pass);
  CHECK(k3.count == 4);
  CHECK(k3.cover_count == 18);  // the cover of K_3 is C_6
  CHECK(*k3.swap_pairs == 16);

  CHECK_THROWS_AS(verify_double_cover_inequality(Graph(16)), CapacityError);
}

TEST_CASE("double cover chain on random graphs") {
  std::mt19937 rng(73);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 7), 0.35, rng);
    DoubleCoverReport report = verify_double_cover_inequality(g);
    CHECK(report.pass);
    CHECK(report.cross_equals_cover);
    CHECK(report.count * report.count <= report.cover_count);
  }
}

TEST_CASE("swap enumeration capacity") {
  CHECK_THROWS_AS(enumerate_swap_pairs(Graph(15)), CapacityError);
}
