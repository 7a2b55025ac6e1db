#include "iset/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "iset/corpus.hpp"

using namespace iset;

namespace {

// Brute-force isomorphism oracle, feasible for n <= 8.
bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v = u + 1; v < n && match; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void check_simple_invariants(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK_FALSE(contains(g.neighbors(v), v));
    for_each_vertex(g.neighbors(v), [&](int u) { CHECK(contains(g.neighbors(u), v)); });
    CHECK((g.neighbors(v) & ~g.vertices()) == 0);
  }
}

}  // namespace

TEST_CASE("complete bipartite constructor") {
  Bigraph k11 = complete_bipartite(1, 1);
  CHECK(k11.graph.vertex_count() == 2);
  CHECK(k11.graph.edge_count() == 1);

  Bigraph k33 = complete_bipartite(3, 3);
  CHECK(k33.graph.edge_count() == 9);
  CHECK(is_regular(k33.graph) == 3);

  Bigraph k23 = complete_bipartite(2, 3);
  CHECK(k23.graph.edge_count() == 6);
  std::vector<int> degrees;
  for (int v = 0; v < 5; ++v) degrees.push_back(k23.graph.degree(v));
  CHECK(degrees == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(is_valid(k23));

  CHECK_THROWS_AS(complete_bipartite(33, 32), CapacityError);
  CHECK_THROWS_AS(complete_bipartite(0, 3), DomainError);
  check_simple_invariants(k23.graph);
}

TEST_CASE("clique constructor") {
  CHECK(clique(1).vertex_count() == 1);
  CHECK(clique(1).edge_count() == 0);
  CHECK(clique(3).edge_count() == 3);
  Graph k4 = clique(4);
  CHECK(k4.edge_count() == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK_THROWS_AS(clique(65), CapacityError);
}

TEST_CASE("disjoint union") {
  Graph two_k2 = disjoint_union(clique(2), clique(2));
  CHECK(two_k2.vertex_count() == 4);
  CHECK(two_k2.edge_count() == 2);
  CHECK(is_regular(two_k2) == 1);

  Graph with_iso = disjoint_union(complete_bipartite(1, 1).graph, Graph(1));
  CHECK(isolated_count(with_iso) == 1);

  Graph c5c5 = disjoint_union(cycle_graph(5), cycle_graph(5));
  CHECK(c5c5.vertex_count() == 10);
  CHECK(c5c5.edge_count() == 10);
  CHECK(components(c5c5).size() == 2);
  check_simple_invariants(c5c5);

  CHECK_THROWS_AS(disjoint_union(clique(40), clique(30)), CapacityError);
}

TEST_CASE("double cover: triangle becomes a hexagon") {
  Bigraph cover = double_cover(clique(3));
  CHECK(cover.graph.vertex_count() == 6);
  CHECK(cover.graph.edge_count() == 6);
  CHECK(isomorphic(cover.graph, cycle_graph(6)));
}

TEST_CASE("double cover: bipartite graphs split into two copies") {
  Bigraph cover = double_cover(complete_bipartite(1, 1).graph);
  CHECK(cover.graph.vertex_count() == 4);
  CHECK(cover.graph.edge_count() == 2);
  CHECK(components(cover.graph).size() == 2);
}

TEST_CASE("double cover: Petersen gives the Desargues graph shape") {
  Bigraph cover = double_cover(petersen_graph());
  CHECK(cover.graph.vertex_count() == 20);
  CHECK(is_regular(cover.graph) == 3);
  CHECK(is_connected(cover.graph));
  CHECK(is_bipartite(cover.graph));
}

TEST_CASE("double cover preserves degrees and is always bipartite") {
  std::mt19937 rng(7);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(2 + round % 9, 0.4, rng);
    Bigraph cover = double_cover(g);
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      CHECK(cover.graph.degree(v) == g.degree(v));
      CHECK(cover.graph.degree(v + n) == g.degree(v));
    }
    CHECK(bipartition(cover.graph).has_value());
    CHECK(is_valid(cover));
    check_simple_invariants(cover.graph);
  }
}

TEST_CASE("vertex deletion") {
  DeleteResult r = delete_vertex(clique(2), 0);
  CHECK(r.graph.vertex_count() == 1);
  CHECK(r.graph.edge_count() == 0);
  CHECK(r.old_to_new == std::vector<int>{-1, 0});
  CHECK(r.new_to_old == std::vector<int>{1});

  // star K_{1,3} centered at 0
  Graph star = complete_bipartite(1, 3).graph;
  CHECK(delete_closed_neighborhood(star, 0).graph.vertex_count() == 0);

  DeleteResult c5r = delete_closed_neighborhood(cycle_graph(5), 0);
  CHECK(c5r.graph.vertex_count() == 2);
  CHECK(c5r.graph.edge_count() == 1);  // a path on two vertices

  CHECK_THROWS_AS(delete_vertex(clique(2), 5), DomainError);
  CHECK_THROWS_AS(delete_closed_neighborhood(clique(2), -1), DomainError);
}

TEST_CASE("deletion relabeling preserves relative order") {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_graph(6, 0.5, rng);
    int w = static_cast<int>(rng() % 6);
    DeleteResult r = delete_vertex(g, w);
    CHECK(std::is_sorted(r.new_to_old.begin(), r.new_to_old.end()));
    for (std::size_t k = 0; k < r.new_to_old.size(); ++k) {
      CHECK(r.old_to_new[static_cast<std::size_t>(r.new_to_old[k])] == static_cast<int>(k));
    }
    // surviving adjacency is the induced one
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        if (u == w || v == w) continue;
        CHECK(g.has_edge(u, v) ==
              r.graph.has_edge(r.old_to_new[static_cast<std::size_t>(u)],
                               r.old_to_new[static_cast<std::size_t>(v)]));
      }
  }
}

TEST_CASE("bipartition canonicalization") {
  auto c4 = bipartition(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(set_size(c4->part_a) == 2);
  CHECK(set_size(c4->part_b) == 2);
  CHECK(is_valid(*c4));

  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());

  // two disjoint edges: the minimum vertex of each component lands in part a
  Graph m2 = disjoint_union(clique(2), clique(2));
  auto parts = bipartition(m2);
  REQUIRE(parts.has_value());
  CHECK(parts->part_a == (vertex_bit(0) | vertex_bit(2)));
  CHECK(parts->part_b == (vertex_bit(1) | vertex_bit(3)));
}

TEST_CASE("layer decomposition of the star") {
  Graph star = complete_bipartite(1, 3).graph;
  LayerDecomposition ld = layer_decomposition(star, 0);
  REQUIRE(ld.layers.size() == 2);
  CHECK(ld.layers[0] == vertex_bit(0));
  CHECK(set_size(ld.layers[1]) == 3);
  CHECK(ld.no_forward_neighbors[1] == ld.layers[1]);
  CHECK(ld.pivot_degree == 3);
}

TEST_CASE("layer decomposition of the hexagon") {
  LayerDecomposition ld = layer_decomposition(cycle_graph(6), 0);
  REQUIRE(ld.layers.size() == 4);
  CHECK(set_size(ld.layers[0]) == 1);
  CHECK(set_size(ld.layers[1]) == 2);
  CHECK(set_size(ld.layers[2]) == 2);
  CHECK(set_size(ld.layers[3]) == 1);
  CHECK(ld.layer_edges[1].size() == 2);
  CHECK(ld.layer_edges[2].size() == 2);
  CHECK(ld.layer_edges[3].size() == 2);
}

TEST_CASE("layer decomposition of Petersen") {
  Graph p = petersen_graph();
  for (int w = 0; w < 10; ++w) {
    LayerDecomposition ld = layer_decomposition(p, w);
    REQUIRE(ld.layers.size() == 3);
    CHECK(set_size(ld.layers[1]) == 3);
    CHECK(set_size(ld.layers[2]) == 6);
    for_each_vertex(ld.layers[1], [&](int u) {
      CHECK(ld.forward_degree[static_cast<std::size_t>(u)] == 2);
    });
  }
}

TEST_CASE("layer decomposition rejects disconnected graphs") {
  CHECK_THROWS_AS(layer_decomposition(disjoint_union(clique(2), clique(2)), 0), DomainError);
}

TEST_CASE("layers partition the vertex set; bipartite graphs have no intra-layer edges") {
  std::mt19937 rng(23);
  int done = 0;
  while (done < 25) {
    Graph g = random_graph(7, 0.4, rng);
    if (!is_connected(g)) continue;
    ++done;
    LayerDecomposition ld = layer_decomposition(g, 0);
    VertexSet all = 0;
    for (VertexSet layer : ld.layers) {
      CHECK((all & layer) == 0);
      all |= layer;
    }
    CHECK(all == g.vertices());
    if (is_bipartite(g)) {
      for (VertexSet layer : ld.layers) {
        for_each_vertex(layer, [&](int v) { CHECK((g.neighbors(v) & layer) == 0); });
      }
    }
  }
}

TEST_CASE("structural predicates") {
  Graph cbu = disjoint_union(complete_bipartite(2, 3).graph, complete_bipartite(1, 1).graph);
  CHECK(is_complete_bipartite_component_union(cbu));
  CHECK_FALSE(is_complete_bipartite_component_union(cycle_graph(6)));
  CHECK(is_clique_union(disjoint_union(clique(3), clique(1))));
  CHECK_FALSE(is_clique_union(complete_bipartite(2, 2).graph));
  CHECK(is_complete_bipartite_component_union(Graph(3)));  // only isolated vertices
  CHECK(is_clique_union(Graph(3)));

  CHECK(is_kdd_union(disjoint_union(complete_bipartite(2, 2).graph,
                                    complete_bipartite(2, 2).graph),
                     2));
  CHECK_FALSE(is_kdd_union(complete_bipartite(2, 3).graph, 2));
  CHECK(isolated_count(disjoint_union(clique(2), Graph(2))) == 2);
  CHECK(is_regular(cycle_graph(5)) == 2);
  CHECK_FALSE(is_regular(complete_bipartite(2, 3).graph).has_value());
  CHECK(is_connected(petersen_graph()));
  CHECK_FALSE(is_connected(disjoint_union(clique(1), clique(1))));
}

TEST_CASE("independence and cross-independence") {
  Graph c4 = cycle_graph(4);
  CHECK(is_independent_set(c4, 0));
  CHECK(is_independent_set(c4, vertex_bit(0) | vertex_bit(2)));
  CHECK_FALSE(is_independent_set(c4, vertex_bit(0) | vertex_bit(1)));
  CHECK(is_cross_independent(c4, vertex_bit(0), vertex_bit(2)));
  CHECK_FALSE(is_cross_independent(c4, vertex_bit(0), vertex_bit(1)));
  // sets may intersect
  CHECK(is_cross_independent(c4, vertex_bit(0), vertex_bit(0) | vertex_bit(2)));
}

TEST_CASE("graph equality and edge iteration") {
  Graph g(3, {{0, 1}, {1, 2}});
  std::vector<std::pair<int, int>> edges = edge_list(g);
  CHECK(edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g == path_graph(3));
  CHECK(g != cycle_graph(3));
}

TEST_CASE("constructors reject bad input") {
  CHECK_THROWS_AS(Graph(65), CapacityError);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), DomainError);
}
