#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "iset/errors.hpp"

namespace iset {

/// A set of vertices as one machine word; vertex v is bit v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }

/// All vertices of an n-vertex graph as a mask.
constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Calls fn(v) for every vertex of s in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> to_vertex_list(VertexSet s);

/// Undirected simple graph on at most 64 vertices.
///
/// Immutable value type: adjacency is fixed at construction and kept
/// symmetric and irreflexive; every operation below that "modifies" a
/// graph returns a new one. Values are freely shareable across threads.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Throws CapacityError if n > 64, DomainError on bad endpoints or loops.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const { return full_set(n_); }

  /// Construction-time edge insertion; rejects loops and bad endpoints.
  /// Operations on built graphs never mutate, they return new values.
  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Bipartite graph with a fixed bipartition part_a | part_b = V(G).
struct Bigraph {
  Graph graph;
  VertexSet part_a = 0;
  VertexSet part_b = 0;
};

/// Checks the Bigraph invariants: parts partition V and every edge crosses.
bool is_valid(const Bigraph& bg);

// --- constructors -----------------------------------------------------------

/// K_{a,b}: part_a = vertices 0..a-1, part_b = a..a+b-1, all a*b edges.
Bigraph complete_bipartite(int a, int b);

/// K_k on vertices 0..k-1.
Graph clique(int k);

/// Vertices of g2 are shifted up by g1's vertex count; no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Bipartite double cover G x K_2 on 2n vertices: (v,0) = v, (v,1) = v + n,
/// with edges (u,0)-(v,1) and (v,0)-(u,1) for each uv in E(G).
/// Degree-preserving and always bipartite; part_a is the 0-side.
Bigraph double_cover(const Graph& g);

// --- deletion ---------------------------------------------------------------

/// Result of a vertex-deletion operation. Surviving vertices keep their
/// relative order; old_to_new maps removed vertices to -1.
struct DeleteResult {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

DeleteResult delete_vertex(const Graph& g, int w);
DeleteResult delete_closed_neighborhood(const Graph& g, int w);

// --- bipartition & layers ---------------------------------------------------

/// Canonical 2-coloring: within each connected component the component's
/// minimum-index vertex goes to part_a. Absent when an odd cycle exists.
std::optional<Bigraph> bipartition(const Graph& g);

/// Same canonical rule restricted to the subgraph induced by `within`.
/// Returns the two color classes (first holds each component's min vertex).
std::optional<std::pair<VertexSet, VertexSet>> bipartition_within(const Graph& g,
                                                                  VertexSet within);

/// BFS layering from a pivot vertex of a connected graph.
struct LayerDecomposition {
  int pivot = 0;
  int pivot_degree = 0;  // degree of the pivot in g
  std::vector<VertexSet> layers;  // layers[k] = vertices at distance k
  /// layer_edges[k] = edges between layers k-1 and k (layer_edges[0] empty);
  /// pairs are (vertex in layer k-1, vertex in layer k).
  std::vector<std::vector<std::pair<int, int>>> layer_edges;
  /// no_forward_neighbors[k] = members of layer k with no neighbor in layer k+1.
  std::vector<VertexSet> no_forward_neighbors;
  /// forward_degree[u] = number of neighbors of u in the next layer.
  std::vector<int> forward_degree;
};

/// Throws DomainError when g is disconnected or w is out of range.
LayerDecomposition layer_decomposition(const Graph& g, int w);

// --- structural predicates --------------------------------------------------

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// The common degree when all vertices agree, absent otherwise (and for n = 0).
std::optional<int> is_regular(const Graph& g);

/// True iff every component on >= 2 vertices is a complete bipartite graph
/// (isolated vertices are allowed and counted separately).
bool is_complete_bipartite_component_union(const Graph& g);

/// True iff every component is a clique (an isolated vertex is K_1).
bool is_clique_union(const Graph& g);

/// True iff every component is K_{d,d}.
bool is_kdd_union(const Graph& g, int d);

int isolated_count(const Graph& g);

/// Connected components as vertex masks, in order of their minimum vertex.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

bool is_independent_set(const Graph& g, VertexSet s);

/// True when no edge of g joins a to b (a and b may intersect).
bool is_cross_independent(const Graph& g, VertexSet a, VertexSet b);

/// Union of the neighborhoods of the members of s.
VertexSet neighborhood_of_set(const Graph& g, VertexSet s);

/// Calls fn(u, v) for every edge with u < v, in lexicographic order.
template <typename Fn>
void for_each_edge(const Graph& g, Fn&& fn) {
  for (int u = 0; u + 1 < g.vertex_count(); ++u) {
    VertexSet higher = g.neighbors(u) >> u >> 1;
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      fn(u, v);
      higher &= higher - 1;
    }
  }
}

std::vector<std::pair<int, int>> edge_list(const Graph& g);

}  // namespace iset
