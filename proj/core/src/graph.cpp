#include "iset/graph.hpp"

#include <algorithm>
#include <string>

namespace iset {

std::vector<int> to_vertex_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

namespace {

void check_capacity(long n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw DomainError("vertex id " + std::to_string(v) + " out of range [0, " +
                      std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) { check_capacity(n); }

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()))) {}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw DomainError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  }
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool is_valid(const Bigraph& bg) {
  const Graph& g = bg.graph;
  if ((bg.part_a & bg.part_b) != 0) return false;
  if ((bg.part_a | bg.part_b) != g.vertices()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet own = contains(bg.part_a, v) ? bg.part_a : bg.part_b;
    if (g.neighbors(v) & own) return false;
  }
  return true;
}

Bigraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete_bipartite requires positive part sizes");
  check_capacity(static_cast<long>(a) + b);
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return Bigraph{std::move(g), full_set(a), full_set(a + b) & ~full_set(a)};
}

Graph clique(int k) {
  if (k < 1) throw DomainError("clique requires a positive size");
  check_capacity(k);
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  check_capacity(static_cast<long>(n1) + n2);
  Graph g(n1 + n2);
  for_each_edge(g1, [&](int u, int v) { g.add_edge(u, v); });
  for_each_edge(g2, [&](int u, int v) { g.add_edge(u + n1, v + n1); });
  return g;
}

Bigraph double_cover(const Graph& g) {
  int n = g.vertex_count();
  check_capacity(2L * n);
  Graph cover(2 * n);
  for_each_edge(g, [&](int u, int v) {
    cover.add_edge(u, v + n);
    cover.add_edge(v, u + n);
  });
  return Bigraph{std::move(cover), full_set(n), full_set(2 * n) & ~full_set(n)};
}

namespace {

DeleteResult delete_set(const Graph& g, VertexSet removed) {
  int n = g.vertex_count();
  DeleteResult result;
  result.old_to_new.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (!contains(removed, v)) {
      result.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(result.new_to_old.size());
      result.new_to_old.push_back(v);
    }
  }
  Graph h(static_cast<int>(result.new_to_old.size()));
  for_each_edge(g, [&](int u, int v) {
    int nu = result.old_to_new[static_cast<std::size_t>(u)];
    int nv = result.old_to_new[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) h.add_edge(nu, nv);
  });
  result.graph = std::move(h);
  return result;
}

}  // namespace

DeleteResult delete_vertex(const Graph& g, int w) {
  check_vertex(g, w);
  return delete_set(g, vertex_bit(w));
}

DeleteResult delete_closed_neighborhood(const Graph& g, int w) {
  check_vertex(g, w);
  return delete_set(g, vertex_bit(w) | g.neighbors(w));
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> comps;
  VertexSet remaining = within;
  while (remaining) {
    VertexSet comp = remaining & (~remaining + 1);  // lowest remaining vertex
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & within & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    remaining &= ~comp;
  }
  return comps;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition_within(const Graph& g,
                                                                  VertexSet within) {
  VertexSet color_a = 0, color_b = 0;
  VertexSet remaining = within;
  while (remaining) {
    VertexSet comp_a = remaining & (~remaining + 1);
    VertexSet comp_b = 0;
    VertexSet frontier = comp_a;
    bool odd = false;
    while (frontier && !odd) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= within;
      bool frontier_in_a = (frontier & comp_a) != 0;
      VertexSet& same = frontier_in_a ? comp_a : comp_b;
      VertexSet& other = frontier_in_a ? comp_b : comp_a;
      if (next & same) {
        odd = true;
        break;
      }
      frontier = next & ~other;
      other |= frontier;
    }
    if (odd) return std::nullopt;
    color_a |= comp_a;
    color_b |= comp_b;
    remaining &= ~(comp_a | comp_b);
  }
  return std::make_pair(color_a, color_b);
}

std::optional<Bigraph> bipartition(const Graph& g) {
  auto parts = bipartition_within(g, g.vertices());
  if (!parts) return std::nullopt;
  return Bigraph{g, parts->first, parts->second};
}

LayerDecomposition layer_decomposition(const Graph& g, int w) {
  check_vertex(g, w);
  if (!is_connected(g)) {
    throw DomainError("layer decomposition requires a connected graph");
  }
  LayerDecomposition ld;
  ld.pivot = w;
  ld.pivot_degree = g.degree(w);
  ld.forward_degree.assign(static_cast<std::size_t>(g.vertex_count()), 0);

  VertexSet seen = vertex_bit(w);
  ld.layers.push_back(vertex_bit(w));
  while (true) {
    VertexSet next = 0;
    for_each_vertex(ld.layers.back(), [&](int v) { next |= g.neighbors(v); });
    next &= ~seen;
    if (!next) break;
    ld.layers.push_back(next);
    seen |= next;
  }

  ld.layer_edges.resize(ld.layers.size());
  ld.no_forward_neighbors.resize(ld.layers.size());
  for (std::size_t k = 0; k < ld.layers.size(); ++k) {
    VertexSet layer = ld.layers[k];
    VertexSet next = k + 1 < ld.layers.size() ? ld.layers[k + 1] : 0;
    VertexSet isolated_fwd = 0;
    for_each_vertex(layer, [&](int u) {
      VertexSet fwd = g.neighbors(u) & next;
      ld.forward_degree[static_cast<std::size_t>(u)] = set_size(fwd);
      if (!fwd) isolated_fwd |= vertex_bit(u);
      if (k + 1 < ld.layers.size()) {
        for_each_vertex(fwd, [&](int v) {
          ld.layer_edges[k + 1].emplace_back(u, v);
        });
      }
    });
    ld.no_forward_neighbors[k] = isolated_fwd;
  }
  return ld;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components_within(g, g.vertices()).size() == 1;
}

bool is_bipartite(const Graph& g) {
  return bipartition_within(g, g.vertices()).has_value();
}

std::optional<int> is_regular(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  int d = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

namespace {

bool component_is_complete_bipartite(const Graph& g, VertexSet comp) {
  auto parts = bipartition_within(g, comp);
  if (!parts) return false;
  auto [x, y] = *parts;
  bool ok = true;
  for_each_vertex(x, [&](int v) { ok = ok && (g.neighbors(v) & comp) == y; });
  for_each_vertex(y, [&](int v) { ok = ok && (g.neighbors(v) & comp) == x; });
  return ok;
}

}  // namespace

bool is_complete_bipartite_component_union(const Graph& g) {
  for (VertexSet comp : components(g)) {
    if (set_size(comp) == 1) continue;
    if (!component_is_complete_bipartite(g, comp)) return false;
  }
  return true;
}

bool is_clique_union(const Graph& g) {
  for (VertexSet comp : components(g)) {
    bool ok = true;
    for_each_vertex(comp, [&](int v) {
      ok = ok && (g.neighbors(v) & comp) == (comp & ~vertex_bit(v));
    });
    if (!ok) return false;
  }
  return true;
}

bool is_kdd_union(const Graph& g, int d) {
  for (VertexSet comp : components(g)) {
    if (set_size(comp) != 2 * d) return false;
    auto parts = bipartition_within(g, comp);
    if (!parts) return false;
    if (set_size(parts->first) != d || set_size(parts->second) != d) return false;
    if (!component_is_complete_bipartite(g, comp)) return false;
  }
  return true;
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) ++count;
  }
  return count;
}

bool is_independent_set(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && !(g.neighbors(v) & s); });
  return ok;
}

bool is_cross_independent(const Graph& g, VertexSet a, VertexSet b) {
  bool ok = true;
  for_each_vertex(a, [&](int v) { ok = ok && !(g.neighbors(v) & b); });
  return ok;
}

VertexSet neighborhood_of_set(const Graph& g, VertexSet s) {
  VertexSet out = 0;
  for_each_vertex(s, [&](int v) { out |= g.neighbors(v); });
  return out;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for_each_edge(g, [&](int u, int v) { edges.emplace_back(u, v); });
  return edges;
}

}  // namespace iset
