#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iset/graph.hpp"
#include "iset/numeric.hpp"

namespace iset {

enum class Provenance { kExhaustive, kNamed, kRegular, kFile };

std::string_view provenance_name(Provenance p);

struct CorpusEntry {
  std::string id;
  Graph graph;
  Provenance provenance = Provenance::kNamed;
};

/// The labeled n-vertex graph whose upper-triangle edge bits (in graph6
/// column order) are the binary digits of edge_mask.
Graph labeled_graph_from_mask(int n, std::uint64_t edge_mask);

/// Streams all 2^{n(n-1)/2} labeled graphs on n vertices in ascending
/// edge-mask order. Allows 1 <= n <= 7.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  if (n < 1 || n > 7) throw CapacityError("exhaustive generation allows 1 <= n <= 7");
  std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(labeled_graph_from_mask(n, mask));
}

std::uint64_t labeled_graph_count(int n);
std::string exhaustive_id(int n, std::uint64_t mask);

/// Materialized exhaustive tier; ids are "n<k>-<mask>".
std::vector<CorpusEntry> generate_exhaustive(int n);

/// Fixed fixtures: complete bipartite graphs, cliques, stars, paths and
/// cycles up to 12 vertices, the Petersen graph, and assorted disjoint
/// unions including graphs with isolated vertices.
std::vector<CorpusEntry> named_corpus();

Graph petersen_graph();
Graph path_graph(int n);
Graph cycle_graph(int n);

struct RunConfig {
  int max_exhaustive_n = 6;   // hard cap 7
  bool include_named = true;
  std::vector<mpq_class> lambdas{mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(5)};
  std::vector<mpq_class> bigraph_weights{mpq_class(1, 2), mpq_class(1), mpq_class(2)};
  double tolerance = kDefaultTolerance;
  int parallelism = 0;  // 0 = hardware concurrency
  std::string out_dir;
  enum class Format { kJson, kCsv } format = Format::kJson;

  /// The (lambda, mu) grid is the square of bigraph_weights.
  std::vector<std::pair<mpq_class, mpq_class>> weight_grid() const;

  void validate() const;  // DomainError on out-of-range fields
};

/// Key-value config text: "key = value" lines, '#' comments. Keys:
/// max_exhaustive_n, include_named, lambdas, bigraph_weights, tolerance,
/// parallelism, out_dir, format.
RunConfig parse_run_config(std::string_view text);

}  // namespace iset
