#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "iset/graph.hpp"
#include "iset/numeric.hpp"

namespace iset {

/// Shannon entropy in bits of an exact rational distribution; terms with
/// p = 0 contribute 0. DomainError unless the probabilities are nonnegative
/// and sum to exactly 1.
double entropy_bits(std::span<const mpq_class> probs);

/// H(X | Y) from a fully materialized joint: joint[y][x] = Pr(X = x, Y = y).
double conditional_entropy_bits(const std::vector<std::vector<mpq_class>>& joint);

/// H(x) = x log2(1/x) + (1-x) log2(1/(1-x)); DomainError outside [0, 1].
double binary_entropy(double x);

/// Argmax and maximum of H(x) + x log2(2^d / (2^d - 1)). The maximum sits at
/// x0 = 2^d / (2^{d+1} - 1) and equals log2(2^{d+1} - 1) - log2(2^d - 1).
struct KahnMaximizer {
  double x0;
  double max_value;
};
KahnMaximizer kahn_maximizer(int d);

/// The uniform distribution over all independent sets of a graph.
struct ISetDistribution {
  Graph graph;
  std::vector<VertexSet> sets;    // ascending mask order
  mpq_class point_probability;    // 1 / i(G)
};

/// Requires n <= 25.
ISetDistribution make_iset_distribution(const Graph& g);

/// Exact per-vertex marginals under the uniform independent set:
/// in_set[v] = Pr(v in I), neighborhood_clear[v] = Pr(I ∩ N(v) = ∅).
struct VertexMarginals {
  std::vector<mpq_class> in_set;
  std::vector<mpq_class> neighborhood_clear;
};
VertexMarginals marginals(const Graph& g);

struct ChainStep {
  std::string name;
  double lhs_bits = 0;
  double rhs_bits = 0;
  bool is_equality = false;  // the step asserts equality, not just <=
  bool pass = false;

  double slack() const { return rhs_bits - lhs_bits; }
};

/// Stepwise audit of the entropy proof of the regular bipartite upper bound.
struct ChainAudit {
  int d = 0;
  double h_i = 0;          // H(I), computed from the distribution
  double log2_count = 0;   // log2 i(G)
  double final_bound = 0;  // (n / 2d) log2(2^{d+1} - 1)
  bool parts_determine_events = false;  // N(v) ⊆ O for every summed vertex
  std::vector<ChainStep> steps;
  bool all_pass = false;
  bool final_equality = false;
};

/// Audits every inequality in the two chains for a d-regular bipartite graph
/// (connected or not, n <= 22), summing over the vertices of part_a and
/// restricting to part_b. Run it again with the parts swapped for the other
/// orientation.
ChainAudit audit_kahn_chain(const Bigraph& bg, int d, double tol = kDefaultTolerance);

/// A distribution over subsets of a ground set.
struct WeightedSubset {
  VertexSet mask;
  mpq_class probability;
};

/// Shearer's bound H(X) <= (1/m) sum_A H(X_A) for a cover in which every
/// ground element appears in at least m members (checked; DomainError
/// otherwise).
bool verify_shearer(std::span<const WeightedSubset> distribution,
                    std::span<const VertexSet> cover, int multiplicity, VertexSet ground,
                    double tol = kDefaultTolerance);

nlohmann::json to_json(const ChainAudit& audit);

}  // namespace iset
