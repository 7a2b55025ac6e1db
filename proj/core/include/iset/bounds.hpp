#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iset/counting.hpp"
#include "iset/graph.hpp"
#include "iset/numeric.hpp"

namespace iset {

// All bounds are returned in log2 space (bits).

/// (n/(2d)) * log2(2^{d+1} - 1): the tight upper bound for d-regular graphs.
double regular_upper_bound(int n, int d);

/// iso(G) + sum over edges uv of log2(2^{d_u} + 2^{d_v} - 1) / (d_u d_v).
/// Tight exactly on disjoint unions of complete bipartite graphs plus
/// isolated vertices. Edgeless graphs give iso(G) exactly.
double irregular_upper_bound(const Graph& g);

/// Weighted analogue bounding log2 P_G(lambda); isolated vertices contribute
/// a log2(1 + lambda) factor each. Requires lambda > 0.
double weighted_upper_bound(const Graph& g, const mpq_class& lambda);

/// Two-weight bound on log2 P_G(lambda, mu) for a bigraph; the edge term for
/// uv (u in A, v in B) is log2((1+lambda)^{d_v} + (1+mu)^{d_u} - 1)/(d_u d_v).
/// Isolated A-vertices contribute log2(1+lambda), B-vertices log2(1+mu).
double bigraph_upper_bound(const Bigraph& bg, const mpq_class& lambda, const mpq_class& mu);

/// sum over vertices of log2(d_v + 2) / (d_v + 1); tight on clique unions.
double lower_bound(const Graph& g);

/// sum over vertices of log2((d_v+1) lambda + 1) / (d_v + 1).
double weighted_lower_bound(const Graph& g, const mpq_class& lambda);

/// The induction potential j(G) = 2^{iso(G)} * prod i(K_{d_u,d_v})^{1/(d_u d_v)},
/// in log2 space. Numerically identical to irregular_upper_bound; the separate
/// name keeps recursion audits readable.
double j_value(const Graph& g);

enum class BoundKind { kIrregularUpper, kLower };

/// Accepts "irregular_upper" and "lower"; DomainError otherwise.
BoundKind parse_bound_kind(std::string_view name);

struct EqualityCase {
  bool numeric;     // |slack| <= tol in bits
  bool structural;  // the matching graph-shape predicate
};

EqualityCase equality_case_check(const Graph& g, BoundKind kind,
                                 double tol = kDefaultTolerance);

/// One run of the recursion inequality j(G-w) + j(G-w-N(w)) <= j(G).
struct JDecomposition {
  int pivot = -1;
  double j_g = 0;
  double j_minus_w = 0;
  double j_minus_w_neighborhood = 0;
  int iso_g = 0;                   // 0 by precondition
  int iso_minus_w = 0;             // must equal |I_1|
  int iso_minus_w_neighborhood = 0;  // must equal |I_2|
  bool iso_crosscheck = false;     // the two counts above agree with the layers
  bool inequality_holds = false;

  bool pass() const { return iso_crosscheck && inequality_holds; }
};

/// Requires g connected, bipartite, >= 2 vertices, no isolated vertices.
/// The comparison runs in linear space via extended-precision exponentials.
JDecomposition verify_j_inequality(const Graph& g, double tol = kDefaultTolerance);

struct BoundEntry {
  std::string name;
  double lhs_bits = 0;    // log2 of the exact count / partition value
  double bound_bits = 0;
  double slack = 0;       // bound - lhs
  bool is_upper = true;
  bool numeric_equality = false;
  bool structural_equality = false;

  bool holds(double tol) const { return is_upper ? slack >= -tol : slack <= tol; }
};

struct BoundReport {
  std::string graph_id;
  std::string graph6;
  int n = 0;
  int m = 0;
  double log2_count = 0;
  std::vector<BoundEntry> entries;
};

/// Evaluates every applicable bound for one graph: the regular bound (when
/// regular with d >= 1), the unweighted upper/lower pair, the weighted pair
/// per lambda, and the bigraph bound per weight pair (bipartite inputs only,
/// using the canonical bipartition).
BoundReport bound_report(const Graph& g, std::string graph_id,
                         std::span<const mpq_class> lambdas,
                         std::span<const std::pair<mpq_class, mpq_class>> bigraph_weights,
                         double tol = kDefaultTolerance);

nlohmann::json to_json(const BoundReport& report);

/// CSV columns: graph_id,graph6,n,m,check,result,lhs_bits,rhs_bits,slack_bits
std::string bound_report_csv_header();
std::string to_csv_rows(const BoundReport& report, double tol = kDefaultTolerance);

}  // namespace iset
