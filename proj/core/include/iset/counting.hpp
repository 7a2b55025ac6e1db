#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include <vector>

#include "iset/graph.hpp"
#include "iset/numeric.hpp"

namespace iset {

/// Exact independence polynomial: coeffs[k] counts the independent sets of
/// size k. coeffs[0] = 1, the sum of coefficients is i(G), and the trailing
/// coefficient counts the maximum independent sets.
struct IndependencePolynomial {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class total() const;  // value at 1, i.e. i(G)

  bool operator==(const IndependencePolynomial&) const = default;
};

/// Two-variable grid for a bigraph: coeffs[a][b] counts independent sets I
/// with |I ∩ A| = a and |I ∩ B| = b. Dimensions are (|A|+1) x (|B|+1).
struct BigraphPolynomial {
  int part_a_size = 0;
  int part_b_size = 0;
  std::vector<std::vector<mpz_class>> coeffs;

  mpz_class total() const;

  bool operator==(const BigraphPolynomial&) const = default;
};

enum class PivotRule { kMaxDegreeLowestIndex, kMaxDegreeHighestIndex };

/// Exact i(G). Disconnected inputs multiply component counts; connected ones
/// recurse on i(G) = i(G-w) + i(G-w-N(w)) with w a maximum-degree vertex,
/// memoized on the surviving-vertex bitmask of one top-level query.
mpz_class count_independent_sets(const Graph& g,
                                 PivotRule rule = PivotRule::kMaxDegreeLowestIndex);

/// Independent oracle: scans all 2^n subsets. Requires n <= 30.
mpz_class brute_force_count(const Graph& g);

/// Same recursion as count_independent_sets with polynomial values:
/// P_G = P_{G-w} + x * P_{G-w-N(w)}, components multiply.
IndependencePolynomial independence_polynomial(const Graph& g);

/// Pivot recursion tracking which part the pivot lies in.
BigraphPolynomial bigraph_polynomial(const Bigraph& bg);

/// Enumeration route (independent oracle for the recursion). Requires n <= 30.
BigraphPolynomial bigraph_polynomial_enumerated(const Bigraph& bg);

/// Exact Horner evaluation.
mpq_class evaluate(const IndependencePolynomial& p, const mpq_class& lambda);
mpq_class evaluate2(const BigraphPolynomial& p, const mpq_class& lambda, const mpq_class& mu);

namespace detail {
template <typename Fn>
void enumerate_rec(const Graph& g, int v, VertexSet chosen, VertexSet banned, Fn&& fn) {
  if (v < 0) {
    fn(chosen);
    return;
  }
  enumerate_rec(g, v - 1, chosen, banned, fn);
  if (!contains(banned, v)) {
    enumerate_rec(g, v - 1, chosen | vertex_bit(v), banned | g.neighbors(v), fn);
  }
}
}  // namespace detail

/// Visits every independent set exactly once, in ascending bitmask order.
/// Requires n <= 30.
template <typename Fn>
void for_each_independent_set(const Graph& g, Fn&& fn) {
  if (g.vertex_count() > 30) {
    throw CapacityError("independent-set enumeration capped at 30 vertices");
  }
  detail::enumerate_rec(g, g.vertex_count() - 1, 0, 0, fn);
}

/// Materialized enumeration; refuses lists beyond a memory budget.
std::vector<VertexSet> independent_sets(const Graph& g);

nlohmann::json to_json(const IndependencePolynomial& p);
nlohmann::json to_json(const BigraphPolynomial& p);

}  // namespace iset
