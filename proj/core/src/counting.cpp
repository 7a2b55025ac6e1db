#include "iset/counting.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace iset {

mpz_class IndependencePolynomial::total() const {
  mpz_class sum = 0;
  for (const mpz_class& c : coeffs) sum += c;
  return sum;
}

mpz_class BigraphPolynomial::total() const {
  mpz_class sum = 0;
  for (const auto& row : coeffs)
    for (const mpz_class& c : row) sum += c;
  return sum;
}

namespace {

int pick_pivot(const Graph& g, VertexSet live, PivotRule rule) {
  int best = -1, best_deg = -1;
  for_each_vertex(live, [&](int v) {
    int deg = set_size(g.neighbors(v) & live);
    bool better = rule == PivotRule::kMaxDegreeLowestIndex ? deg > best_deg : deg >= best_deg;
    if (better) {
      best = v;
      best_deg = deg;
    }
  });
  return best;
}

struct CountEngine {
  const Graph& g;
  PivotRule rule;
  std::unordered_map<VertexSet, mpz_class> memo;

  mpz_class count(VertexSet live) {
    int size = set_size(live);
    if (size == 0) return 1;
    if (size == 1) return 2;
    if (auto it = memo.find(live); it != memo.end()) return it->second;

    mpz_class result;
    auto comps = components_within(g, live);
    if (comps.size() > 1) {
      result = 1;
      for (VertexSet comp : comps) result *= count(comp);
    } else {
      int w = pick_pivot(g, live, rule);
      result = count(live & ~vertex_bit(w)) +
               count(live & ~(g.neighbors(w) | vertex_bit(w)));
    }
    memo.emplace(live, result);
    return result;
  }
};

using Coeffs = std::vector<mpz_class>;

Coeffs poly_add_shifted(const Coeffs& a, const Coeffs& b, int shift) {
  Coeffs out(std::max(a.size(), b.size() + static_cast<std::size_t>(shift)), mpz_class(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k + static_cast<std::size_t>(shift)] += b[k];
  return out;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

struct PolyEngine {
  const Graph& g;
  std::unordered_map<VertexSet, Coeffs> memo;

  Coeffs compute(VertexSet live) {
    if (live == 0) return {mpz_class(1)};
    if (set_size(live) == 1) return {mpz_class(1), mpz_class(1)};
    if (auto it = memo.find(live); it != memo.end()) return it->second;

    Coeffs result;
    auto comps = components_within(g, live);
    if (comps.size() > 1) {
      result = {mpz_class(1)};
      for (VertexSet comp : comps) result = poly_mul(result, compute(comp));
    } else {
      int w = pick_pivot(g, live, PivotRule::kMaxDegreeLowestIndex);
      Coeffs without = compute(live & ~vertex_bit(w));
      Coeffs with = compute(live & ~(g.neighbors(w) | vertex_bit(w)));
      result = poly_add_shifted(without, with, 1);
    }
    memo.emplace(live, result);
    return result;
  }
};

// Two-variable coefficient grid with part-aware shifts.
using Grid = std::vector<Coeffs>;

Grid grid_one() { return {Coeffs{mpz_class(1)}}; }

Grid grid_add_shifted(const Grid& a, const Grid& b, int shift_a, int shift_b) {
  std::size_t rows = std::max(a.size(), b.size() + static_cast<std::size_t>(shift_a));
  std::size_t cols = 0;
  for (const auto& row : a) cols = std::max(cols, row.size());
  for (const auto& row : b) cols = std::max(cols, row.size() + static_cast<std::size_t>(shift_b));
  Grid out(rows, Coeffs(cols, mpz_class(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j)
      out[i + static_cast<std::size_t>(shift_a)][j + static_cast<std::size_t>(shift_b)] += b[i][j];
  return out;
}

Grid grid_mul(const Grid& a, const Grid& b) {
  std::size_t a_cols = 0, b_cols = 0;
  for (const auto& row : a) a_cols = std::max(a_cols, row.size());
  for (const auto& row : b) b_cols = std::max(b_cols, row.size());
  Grid out(a.size() + b.size() - 1, Coeffs(a_cols + b_cols - 1, mpz_class(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[k].size(); ++l) out[i + k][j + l] += a[i][j] * b[k][l];
    }
  return out;
}

struct GridEngine {
  const Graph& g;
  VertexSet part_a;
  std::unordered_map<VertexSet, Grid> memo;

  Grid compute(VertexSet live) {
    if (live == 0) return grid_one();
    if (set_size(live) == 1) {
      bool in_a = (live & part_a) != 0;
      Grid unit = grid_one();
      return grid_add_shifted(unit, grid_one(), in_a ? 1 : 0, in_a ? 0 : 1);
    }
    if (auto it = memo.find(live); it != memo.end()) return it->second;

    Grid result;
    auto comps = components_within(g, live);
    if (comps.size() > 1) {
      result = grid_one();
      for (VertexSet comp : comps) result = grid_mul(result, compute(comp));
    } else {
      int w = pick_pivot(g, live, PivotRule::kMaxDegreeLowestIndex);
      Grid without = compute(live & ~vertex_bit(w));
      Grid with = compute(live & ~(g.neighbors(w) | vertex_bit(w)));
      bool in_a = contains(part_a, w);
      result = grid_add_shifted(without, with, in_a ? 1 : 0, in_a ? 0 : 1);
    }
    memo.emplace(live, result);
    return result;
  }
};

}  // namespace

mpz_class count_independent_sets(const Graph& g, PivotRule rule) {
  CountEngine engine{g, rule, {}};
  return engine.count(g.vertices());
}

mpz_class brute_force_count(const Graph& g) {
  int n = g.vertex_count();
  if (n > 30) throw CapacityError("brute-force count capped at 30 vertices");
  mpz_class count = 0;
  VertexSet all = full_set(n);
  for (VertexSet s = 0;; ++s) {
    if (is_independent_set(g, s)) ++count;
    if (s == all) break;
  }
  return count;
}

IndependencePolynomial independence_polynomial(const Graph& g) {
  PolyEngine engine{g, {}};
  return IndependencePolynomial{engine.compute(g.vertices())};
}

namespace {

BigraphPolynomial finalize_grid(const Bigraph& bg, Grid grid) {
  BigraphPolynomial p;
  p.part_a_size = set_size(bg.part_a);
  p.part_b_size = set_size(bg.part_b);
  Grid full(static_cast<std::size_t>(p.part_a_size) + 1,
            Coeffs(static_cast<std::size_t>(p.part_b_size) + 1, mpz_class(0)));
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j) full[i][j] = std::move(grid[i][j]);
  p.coeffs = std::move(full);
  return p;
}

}  // namespace

BigraphPolynomial bigraph_polynomial(const Bigraph& bg) {
  if (!is_valid(bg)) throw DomainError("invalid bigraph");
  GridEngine engine{bg.graph, bg.part_a, {}};
  return finalize_grid(bg, engine.compute(bg.graph.vertices()));
}

BigraphPolynomial bigraph_polynomial_enumerated(const Bigraph& bg) {
  if (!is_valid(bg)) throw DomainError("invalid bigraph");
  BigraphPolynomial p;
  p.part_a_size = set_size(bg.part_a);
  p.part_b_size = set_size(bg.part_b);
  p.coeffs.assign(static_cast<std::size_t>(p.part_a_size) + 1,
                  Coeffs(static_cast<std::size_t>(p.part_b_size) + 1, mpz_class(0)));
  for_each_independent_set(bg.graph, [&](VertexSet s) {
    p.coeffs[static_cast<std::size_t>(set_size(s & bg.part_a))]
            [static_cast<std::size_t>(set_size(s & bg.part_b))] += 1;
  });
  return p;
}

mpq_class evaluate(const IndependencePolynomial& p, const mpq_class& lambda) {
  mpq_class value = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    value = value * lambda + mpq_class(*it);
  }
  return value;
}

mpq_class evaluate2(const BigraphPolynomial& p, const mpq_class& lambda, const mpq_class& mu) {
  mpq_class value = 0;
  for (auto row = p.coeffs.rbegin(); row != p.coeffs.rend(); ++row) {
    mpq_class row_value = 0;
    for (auto it = row->rbegin(); it != row->rend(); ++it) {
      row_value = row_value * mu + mpq_class(*it);
    }
    value = value * lambda + row_value;
  }
  return value;
}

std::vector<VertexSet> independent_sets(const Graph& g) {
  mpz_class count = count_independent_sets(g);
  if (count > (1L << 25)) {
    throw CapacityError("independent-set list too large to materialize");
  }
  std::vector<VertexSet> sets;
  sets.reserve(count.get_ui());
  for_each_independent_set(g, [&](VertexSet s) { sets.push_back(s); });
  return sets;
}

nlohmann::json to_json(const IndependencePolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const mpz_class& c : p.coeffs) coeffs.push_back(c.get_str());
  return coeffs;
}

nlohmann::json to_json(const BigraphPolynomial& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : p.coeffs) {
    nlohmann::json r = nlohmann::json::array();
    for (const mpz_class& c : row) r.push_back(c.get_str());
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"part_a", p.part_a_size}, {"part_b", p.part_b_size}, {"coeffs", rows}};
}

}  // namespace iset
