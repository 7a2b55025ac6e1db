#include "iset/bounds.hpp"

#include <cmath>
#include <cstdio>

namespace iset {

namespace {

void check_positive(const mpq_class& value, const char* what) {
  if (value <= 0) throw DomainError(std::string(what) + " must be positive");
}

// Per-degree powers of (1 + weight), computed once per graph.
std::vector<mpq_class> degree_powers(const Graph& g, const mpq_class& one_plus) {
  int max_deg = 0;
  for (int v = 0; v < g.vertex_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
  std::vector<mpq_class> powers(static_cast<std::size_t>(max_deg) + 1);
  for (int d = 0; d <= max_deg; ++d) powers[static_cast<std::size_t>(d)] = pow_mpq(one_plus, d);
  return powers;
}

}  // namespace

double regular_upper_bound(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("regular_upper_bound requires n >= 1 and d >= 1");
  mpz_class value = (mpz_class(1) << (d + 1)) - 1;
  return static_cast<double>(n) / (2.0 * d) * log2_mpz(value);
}

double weighted_upper_bound(const Graph& g, const mpq_class& lambda) {
  check_positive(lambda, "lambda");
  mpq_class one_plus = lambda + 1;
  auto powers = degree_powers(g, one_plus);
  KahanSum sum;
  for_each_edge(g, [&](int u, int v) {
    int du = g.degree(u), dv = g.degree(v);
    mpq_class term = powers[static_cast<std::size_t>(du)] +
                     powers[static_cast<std::size_t>(dv)] - 1;
    sum.add(log2_mpq(term) / (static_cast<double>(du) * dv));
  });
  int iso = isolated_count(g);
  if (iso > 0) sum.add(iso * log2_mpq(one_plus));
  return sum.value();
}

double irregular_upper_bound(const Graph& g) { return weighted_upper_bound(g, mpq_class(1)); }

double j_value(const Graph& g) { return irregular_upper_bound(g); }

double bigraph_upper_bound(const Bigraph& bg, const mpq_class& lambda, const mpq_class& mu) {
  check_positive(lambda, "lambda");
  check_positive(mu, "mu");
  if (!is_valid(bg)) throw DomainError("invalid bigraph");
  const Graph& g = bg.graph;
  auto powers_a = degree_powers(g, lambda + 1);
  auto powers_b = degree_powers(g, mu + 1);
  KahanSum sum;
  for_each_edge(g, [&](int x, int y) {
    int u = contains(bg.part_a, x) ? x : y;  // A endpoint
    int v = contains(bg.part_a, x) ? y : x;  // B endpoint
    int du = g.degree(u), dv = g.degree(v);
    mpq_class term = powers_a[static_cast<std::size_t>(dv)] +
                     powers_b[static_cast<std::size_t>(du)] - 1;
    sum.add(log2_mpq(term) / (static_cast<double>(du) * dv));
  });
  int iso_a = 0, iso_b = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) (contains(bg.part_a, v) ? iso_a : iso_b) += 1;
  }
  if (iso_a > 0) sum.add(iso_a * log2_mpq(lambda + 1));
  if (iso_b > 0) sum.add(iso_b * log2_mpq(mu + 1));
  return sum.value();
}

double weighted_lower_bound(const Graph& g, const mpq_class& lambda) {
  check_positive(lambda, "lambda");
  KahanSum sum;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    mpq_class term = mpq_class(d + 1) * lambda + 1;
    sum.add(log2_mpq(term) / (d + 1));
  }
  return sum.value();
}

double lower_bound(const Graph& g) { return weighted_lower_bound(g, mpq_class(1)); }

BoundKind parse_bound_kind(std::string_view name) {
  if (name == "irregular_upper") return BoundKind::kIrregularUpper;
  if (name == "lower") return BoundKind::kLower;
  throw DomainError("unknown bound name: " + std::string(name));
}

EqualityCase equality_case_check(const Graph& g, BoundKind kind, double tol) {
  double count_bits = log2_mpz(count_independent_sets(g));
  EqualityCase result{};
  switch (kind) {
    case BoundKind::kIrregularUpper:
      result.numeric = std::abs(irregular_upper_bound(g) - count_bits) <= tol;
      result.structural = is_complete_bipartite_component_union(g);
      break;
    case BoundKind::kLower:
      result.numeric = std::abs(lower_bound(g) - count_bits) <= tol;
      result.structural = is_clique_union(g);
      break;
  }
  return result;
}

JDecomposition verify_j_inequality(const Graph& g, double tol) {
  if (g.vertex_count() < 2) throw DomainError("j-inequality requires >= 2 vertices");
  if (!is_connected(g)) throw DomainError("j-inequality requires a connected graph");
  if (!is_bipartite(g)) throw DomainError("j-inequality requires a bipartite graph");
  if (isolated_count(g) != 0) throw DomainError("j-inequality requires no isolated vertices");

  JDecomposition jd;
  int w = 0, best_deg = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > best_deg) {
      best_deg = g.degree(v);
      w = v;
    }
  }
  jd.pivot = w;
  Graph minus_w = delete_vertex(g, w).graph;
  Graph minus_wn = delete_closed_neighborhood(g, w).graph;
  jd.j_g = j_value(g);
  jd.j_minus_w = j_value(minus_w);
  jd.j_minus_w_neighborhood = j_value(minus_wn);
  jd.iso_g = isolated_count(g);
  jd.iso_minus_w = isolated_count(minus_w);
  jd.iso_minus_w_neighborhood = isolated_count(minus_wn);

  LayerDecomposition ld = layer_decomposition(g, w);
  int i1 = ld.layers.size() > 1 ? set_size(ld.no_forward_neighbors[1]) : 0;
  int i2 = ld.layers.size() > 2 ? set_size(ld.no_forward_neighbors[2]) : 0;
  jd.iso_crosscheck = jd.iso_minus_w == i1 && jd.iso_minus_w_neighborhood == i2;

  long double lhs = exp2_ext(jd.j_minus_w) + exp2_ext(jd.j_minus_w_neighborhood);
  long double rhs = exp2_ext(jd.j_g) * (1.0L + static_cast<long double>(tol));
  jd.inequality_holds = lhs <= rhs;
  return jd;
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

BoundEntry make_entry(std::string name, double lhs, double bound, bool is_upper,
                      bool structural, double tol) {
  BoundEntry e;
  e.name = std::move(name);
  e.lhs_bits = lhs;
  e.bound_bits = bound;
  e.slack = bound - lhs;
  e.is_upper = is_upper;
  e.numeric_equality = std::abs(e.slack) <= tol;
  e.structural_equality = structural;
  return e;
}

}  // namespace

BoundReport bound_report(const Graph& g, std::string graph_id,
                         std::span<const mpq_class> lambdas,
                         std::span<const std::pair<mpq_class, mpq_class>> bigraph_weights,
                         double tol) {
  BoundReport report;
  report.graph_id = std::move(graph_id);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.log2_count = log2_mpz(count_independent_sets(g));

  bool cbu = is_complete_bipartite_component_union(g);
  bool cliques = is_clique_union(g);

  if (auto d = is_regular(g); d && *d >= 1 && report.n >= 1) {
    report.entries.push_back(make_entry("regular_upper", report.log2_count,
                                        regular_upper_bound(report.n, *d), true,
                                        is_kdd_union(g, *d), tol));
  }
  report.entries.push_back(make_entry("irregular_upper", report.log2_count,
                                      irregular_upper_bound(g), true, cbu, tol));
  report.entries.push_back(
      make_entry("lower", report.log2_count, lower_bound(g), false, cliques, tol));

  IndependencePolynomial poly;
  if (!lambdas.empty()) poly = independence_polynomial(g);
  for (const mpq_class& lambda : lambdas) {
    double p_bits = log2_mpq(evaluate(poly, lambda));
    report.entries.push_back(make_entry("weighted_upper@" + rational_str(lambda), p_bits,
                                        weighted_upper_bound(g, lambda), true, cbu, tol));
    report.entries.push_back(make_entry("weighted_lower@" + rational_str(lambda), p_bits,
                                        weighted_lower_bound(g, lambda), false, cliques, tol));
  }

  if (!bigraph_weights.empty()) {
    if (auto bg = bipartition(g)) {
      BigraphPolynomial grid = bigraph_polynomial(*bg);
      for (const auto& [lambda, mu] : bigraph_weights) {
        double p_bits = log2_mpq(evaluate2(grid, lambda, mu));
        report.entries.push_back(make_entry(
            "bigraph_upper@" + rational_str(lambda) + ";" + rational_str(mu), p_bits,
            bigraph_upper_bound(*bg, lambda, mu), true, cbu, tol));
      }
    }
  }
  return report;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const BoundEntry& e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"lhs_bits", e.lhs_bits},
                       {"bound_bits", e.bound_bits},
                       {"slack", e.slack},
                       {"direction", e.is_upper ? "upper" : "lower"},
                       {"numeric_equality", e.numeric_equality},
                       {"structural_equality", e.structural_equality}});
  }
  return nlohmann::json{{"graph_id", report.graph_id}, {"graph6", report.graph6},
                        {"n", report.n},               {"m", report.m},
                        {"log2_count", report.log2_count}, {"bounds", entries}};
}

std::string bound_report_csv_header() {
  return "graph_id,graph6,n,m,check,result,lhs_bits,rhs_bits,slack_bits\n";
}

std::string to_csv_rows(const BoundReport& report, double tol) {
  std::string out;
  char buf[512];
  for (const BoundEntry& e : report.entries) {
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%s,%s,%.17g,%.17g,%.17g\n",
                  report.graph_id.c_str(), report.graph6.c_str(), report.n, report.m,
                  e.name.c_str(), e.holds(tol) ? "pass" : "fail", e.lhs_bits, e.bound_bits,
                  e.slack);
    out += buf;
  }
  return out;
}

}  // namespace iset
