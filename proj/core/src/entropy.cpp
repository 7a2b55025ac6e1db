#include "iset/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "iset/bounds.hpp"
#include "iset/counting.hpp"

namespace iset {

namespace {

// p * log2(1/p) with exact rational p; 0 log(1/0) := 0.
double entropy_term(const mpq_class& p) {
  if (p == 0) return 0.0;
  return -p.get_d() * log2_mpq(p);
}

double entropy_of_counts(const std::vector<mpq_class>& counts, const mpq_class& total) {
  KahanSum h;
  for (const mpq_class& c : counts) {
    if (c == 0) continue;
    mpq_class p(c / total);
    p.canonicalize();
    h.add(entropy_term(p));
  }
  return h.value();
}

}  // namespace

double entropy_bits(std::span<const mpq_class> probs) {
  mpq_class total = 0;
  for (const mpq_class& p : probs) {
    if (p < 0) throw DomainError("negative probability");
    total += p;
  }
  if (total != 1) throw DomainError("probabilities must sum to exactly 1");
  KahanSum h;
  for (const mpq_class& p : probs) h.add(entropy_term(p));
  return h.value();
}

double conditional_entropy_bits(const std::vector<std::vector<mpq_class>>& joint) {
  mpq_class total = 0;
  for (const auto& row : joint) {
    for (const mpq_class& p : row) {
      if (p < 0) throw DomainError("negative probability");
      total += p;
    }
  }
  if (total != 1) throw DomainError("joint distribution must sum to exactly 1");
  // H(X|Y) = sum_y p(y) sum_x p(x|y) log2(1/p(x|y))
  KahanSum h;
  for (const auto& row : joint) {
    mpq_class py = 0;
    for (const mpq_class& p : row) py += p;
    if (py == 0) continue;
    for (const mpq_class& p : row) {
      if (p == 0) continue;
      mpq_class cond(p / py);
      cond.canonicalize();
      h.add(p.get_d() * -log2_mpq(cond));
    }
  }
  return h.value();
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary entropy needs x in [0, 1]");
  double h = 0;
  if (x > 0) h -= x * std::log2(x);
  if (x < 1) h -= (1 - x) * std::log2(1 - x);
  return h;
}

KahnMaximizer kahn_maximizer(int d) {
  if (d < 1) throw DomainError("kahn_maximizer requires d >= 1");
  mpz_class two_d = mpz_class(1) << d;
  mpz_class denom = (mpz_class(1) << (d + 1)) - 1;
  mpq_class x0(two_d, denom);
  x0.canonicalize();
  KahnMaximizer result;
  result.x0 = x0.get_d();
  result.max_value = log2_mpz(denom) - log2_mpz(two_d - 1);
  return result;
}

ISetDistribution make_iset_distribution(const Graph& g) {
  if (g.vertex_count() > 25) {
    throw CapacityError("independent-set distribution capped at 25 vertices");
  }
  ISetDistribution dist;
  dist.graph = g;
  dist.sets = independent_sets(g);
  dist.point_probability = mpq_class(1, static_cast<unsigned long>(dist.sets.size()));
  return dist;
}

VertexMarginals marginals(const Graph& g) {
  if (g.vertex_count() > 25) throw CapacityError("marginals capped at 25 vertices");
  int n = g.vertex_count();
  std::vector<long> in_set(static_cast<std::size_t>(n), 0);
  std::vector<long> clear(static_cast<std::size_t>(n), 0);
  long total = 0;
  for_each_independent_set(g, [&](VertexSet s) {
    ++total;
    for (int v = 0; v < n; ++v) {
      if (contains(s, v)) ++in_set[static_cast<std::size_t>(v)];
      if ((s & g.neighbors(v)) == 0) ++clear[static_cast<std::size_t>(v)];
    }
  });
  VertexMarginals m;
  for (int v = 0; v < n; ++v) {
    mpq_class p(in_set[static_cast<std::size_t>(v)], total);
    p.canonicalize();
    mpq_class q(clear[static_cast<std::size_t>(v)], total);
    q.canonicalize();
    m.in_set.push_back(p);
    m.neighborhood_clear.push_back(q);
  }
  return m;
}

namespace {

ChainStep make_step(std::string name, double lhs, double rhs, bool is_equality, bool pass) {
  return ChainStep{std::move(name), lhs, rhs, is_equality, pass};
}

// Entropy of the distribution of s & mask over a list of sets, each weighted
// 1/total.
double restriction_entropy(const std::vector<VertexSet>& sets, VertexSet mask,
                           const mpq_class& total) {
  std::map<VertexSet, long> groups;
  for (VertexSet s : sets) ++groups[s & mask];
  std::vector<mpq_class> counts;
  counts.reserve(groups.size());
  for (const auto& [key, c] : groups) counts.emplace_back(c);
  return entropy_of_counts(counts, total);
}

}  // namespace

ChainAudit audit_kahn_chain(const Bigraph& bg, int d, double tol) {
  const Graph& g = bg.graph;
  int n = g.vertex_count();
  if (n > 22) throw CapacityError("entropy audit capped at 22 vertices");
  if (!is_valid(bg)) throw DomainError("invalid bigraph");
  auto reg = is_regular(g);
  if (!reg || *reg != d || d < 1) {
    throw DomainError("entropy audit requires a d-regular bipartite graph with d >= 1");
  }

  const VertexSet side_e = bg.part_a;  // summed part
  const VertexSet side_o = bg.part_b;  // restricted part
  ChainAudit audit;
  audit.d = d;

  // N(v) ⊆ O for v ∈ E: this is what lets I∩O determine the events Q_v.
  audit.parts_determine_events = true;
  for_each_vertex(side_e, [&](int v) {
    audit.parts_determine_events =
        audit.parts_determine_events && (g.neighbors(v) & ~side_o) == 0;
  });

  std::vector<VertexSet> sets = independent_sets(g);
  const long total_count = static_cast<long>(sets.size());
  const mpq_class total(total_count);
  mpz_class count_z(total_count);
  audit.log2_count = log2_mpz(count_z);

  {  // H(I) from the uniform distribution itself
    KahanSum h;
    mpq_class p(1, static_cast<unsigned long>(total_count));
    for (long k = 0; k < total_count; ++k) h.add(entropy_term(p));
    audit.h_i = h.value();
  }

  // Group the sets by their O-restriction.
  std::map<VertexSet, std::vector<VertexSet>> by_o;
  for (VertexSet s : sets) by_o[s & side_o].push_back(s);

  double h_io;  // H(I ∩ O)
  {
    std::vector<mpq_class> counts;
    counts.reserve(by_o.size());
    for (const auto& [key, members] : by_o) counts.emplace_back(members.size());
    h_io = entropy_of_counts(counts, total);
  }

  double h_ie_given_io;  // H(I ∩ E | I ∩ O): uniform over each group
  {
    KahanSum h;
    for (const auto& [key, members] : by_o) {
      mpq_class py(static_cast<long>(members.size()), total_count);
      py.canonicalize();
      h.add(py.get_d() * log2_mpz(mpz_class(static_cast<long>(members.size()))));
    }
    h_ie_given_io = h.value();
  }

  std::vector<int> summed = to_vertex_list(side_e);

  // Per-vertex quantities for each v in the summed part.
  struct PerVertex {
    mpq_class q;                  // Pr(I ∩ N(v) = ∅)
    double h_indicator_given_io;  // H(1_v | I ∩ O)
    double h_indicator_given_q;   // H(1_v | 1_{Q_v})
    double h_xv;                  // H(X_v)
    double h_xv_given_q;          // H(X_v | 1_{Q_v})
    double h_xv_given_not_q;      // H(X_v | not Q_v)
    double h2_q;                  // H(q(v))
  };
  std::vector<PerVertex> per;
  per.reserve(summed.size());

  for (int v : summed) {
    PerVertex pv;
    VertexSet nbhd = g.neighbors(v);

    long clear_count = 0, in_count_given_clear = 0;
    for (VertexSet s : sets) {
      if ((s & nbhd) == 0) {
        ++clear_count;
        if (contains(s, v)) ++in_count_given_clear;
      }
    }
    pv.q = mpq_class(clear_count, total_count);
    pv.q.canonicalize();
    pv.h2_q = binary_entropy(pv.q.get_d());

    {  // H(1_v | I ∩ O) = sum_y p(y) H(k_vy / c_y)
      KahanSum h;
      for (const auto& [key, members] : by_o) {
        long with_v = 0;
        for (VertexSet s : members) with_v += contains(s, v) ? 1 : 0;
        if (with_v == 0 || with_v == static_cast<long>(members.size())) continue;
        mpq_class py(static_cast<long>(members.size()), total_count);
        py.canonicalize();
        mpq_class ratio(with_v, static_cast<long>(members.size()));
        ratio.canonicalize();
        h.add(py.get_d() *
              (entropy_term(ratio) + entropy_term(mpq_class(1 - ratio))));
      }
      pv.h_indicator_given_io = h.value();
    }

    {  // H(1_v | 1_{Q_v}) = q H(p(v in I | Q_v)) + (1-q) H(p(v in I | not Q_v))
      double h = 0;
      if (clear_count > 0) {
        mpq_class ratio(in_count_given_clear, clear_count);
        ratio.canonicalize();
        h += pv.q.get_d() * binary_entropy(ratio.get_d());
      }
      long not_clear = total_count - clear_count;
      if (not_clear > 0) {
        // v in I forces Q_v, so this conditional is deterministic 0; keep the
        // honest computation anyway.
        long in_count = 0;
        for (VertexSet s : sets) in_count += contains(s, v) ? 1 : 0;
        mpq_class ratio(in_count - in_count_given_clear, not_clear);
        ratio.canonicalize();
        h += (1 - pv.q.get_d()) * binary_entropy(ratio.get_d());
      }
      pv.h_indicator_given_q = h;
    }

    pv.h_xv = restriction_entropy(sets, nbhd, total);

    {  // Conditional on not Q_v: distribution of the nonempty X_v values.
      std::map<VertexSet, long> nonempty;
      for (VertexSet s : sets) {
        VertexSet x = s & nbhd;
        if (x) ++nonempty[x];
      }
      long not_clear = total_count - clear_count;
      if (not_clear > 0) {
        std::vector<mpq_class> counts;
        for (const auto& [key, c] : nonempty) counts.emplace_back(c);
        pv.h_xv_given_not_q = entropy_of_counts(counts, mpq_class(not_clear));
      } else {
        pv.h_xv_given_not_q = 0;
      }
      // Under Q_v the value is deterministically ∅.
      pv.h_xv_given_q = (1 - pv.q.get_d()) * pv.h_xv_given_not_q;
    }

    per.push_back(std::move(pv));
  }

  const double log_2d_minus_1 = log2_mpz((mpz_class(1) << d) - 1);
  const double log_ratio = d - log_2d_minus_1;  // log2(2^d / (2^d - 1))
  audit.final_bound = regular_upper_bound(n, d);

  auto sum_over = [&](auto&& f) {
    KahanSum s;
    for (const PerVertex& pv : per) s.add(f(pv));
    return s.value();
  };

  double sum_h_ind_io = sum_over([](const PerVertex& pv) { return pv.h_indicator_given_io; });
  double sum_h_ind_q = sum_over([](const PerVertex& pv) { return pv.h_indicator_given_q; });
  double sum_q = sum_over([](const PerVertex& pv) { return pv.q.get_d(); });
  double sum_h_xv = sum_over([](const PerVertex& pv) { return pv.h_xv; });
  double sum_split = sum_over([](const PerVertex& pv) { return pv.h2_q + pv.h_xv_given_q; });
  double sum_range = sum_over([](const PerVertex& pv) { return pv.h_xv_given_not_q; });
  double sum_chain2 = sum_over([&](const PerVertex& pv) {
    return pv.h2_q + (1 - pv.q.get_d()) * log_2d_minus_1;
  });
  double sum_maximand = sum_over(
      [&](const PerVertex& pv) { return pv.h2_q + pv.q.get_d() * log_ratio; });

  bool per_ok_conditioning = true, per_ok_identity = true, per_ok_split = true,
       per_ok_range = true, per_ok_max = true;
  double max_value = kahn_maximizer(d).max_value;
  for (const PerVertex& pv : per) {
    per_ok_conditioning =
        per_ok_conditioning && pv.h_indicator_given_io <= pv.h_indicator_given_q + tol;
    per_ok_identity =
        per_ok_identity && std::abs(pv.h_indicator_given_q - pv.q.get_d()) <= tol;
    per_ok_split = per_ok_split && std::abs(pv.h_xv - (pv.h2_q + pv.h_xv_given_q)) <= tol;
    per_ok_range = per_ok_range && pv.h_xv_given_not_q <= log_2d_minus_1 + tol;
    per_ok_max =
        per_ok_max && pv.h2_q + pv.q.get_d() * log_ratio <= max_value + tol;
  }

  auto& steps = audit.steps;
  steps.push_back(make_step("decompose", audit.h_i, h_io + h_ie_given_io, true,
                            std::abs(audit.h_i - (h_io + h_ie_given_io)) <= tol));
  steps.push_back(make_step("subadditivity", h_ie_given_io, sum_h_ind_io, false,
                            h_ie_given_io <= sum_h_ind_io + tol));
  steps.push_back(
      make_step("drop-conditioning", sum_h_ind_io, sum_h_ind_q, false, per_ok_conditioning));
  steps.push_back(make_step("indicator-identity", sum_h_ind_q, sum_q, true, per_ok_identity));
  steps.push_back(make_step("shearer", h_io, sum_h_xv / d, false, h_io <= sum_h_xv / d + tol));
  steps.push_back(make_step("qv-split", sum_h_xv, sum_split, true, per_ok_split));
  steps.push_back(make_step("range-bound", sum_range,
                            static_cast<double>(summed.size()) * log_2d_minus_1, false,
                            per_ok_range));
  steps.push_back(make_step("chain-upper", audit.h_i, h_io + sum_q, false,
                            audit.h_i <= h_io + sum_q + tol));
  steps.push_back(make_step("chain-shearer", h_io, sum_chain2 / d, false,
                            h_io <= sum_chain2 / d + tol));
  // recombination: (1/d) sum [H(q) + (1-q) log(2^d-1)] + sum q
  //              = (n/2d) log(2^d-1) + (1/d) sum [H(q) + q log(2^d/(2^d-1))]
  double combined_lhs = sum_chain2 / d + sum_q;
  double combined_rhs =
      static_cast<double>(summed.size()) / d * log_2d_minus_1 + sum_maximand / d;
  steps.push_back(make_step("combine", combined_lhs, combined_rhs, true,
                            std::abs(combined_lhs - combined_rhs) <= tol));
  steps.push_back(make_step("pointwise-maximizer", sum_maximand,
                            static_cast<double>(summed.size()) * max_value, false, per_ok_max));
  steps.push_back(make_step("final", audit.h_i, audit.final_bound, false,
                            audit.h_i <= audit.final_bound + tol));

  audit.all_pass = audit.parts_determine_events;
  for (const ChainStep& s : steps) audit.all_pass = audit.all_pass && s.pass;
  audit.final_equality = std::abs(audit.final_bound - audit.h_i) <= tol;
  return audit;
}

bool verify_shearer(std::span<const WeightedSubset> distribution,
                    std::span<const VertexSet> cover, int multiplicity, VertexSet ground,
                    double tol) {
  if (multiplicity < 1) throw DomainError("cover multiplicity must be >= 1");
  mpq_class total = 0;
  for (const WeightedSubset& w : distribution) {
    if (w.probability < 0) throw DomainError("negative probability");
    if (w.mask & ~ground) throw DomainError("subset outside the ground set");
    total += w.probability;
  }
  if (total != 1) throw DomainError("probabilities must sum to exactly 1");

  bool covered = true;
  for_each_vertex(ground, [&](int v) {
    int times = 0;
    for (VertexSet a : cover) times += contains(a, v) ? 1 : 0;
    covered = covered && times >= multiplicity;
  });
  if (!covered) {
    throw DomainError("every ground element must lie in at least m cover members");
  }

  auto grouped_entropy = [&](VertexSet mask) {
    std::map<VertexSet, mpq_class> groups;
    for (const WeightedSubset& w : distribution) groups[w.mask & mask] += w.probability;
    KahanSum h;
    for (const auto& [key, p] : groups) h.add(entropy_term(p));
    return h.value();
  };

  double lhs = grouped_entropy(ground);
  KahanSum rhs;
  for (VertexSet a : cover) rhs.add(grouped_entropy(a));
  return lhs <= rhs.value() / multiplicity + tol;
}

nlohmann::json to_json(const ChainAudit& audit) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ChainStep& s : audit.steps) {
    steps.push_back({{"name", s.name},
                     {"lhs_bits", s.lhs_bits},
                     {"rhs_bits", s.rhs_bits},
                     {"slack_bits", s.slack()},
                     {"pass", s.pass}});
  }
  return nlohmann::json{{"d", audit.d},
                        {"h_i", audit.h_i},
                        {"log2_count", audit.log2_count},
                        {"final_bound", audit.final_bound},
                        {"parts_determine_events", audit.parts_determine_events},
                        {"steps", steps},
                        {"all_pass", audit.all_pass},
                        {"final_equality", audit.final_equality}};
}

}  // namespace iset
