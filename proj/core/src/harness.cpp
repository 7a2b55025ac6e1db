#include "iset/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "iset/counting.hpp"
#include "iset/entropy.hpp"
#include "iset/graph_io.hpp"
#include "iset/swap.hpp"

namespace iset {

namespace {

CheckOutcome skip(std::string name, std::string reason) {
  CheckOutcome o;
  o.check = std::move(name);
  o.status = CheckStatus::kSkip;
  o.detail = std::move(reason);
  return o;
}

CheckOutcome verdict(std::string name, bool ok, std::string fail_detail = {}) {
  CheckOutcome o;
  o.check = std::move(name);
  o.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  if (!ok) o.detail = std::move(fail_detail);
  return o;
}

CheckOutcome bound_verdict(std::string name, double lhs, double rhs, bool is_upper, double tol) {
  CheckOutcome o;
  o.check = std::move(name);
  o.has_values = true;
  o.lhs_bits = lhs;
  o.rhs_bits = rhs;
  o.slack_bits = rhs - lhs;
  o.equality = std::abs(o.slack_bits) <= tol;
  bool ok = is_upper ? o.slack_bits >= -tol : o.slack_bits <= tol;
  o.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  if (!ok) {
    o.detail = nlohmann::json{{"lhs_bits", lhs}, {"rhs_bits", rhs}}.dump();
  }
  return o;
}

nlohmann::json set_json(VertexSet s) { return nlohmann::json(to_vertex_list(s)); }

// --- individual checks ------------------------------------------------------

std::vector<CheckOutcome> check_oracle(const Graph& g, const RunConfig&) {
  if (g.vertex_count() > 16) return {skip("oracle", "n > 16")};
  mpz_class fast = count_independent_sets(g);
  mpz_class oracle = brute_force_count(g);
  return {verdict("oracle", fast == oracle,
                  nlohmann::json{{"recursive", fast.get_str()}, {"brute_force", oracle.get_str()}}
                      .dump())};
}

std::vector<CheckOutcome> check_upper(const Graph& g, const RunConfig& config) {
  double count_bits = log2_mpz(count_independent_sets(g));
  std::vector<CheckOutcome> out;
  out.push_back(
      bound_verdict("upper", count_bits, irregular_upper_bound(g), true, config.tolerance));
  bool numeric = out.back().equality;
  bool structural = is_complete_bipartite_component_union(g);
  out.push_back(verdict("upper-equality", numeric == structural,
                        nlohmann::json{{"numeric", numeric}, {"structural", structural},
                                       {"slack_bits", out.front().slack_bits}}
                            .dump()));
  out.back().equality = numeric && structural;
  return out;
}

std::vector<CheckOutcome> check_lower(const Graph& g, const RunConfig& config) {
  double count_bits = log2_mpz(count_independent_sets(g));
  std::vector<CheckOutcome> out;
  out.push_back(bound_verdict("lower", count_bits, lower_bound(g), false, config.tolerance));
  bool numeric = out.back().equality;
  bool structural = is_clique_union(g);
  out.push_back(verdict("lower-equality", numeric == structural,
                        nlohmann::json{{"numeric", numeric}, {"structural", structural},
                                       {"slack_bits", out.front().slack_bits}}
                            .dump()));
  out.back().equality = numeric && structural;
  return out;
}

std::vector<CheckOutcome> check_weighted(const Graph& g, const RunConfig& config) {
  std::vector<CheckOutcome> out;
  IndependencePolynomial poly = independence_polynomial(g);
  for (const mpq_class& lambda : config.lambdas) {
    double p_bits = log2_mpq(evaluate(poly, lambda));
    std::string suffix = "@" + lambda.get_str();
    out.push_back(bound_verdict("weighted-upper" + suffix, p_bits,
                                weighted_upper_bound(g, lambda), true, config.tolerance));
    out.push_back(bound_verdict("weighted-lower" + suffix, p_bits,
                                weighted_lower_bound(g, lambda), false, config.tolerance));
  }
  return out;
}

std::vector<CheckOutcome> check_bigraph(const Graph& g, const RunConfig& config) {
  auto bg = bipartition(g);
  std::vector<CheckOutcome> out;
  if (!bg) {
    for (const auto& [lambda, mu] : config.weight_grid()) {
      std::string suffix = "@" + lambda.get_str() + ";" + mu.get_str();
      out.push_back(skip("bigraph-upper" + suffix, "not bipartite"));
      out.push_back(skip("bigraph-equality" + suffix, "not bipartite"));
    }
    return out;
  }
  BigraphPolynomial grid = bigraph_polynomial(*bg);
  bool structural = is_complete_bipartite_component_union(g);
  for (const auto& [lambda, mu] : config.weight_grid()) {
    std::string suffix = "@" + lambda.get_str() + ";" + mu.get_str();
    double p_bits = log2_mpq(evaluate2(grid, lambda, mu));
    out.push_back(bound_verdict("bigraph-upper" + suffix, p_bits,
                                bigraph_upper_bound(*bg, lambda, mu), true, config.tolerance));
    bool numeric = out.back().equality;
    out.push_back(verdict("bigraph-equality" + suffix, numeric == structural,
                          nlohmann::json{{"numeric", numeric}, {"structural", structural}}
                              .dump()));
    out.back().equality = numeric && structural;
  }
  return out;
}

std::vector<CheckOutcome> check_swap_bijection(const Graph& g, const RunConfig&) {
  if (g.vertex_count() > 6) {
    return {skip("swap-roundtrip", "n > 6"), skip("swap-image", "n > 6"),
            skip("swap-cardinality", "n > 6")};
  }
  std::vector<VertexSet> sets = independent_sets(g);
  std::vector<SwapPair> image;
  image.reserve(sets.size() * sets.size());
  bool roundtrip_ok = true;
  std::string witness;
  for (VertexSet a : sets) {
    for (VertexSet b : sets) {
      IndependentPair p{a, b};
      SwapPair f = swap_forward(g, p);
      bool ok = is_swap_pair(g, f.first, f.second) &&
                (f.first | f.second) == (a | b) && swap_backward(g, f) == p;
      if (!ok && roundtrip_ok) {
        roundtrip_ok = false;
        witness = nlohmann::json{{"pair", {set_json(a), set_json(b)}},
                                 {"image", {set_json(f.first), set_json(f.second)}}}
                      .dump();
      }
      image.push_back(f);
    }
  }
  std::vector<SwapPair> all_swap = enumerate_swap_pairs(g);
  for (const SwapPair& q : all_swap) {
    IndependentPair p = swap_backward(g, q);
    bool ok = is_independent_set(g, p.first) && is_independent_set(g, p.second) &&
              swap_forward(g, p) == q;
    if (!ok && roundtrip_ok) {
      roundtrip_ok = false;
      witness = nlohmann::json{{"swap_pair", {set_json(q.first), set_json(q.second)}}}.dump();
    }
  }

  auto key = [](const SwapPair& p) { return std::pair(p.first, p.second); };
  std::sort(image.begin(), image.end(),
            [&](const SwapPair& x, const SwapPair& y) { return key(x) < key(y); });
  bool image_ok = std::adjacent_find(image.begin(), image.end()) == image.end() &&
                  image == all_swap;  // enumeration order is already sorted

  mpz_class count(static_cast<long>(sets.size()));
  mpz_class swap_count(static_cast<long>(all_swap.size()));
  bool card_ok = swap_count == count * count;

  return {verdict("swap-roundtrip", roundtrip_ok, witness),
          verdict("swap-image", image_ok, "forward image differs from the swap-pair family"),
          verdict("swap-cardinality", card_ok,
                  nlohmann::json{{"swap_pairs", swap_count.get_str()},
                                 {"count_squared", mpz_class(count * count).get_str()}}
                      .dump())};
}

std::vector<CheckOutcome> check_double_cover(const Graph& g, const RunConfig&) {
  if (2 * g.vertex_count() > 30) return {skip("double-cover", "2n > 30")};
  DoubleCoverReport report = verify_double_cover_inequality(g);
  nlohmann::json detail{{"count", report.count.get_str()},
                        {"cover_count", report.cover_count.get_str()},
                        {"cross_pairs", report.cross_pairs.get_str()}};
  if (report.swap_pairs) detail["swap_pairs"] = report.swap_pairs->get_str();
  return {verdict("double-cover", report.pass, detail.dump())};
}

std::vector<CheckOutcome> check_j_inequality(const Graph& g, const RunConfig& config) {
  auto skip_both = [](const char* reason) -> std::vector<CheckOutcome> {
    return {skip("j-inequality", reason), skip("j-iso-layers", reason)};
  };
  if (g.vertex_count() < 2) return skip_both("n < 2");
  if (!is_connected(g)) return skip_both("disconnected");
  if (!is_bipartite(g)) return skip_both("not bipartite");
  if (isolated_count(g) != 0) return skip_both("isolated vertices");
  JDecomposition jd = verify_j_inequality(g, config.tolerance);
  CheckOutcome main;
  main.check = "j-inequality";
  main.status = jd.inequality_holds ? CheckStatus::kPass : CheckStatus::kFail;
  main.has_values = true;
  main.lhs_bits = static_cast<double>(
      std::log2(exp2_ext(jd.j_minus_w) + exp2_ext(jd.j_minus_w_neighborhood)));
  main.rhs_bits = jd.j_g;
  main.slack_bits = main.rhs_bits - main.lhs_bits;
  main.equality = std::abs(main.slack_bits) <= config.tolerance;
  if (!jd.inequality_holds) {
    main.detail = nlohmann::json{{"pivot", jd.pivot},
                                 {"j_g", jd.j_g},
                                 {"j_minus_w", jd.j_minus_w},
                                 {"j_minus_w_neighborhood", jd.j_minus_w_neighborhood}}
                      .dump();
  }
  CheckOutcome iso = verdict("j-iso-layers", jd.iso_crosscheck,
                             nlohmann::json{{"iso_minus_w", jd.iso_minus_w},
                                            {"iso_minus_w_neighborhood",
                                             jd.iso_minus_w_neighborhood}}
                                 .dump());
  return {main, iso};
}

bool kahn_applicable(const Graph& g, int& d_out) {
  auto d = is_regular(g);
  if (!d || *d < 1 || !is_bipartite(g) || g.vertex_count() > 14) return false;
  d_out = *d;
  return true;
}

std::vector<CheckOutcome> check_kahn_audit(const Graph& g, const RunConfig& config) {
  int d = 0;
  if (!kahn_applicable(g, d)) {
    return {skip("kahn-audit", "needs a regular bipartite graph with n <= 14"),
            skip("kahn-h-identity", "see kahn-audit"),
            skip("kahn-final-equality", "see kahn-audit")};
  }
  Bigraph bg = *bipartition(g);
  ChainAudit forward = audit_kahn_chain(bg, d, config.tolerance);
  ChainAudit swapped =
      audit_kahn_chain(Bigraph{bg.graph, bg.part_b, bg.part_a}, d, config.tolerance);

  auto failed_step = [](const ChainAudit& a) -> std::string {
    if (!a.parts_determine_events) return "parts-determine-events";
    for (const ChainStep& s : a.steps)
      if (!s.pass) return s.name;
    return {};
  };
  bool steps_ok = forward.all_pass && swapped.all_pass;
  std::vector<CheckOutcome> out;
  CheckOutcome main;
  main.check = "kahn-audit";
  main.status = steps_ok ? CheckStatus::kPass : CheckStatus::kFail;
  main.has_values = true;
  main.lhs_bits = forward.h_i;
  main.rhs_bits = forward.final_bound;
  main.slack_bits = main.rhs_bits - main.lhs_bits;
  main.equality = forward.final_equality;
  if (!steps_ok) {
    main.detail = nlohmann::json{{"failed_step", failed_step(forward.all_pass ? swapped : forward)}}
                      .dump();
  }
  out.push_back(std::move(main));

  double identity_err = std::max(std::abs(forward.h_i - forward.log2_count),
                                 std::abs(swapped.h_i - swapped.log2_count));
  out.push_back(verdict("kahn-h-identity", identity_err <= 1e-12,
                        nlohmann::json{{"error_bits", identity_err}}.dump()));

  bool structural = is_kdd_union(g, d);
  bool numeric = forward.final_equality && swapped.final_equality;
  out.push_back(verdict("kahn-final-equality", numeric == structural,
                        nlohmann::json{{"numeric", numeric}, {"structural", structural}}.dump()));
  out.back().equality = numeric && structural;
  return out;
}

std::vector<CheckOutcome> check_shearer(const Graph& g, const RunConfig& config) {
  int d = 0;
  if (!kahn_applicable(g, d)) {
    return {skip("shearer", "needs a regular bipartite graph with n <= 14")};
  }
  Bigraph bg = *bipartition(g);
  std::vector<VertexSet> sets = independent_sets(g);
  bool ok = true;
  for (VertexSet summed : {bg.part_a, bg.part_b}) {
    VertexSet ground = g.vertices() & ~summed;
    std::map<VertexSet, long> groups;
    for (VertexSet s : sets) ++groups[s & ground];
    std::vector<WeightedSubset> dist;
    dist.reserve(groups.size());
    for (const auto& [mask, c] : groups) {
      mpq_class p(c, static_cast<long>(sets.size()));
      p.canonicalize();
      dist.push_back(WeightedSubset{mask, std::move(p)});
    }
    std::vector<VertexSet> cover;
    for_each_vertex(summed, [&](int v) { cover.push_back(g.neighbors(v)); });
    ok = ok && verify_shearer(dist, cover, d, ground, config.tolerance);
  }
  return {verdict("shearer", ok, "shearer inequality violated")};
}

struct CheckDef {
  const char* name;
  std::vector<CheckOutcome> (*fn)(const Graph&, const RunConfig&);
};

constexpr CheckDef kChecks[] = {
    {"oracle", check_oracle},
    {"upper", check_upper},
    {"lower", check_lower},
    {"weighted", check_weighted},
    {"bigraph", check_bigraph},
    {"swap-bijection", check_swap_bijection},
    {"double-cover", check_double_cover},
    {"j-inequality", check_j_inequality},
    {"kahn-audit", check_kahn_audit},
    {"shearer", check_shearer},
};

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const CheckDef& c : kChecks) names.emplace_back(c.name);
  return names;
}

std::vector<CheckOutcome> run_check(std::string_view name, const Graph& g,
                                    const RunConfig& config) {
  for (const CheckDef& c : kChecks) {
    if (name == c.name) return c.fn(g, config);
  }
  throw DomainError("unknown check: " + std::string(name));
}

std::vector<CheckOutcome> run_all_checks(const Graph& g, const RunConfig& config) {
  std::vector<CheckOutcome> all;
  for (const CheckDef& c : kChecks) {
    // A check that throws is recorded as a failure; the sweep never aborts.
    try {
      auto outcomes = c.fn(g, config);
      all.insert(all.end(), std::make_move_iterator(outcomes.begin()),
                 std::make_move_iterator(outcomes.end()));
    } catch (const std::exception& e) {
      CheckOutcome crashed;
      crashed.check = c.name;
      crashed.status = CheckStatus::kFail;
      crashed.detail = e.what();
      all.push_back(std::move(crashed));
    }
  }
  return all;
}

long VerificationSummary::total_failed() const {
  long failed = 0;
  for (const auto& [name, t] : totals) failed += t.failed;
  return failed;
}

namespace {

struct GraphRecord {
  std::string id;
  std::string graph6;
  int n = 0;
  int m = 0;
  std::vector<CheckOutcome> outcomes;
};

GraphRecord evaluate_entry(const CorpusEntry& entry, const RunConfig& config) {
  GraphRecord record;
  record.id = entry.id;
  record.graph6 = emit_graph6(entry.graph);
  record.n = entry.graph.vertex_count();
  record.m = entry.graph.edge_count();
  record.outcomes = run_all_checks(entry.graph, config);
  return record;
}

class ReportWriter {
 public:
  ReportWriter(const RunConfig& config) : config_(config) {
    if (config.out_dir.empty()) return;
    std::filesystem::create_directories(config.out_dir);
    auto path = std::filesystem::path(config.out_dir);
    details_.open(path / (config.format == RunConfig::Format::kCsv ? "details.csv"
                                                                   : "details.json"));
    if (!details_) throw Error("cannot open report file in " + config.out_dir);
    if (config.format == RunConfig::Format::kCsv) {
      details_ << bound_report_csv_header();
    } else {
      details_ << "[\n";
    }
  }

  void add(const GraphRecord& record) {
    if (!details_.is_open()) return;
    if (config_.format == RunConfig::Format::kCsv) {
      char buf[512];
      for (const CheckOutcome& o : record.outcomes) {
        const char* result = o.status == CheckStatus::kPass   ? "pass"
                             : o.status == CheckStatus::kFail ? "fail"
                                                              : "skip";
        if (o.has_values) {
          std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%s,%s,%.17g,%.17g,%.17g\n",
                        record.id.c_str(), record.graph6.c_str(), record.n, record.m,
                        o.check.c_str(), result, o.lhs_bits, o.rhs_bits, o.slack_bits);
        } else {
          std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%s,%s,,,\n", record.id.c_str(),
                        record.graph6.c_str(), record.n, record.m, o.check.c_str(), result);
        }
        details_ << buf;
      }
    } else {
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const CheckOutcome& o : record.outcomes) {
        nlohmann::ordered_json row;
        row["check"] = o.check;
        row["result"] = o.status == CheckStatus::kPass   ? "pass"
                        : o.status == CheckStatus::kFail ? "fail"
                                                         : "skip";
        if (o.has_values) {
          row["lhs_bits"] = o.lhs_bits;
          row["rhs_bits"] = o.rhs_bits;
          row["slack_bits"] = o.slack_bits;
          row["equality"] = o.equality;
        }
        if (!o.detail.empty() && o.status != CheckStatus::kPass) row["detail"] = o.detail;
        checks.push_back(std::move(row));
      }
      nlohmann::ordered_json obj;
      obj["graph_id"] = record.id;
      obj["graph6"] = record.graph6;
      obj["n"] = record.n;
      obj["m"] = record.m;
      obj["checks"] = std::move(checks);
      details_ << (first_ ? "" : ",\n") << obj.dump();
      first_ = false;
    }
  }

  void finish() {
    if (!details_.is_open()) return;
    if (config_.format == RunConfig::Format::kJson) details_ << "\n]\n";
    details_.close();
  }

 private:
  const RunConfig& config_;
  std::ofstream details_;
  bool first_ = true;
};

void reduce_record(VerificationSummary& summary, const GraphRecord& record) {
  ++summary.graphs_processed;
  for (const CheckOutcome& o : record.outcomes) {
    CheckTotals& t = summary.totals[o.check];
    switch (o.status) {
      case CheckStatus::kPass:
        ++t.checked;
        ++t.passed;
        if (o.equality) ++t.equality_cases;
        break;
      case CheckStatus::kFail:
        ++t.checked;
        ++t.failed;
        summary.failures.push_back(
            CheckFailure{record.id, record.graph6, o.check, o.detail});
        break;
      case CheckStatus::kSkip:
        ++t.skipped;
        break;
    }
  }
}

// Runs fn(i) for i in [0, count) on `width` threads; results land in a
// caller-provided slot per index, so ordering is up to the reducer.
void parallel_chunk(std::uint64_t count, int width, const std::function<void(std::uint64_t)>& fn) {
  if (width <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> workers;
  int spawn = static_cast<int>(std::min<std::uint64_t>(width, count));
  workers.reserve(spawn);
  for (int t = 0; t < spawn; ++t) {
    workers.emplace_back([&] {
      while (true) {
        std::uint64_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (std::thread& w : workers) w.join();
}

}  // namespace

VerificationSummary run_all(const RunConfig& config) {
  config.validate();
  int width = config.parallelism > 0
                  ? config.parallelism
                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  VerificationSummary summary;
  ReportWriter writer(config);

  auto process_tier = [&](std::uint64_t count,
                          const std::function<CorpusEntry(std::uint64_t)>& make) {
    constexpr std::uint64_t kChunk = 2048;
    std::vector<GraphRecord> records;
    for (std::uint64_t base = 0; base < count; base += kChunk) {
      std::uint64_t size = std::min(kChunk, count - base);
      records.assign(size, GraphRecord{});
      parallel_chunk(size, width, [&](std::uint64_t k) {
        records[k] = evaluate_entry(make(base + k), config);
      });
      for (const GraphRecord& record : records) {
        reduce_record(summary, record);
        writer.add(record);
      }
    }
  };

  for (int n = 1; n <= config.max_exhaustive_n; ++n) {
    process_tier(labeled_graph_count(n), [n](std::uint64_t mask) {
      return CorpusEntry{exhaustive_id(n, mask), labeled_graph_from_mask(n, mask),
                         Provenance::kExhaustive};
    });
  }
  if (config.include_named) {
    std::vector<CorpusEntry> named = named_corpus();
    process_tier(named.size(), [&named](std::uint64_t k) { return named[k]; });
  }

  writer.finish();
  if (!config.out_dir.empty()) {
    std::ofstream out(std::filesystem::path(config.out_dir) / "summary.json");
    if (!out) throw Error("cannot open summary.json in " + config.out_dir);
    out << summary_json(summary, config).dump(2) << "\n";
  }
  return summary;
}

nlohmann::ordered_json summary_json(const VerificationSummary& summary, const RunConfig& config,
                                    bool include_timestamp) {
  nlohmann::ordered_json header;
  header["schema_version"] = kReportSchemaVersion;
  if (include_timestamp) {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&tt));
    header["timestamp"] = buf;
  }
  nlohmann::ordered_json cfg;
  cfg["max_exhaustive_n"] = config.max_exhaustive_n;
  cfg["include_named"] = config.include_named;
  nlohmann::ordered_json lambdas = nlohmann::ordered_json::array();
  for (const mpq_class& l : config.lambdas) lambdas.push_back(l.get_str());
  cfg["lambdas"] = std::move(lambdas);
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const mpq_class& w : config.bigraph_weights) weights.push_back(w.get_str());
  cfg["bigraph_weights"] = std::move(weights);
  cfg["tolerance"] = config.tolerance;
  cfg["format"] = config.format == RunConfig::Format::kCsv ? "csv" : "json";
  header["config"] = std::move(cfg);

  nlohmann::ordered_json totals;
  for (const auto& [name, t] : summary.totals) {
    totals[name] = {{"checked", t.checked},
                    {"passed", t.passed},
                    {"failed", t.failed},
                    {"skipped", t.skipped},
                    {"equality_cases", t.equality_cases}};
  }
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CheckFailure& f : summary.failures) {
    failures.push_back({{"graph_id", f.graph_id},
                        {"graph6", f.graph6},
                        {"check", f.check},
                        {"detail", f.detail}});
  }
  return nlohmann::ordered_json{{"header", std::move(header)},
                                {"graphs_processed", summary.graphs_processed},
                                {"totals", std::move(totals)},
                                {"failures", std::move(failures)}};
}

}  // namespace iset
