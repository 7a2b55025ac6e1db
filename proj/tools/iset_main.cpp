// Command line front end: exact independent-set counts, extremal bound
// reports, single-check verification, corpus sweeps, entropy-chain audits,
// and BFS layer dumps.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input parse error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "iset/bounds.hpp"
#include "iset/counting.hpp"
#include "iset/entropy.hpp"
#include "iset/graph_io.hpp"
#include "iset/harness.hpp"
#include "iset/swap.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Input is a file path when it names an existing file, otherwise it is
// treated as a literal graph6 string.
iset::Graph load_graph(const std::string& input) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return iset::parse_graph_auto(buffer.str());
  }
  return iset::parse_graph_auto(input);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw iset::DomainError("bad rational: '" + text + "'");
  }
  q.canonicalize();
  if (q <= 0) throw iset::DomainError("weights must be positive");
  return q;
}

std::string pretty_polynomial(const iset::IndependencePolynomial& poly) {
  std::string out;
  for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
    if (poly.coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += poly.coeffs[k].get_str();
    if (k == 1) out += " x";
    if (k > 1) out += " x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

int cmd_count(const std::string& input, bool as_json) {
  iset::Graph g = load_graph(input);
  iset::IndependencePolynomial poly = iset::independence_polynomial(g);
  mpz_class count = iset::count_independent_sets(g);
  if (as_json) {
    nlohmann::ordered_json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["graph6"] = iset::emit_graph6(g);
    out["count"] = count.get_str();
    out["polynomial"] = iset::to_json(poly);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << g.vertex_count() << ", m = " << g.edge_count() << "\n";
    std::cout << "i(G) = " << count.get_str() << "\n";
    std::cout << "P_G(x) = " << pretty_polynomial(poly) << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const std::string& input, const std::vector<std::string>& lambda_args,
               const std::vector<std::string>& mu_args, bool as_json) {
  iset::Graph g = load_graph(input);
  std::vector<mpq_class> lambdas;
  for (const std::string& s : lambda_args) lambdas.push_back(parse_rational(s));
  std::vector<std::pair<mpq_class, mpq_class>> weights;
  for (const std::string& m : mu_args) {
    mpq_class mu = parse_rational(m);
    if (lambdas.empty()) {
      weights.emplace_back(mpq_class(1), mu);
    } else {
      for (const mpq_class& l : lambdas) weights.emplace_back(l, mu);
    }
  }
  iset::BoundReport report =
      iset::bound_report(g, "input", lambdas, weights);
  report.graph6 = iset::emit_graph6(g);
  if (as_json) {
    std::cout << iset::to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "graph: n = " << report.n << ", m = " << report.m
            << ", log2 i(G) = " << report.log2_count << "\n";
  std::printf("%-24s %14s %14s %12s %9s %11s\n", "bound", "lhs_bits", "bound_bits", "slack",
              "numeric=", "structural=");
  for (const iset::BoundEntry& e : report.entries) {
    std::printf("%-24s %14.6f %14.6f %12.6f %9s %11s\n", e.name.c_str(), e.lhs_bits,
                e.bound_bits, e.slack, e.numeric_equality ? "yes" : "no",
                e.structural_equality ? "yes" : "no");
  }
  return kExitOk;
}

int cmd_verify(const std::string& check, const std::string& input, double tol) {
  iset::Graph g = load_graph(input);
  iset::RunConfig config;
  config.tolerance = tol;
  std::vector<iset::CheckOutcome> outcomes = iset::run_check(check, g, config);
  bool failed = false;
  for (const iset::CheckOutcome& o : outcomes) {
    const char* status = o.status == iset::CheckStatus::kPass   ? "pass"
                         : o.status == iset::CheckStatus::kFail ? "FAIL"
                                                                : "skip";
    std::cout << status << "  " << o.check;
    if (o.has_values) {
      std::printf("  lhs=%.9f rhs=%.9f slack=%.3g", o.lhs_bits, o.rhs_bits, o.slack_bits);
    }
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n";
    failed = failed || o.status == iset::CheckStatus::kFail;
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_sweep(iset::RunConfig config) {
  iset::VerificationSummary summary = iset::run_all(config);
  std::printf("%-28s %9s %9s %9s %9s %9s\n", "check", "checked", "passed", "failed", "skipped",
              "equality");
  for (const auto& [name, t] : summary.totals) {
    std::printf("%-28s %9ld %9ld %9ld %9ld %9ld\n", name.c_str(), t.checked, t.passed, t.failed,
                t.skipped, t.equality_cases);
  }
  std::cout << "graphs processed: " << summary.graphs_processed << "\n";
  if (!summary.failures.empty()) {
    std::cout << "failures:\n";
    for (const iset::CheckFailure& f : summary.failures) {
      std::cout << "  " << f.graph_id << " [" << f.graph6 << "] " << f.check << " " << f.detail
                << "\n";
    }
  }
  if (!config.out_dir.empty()) std::cout << "reports written to " << config.out_dir << "\n";
  return summary.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_audit_entropy(const std::string& input, int d, bool as_json) {
  iset::Graph g = load_graph(input);
  auto bg = iset::bipartition(g);
  if (!bg) throw iset::DomainError("entropy audit requires a bipartite graph");
  bool failed = false;
  nlohmann::json audits = nlohmann::json::array();
  for (int orientation = 0; orientation < 2; ++orientation) {
    iset::Bigraph oriented =
        orientation == 0 ? *bg : iset::Bigraph{bg->graph, bg->part_b, bg->part_a};
    iset::ChainAudit audit = iset::audit_kahn_chain(oriented, d);
    failed = failed || !audit.all_pass;
    if (as_json) {
      audits.push_back(iset::to_json(audit));
      continue;
    }
    std::cout << "orientation " << (orientation == 0 ? "(A, B)" : "(B, A)")
              << ": H(I) = " << audit.h_i << " bits, final bound = " << audit.final_bound
              << " bits\n";
    std::printf("  %-22s %14s %14s %12s %s\n", "step", "lhs_bits", "rhs_bits", "slack_bits",
                "pass");
    for (const iset::ChainStep& s : audit.steps) {
      std::printf("  %-22s %14.9f %14.9f %12.3g %s\n", s.name.c_str(), s.lhs_bits, s.rhs_bits,
                  s.slack(), s.pass ? "yes" : "NO");
    }
    std::cout << "  final equality: " << (audit.final_equality ? "yes" : "no") << "\n";
  }
  if (as_json) std::cout << audits.dump(2) << "\n";
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_layers(const std::string& input, int pivot) {
  iset::Graph g = load_graph(input);
  iset::LayerDecomposition ld = iset::layer_decomposition(g, pivot);
  std::cout << "pivot " << ld.pivot << " with degree " << ld.pivot_degree << "\n";
  for (std::size_t k = 0; k < ld.layers.size(); ++k) {
    std::cout << "V_" << k << " =";
    iset::for_each_vertex(ld.layers[k], [&](int v) { std::cout << ' ' << v; });
    std::cout << "  (no forward neighbors:";
    iset::for_each_vertex(ld.no_forward_neighbors[k], [&](int v) { std::cout << ' ' << v; });
    std::cout << ")\n";
    if (k > 0) {
      std::cout << "E_" << k << " (" << ld.layer_edges[k].size() << "):";
      for (auto [u, v] : ld.layer_edges[k]) std::cout << " (" << u << "," << v << ")";
      std::cout << "\n";
    }
  }
  std::cout << "forward degrees:";
  for (int v = 0; v < g.vertex_count(); ++v) std::cout << ' ' << ld.forward_degree[v];
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact independent-set counting and extremal bound verification"};
  app.require_subcommand(1);

  std::string input, check_name, config_path, out_dir, format = "json";
  std::vector<std::string> lambda_args, mu_args;
  bool as_json = false;
  int d = 0, pivot = 0, max_n = -1, jobs = 0;
  double tol = iset::kDefaultTolerance;

  CLI::App* count = app.add_subcommand("count", "print i(G) and the independence polynomial");
  count->add_option("input", input, "graph file or graph6 string")->required();
  count->add_flag("--json", as_json, "JSON output");

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate every applicable bound");
  bounds->add_option("input", input)->required();
  bounds->add_option("--lambda", lambda_args, "fugacity (rational, repeatable)");
  bounds->add_option("--mu", mu_args, "second bigraph weight (rational, repeatable)");
  bounds->add_flag("--json", as_json);

  CLI::App* verify = app.add_subcommand("verify", "run one named check with witness output");
  verify->add_option("check", check_name, "one of the registry names")->required();
  verify->add_option("input", input)->required();
  verify->add_option("--tol", tol, "log2-space tolerance in bits");

  CLI::App* sweep = app.add_subcommand("sweep", "run every check across the corpus");
  sweep->add_option("--max-n", max_n, "exhaustive tier cap (1..7)");
  sweep->add_option("--out", out_dir, "report directory (default: $ISET_OUT_DIR)");
  sweep->add_option("--format", format, "details format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--config", config_path, "key-value config file");
  sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  sweep->add_option("--lambda", lambda_args, "fugacities (rational, repeatable)");
  sweep->add_option("--tol", tol);
  bool no_named = false;
  sweep->add_flag("--no-named", no_named, "skip the named fixture tier");

  CLI::App* audit = app.add_subcommand("audit-entropy", "stepwise entropy chain audit");
  audit->add_option("input", input)->required();
  audit->add_option("-d", d, "regular degree")->required();
  audit->add_flag("--json", as_json);

  CLI::App* layers = app.add_subcommand("layers", "BFS layer decomposition dump");
  layers->add_option("input", input)->required();
  layers->add_option("-w", pivot, "pivot vertex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(input, as_json);
    if (bounds->parsed()) return cmd_bounds(input, lambda_args, mu_args, as_json);
    if (verify->parsed()) return cmd_verify(check_name, input, tol);
    if (sweep->parsed()) {
      iset::RunConfig config;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw iset::Error("cannot read config file " + config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        config = iset::parse_run_config(buffer.str());
      }
      if (max_n >= 0) config.max_exhaustive_n = max_n;
      if (no_named) config.include_named = false;
      if (jobs > 0) config.parallelism = jobs;
      config.tolerance = tol;
      if (!lambda_args.empty()) {
        config.lambdas.clear();
        for (const std::string& s : lambda_args) config.lambdas.push_back(parse_rational(s));
      }
      if (!out_dir.empty()) {
        config.out_dir = out_dir;
      } else if (config.out_dir.empty()) {
        if (const char* env = std::getenv(iset::kOutDirEnvVar)) config.out_dir = env;
      }
      config.format = format == "csv" ? iset::RunConfig::Format::kCsv
                                      : iset::RunConfig::Format::kJson;
      config.validate();
      return cmd_sweep(std::move(config));
    }
    if (audit->parsed()) return cmd_audit_entropy(input, d, as_json);
    if (layers->parsed()) return cmd_layers(input, pivot);
  } catch (const iset::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const iset::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const iset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
