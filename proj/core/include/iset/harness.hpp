#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "iset/bounds.hpp"
#include "iset/corpus.hpp"
#include "iset/graph.hpp"

namespace iset {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckOutcome {
  std::string check;  // registry name, possibly with a "@weights" suffix
  CheckStatus status = CheckStatus::kSkip;
  bool has_values = false;
  double lhs_bits = 0;
  double rhs_bits = 0;
  double slack_bits = 0;
  bool equality = false;
  std::string detail;  // skip reason or failure witness (JSON text)
};

/// Registry names, in fixed execution order.
std::vector<std::string> check_names();

/// Runs one named verification against a single graph with the configured
/// weights and tolerance. DomainError on an unknown name.
std::vector<CheckOutcome> run_check(std::string_view name, const Graph& g,
                                    const RunConfig& config);

/// All registered checks against a single graph.
std::vector<CheckOutcome> run_all_checks(const Graph& g, const RunConfig& config);

struct CheckTotals {
  long checked = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  long equality_cases = 0;
};

struct CheckFailure {
  std::string graph_id;
  std::string graph6;
  std::string check;
  std::string detail;
};

struct VerificationSummary {
  std::map<std::string, CheckTotals> totals;
  std::vector<CheckFailure> failures;
  long graphs_processed = 0;

  long total_failed() const;
  bool all_passed() const { return total_failed() == 0; }
};

/// Sweeps every configured corpus tier, runs the full registry with
/// self-skipping preconditions, and (when out_dir is set) writes
/// summary.json plus details.json or details.csv. The reduction is a
/// deterministic id-ordered pass regardless of parallelism.
VerificationSummary run_all(const RunConfig& config);

nlohmann::ordered_json summary_json(const VerificationSummary& summary, const RunConfig& config,
                                    bool include_timestamp = true);

inline constexpr int kReportSchemaVersion = 1;

/// Name of the environment variable supplying a default output directory.
inline constexpr const char* kOutDirEnvVar = "ISET_OUT_DIR";

}  // namespace iset
