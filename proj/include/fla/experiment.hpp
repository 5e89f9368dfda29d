#pragma once

// Batch reproduction of the state-count results: builds every model for a
// list of family instances, converts and minimizes, checks each model
// against its membership predicate, and records one row per assertion.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fla {

struct ExperimentInstance {
  std::string family;  // MF, L, J, H or E
  int n = 0;
  std::uint64_t ell = 1;
};

struct ExperimentConfig {
  std::vector<ExperimentInstance> instances;
  int l_test = 12;                  // words up to this length are compared
  std::uint64_t budget = 200'000;   // cap on minimal-DFA sizes
};

/// Same JSON conventions as machine files:
///   {"format-version": 1, "kind": "experiment", "l-test": 12,
///    "budget": 200000, "instances": [{"family": "L", "n": 3, "ell": 2}]}
/// "l-test" and "budget" are optional; "ell" is optional for MF and E and
/// defaults to F(n) for H. Throws ParseError.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::string& path);

enum class Outcome { pass, fail, skip };

struct ReportRow {
  std::string family;
  int n = 0;
  std::uint64_t ell = 1;
  std::string model;
  std::optional<std::uint64_t> built;
  std::optional<std::uint64_t> minimized;
  std::string formula;
  std::optional<std::uint64_t> formula_value;
  Outcome outcome = Outcome::fail;
  std::string note;  // why a row failed or was skipped
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  bool all_pass() const;
};

ExperimentReport experiment_bounds(const ExperimentConfig& config);

enum class ReportFormat { text, csv };

/// Throws std::invalid_argument for names other than "text" and "csv".
ReportFormat parse_report_format(std::string_view name);

/// Columns: family, n, ell, model, built-states, minimized-states, formula,
/// formula-value, pass.
std::string report_emit(const ExperimentReport& report, ReportFormat format);

}  // namespace fla
