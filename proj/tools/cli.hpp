#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chungfeller/stepset.hpp"

namespace cf::cli {

enum class Command { coeffs, table, enumerate, verify, identities };
enum class OutputFormat { csv, json };

struct CliConfig {
  Command command = Command::coeffs;
  StepSetSpec spec = dyck_spec();
  int n_max = 5;
  std::optional<std::string> table_kind;  // dyck | motzkin, also the verify kind
  OutputFormat output_format = OutputFormat::csv;
  bool override_large_n = false;

  std::string series = "F";          // coeffs: F G P D D-closed M M-sum H
  std::string source = "series";     // coeffs/table: series | brute
  std::string what = "paths";        // enumerate: paths | nonnegative | pointed
  std::optional<int> k;              // enumerate end height, H exponent
  std::string statistic = "nonpositive";  // verify --kind scan
  bool verbose = false;
};

inline constexpr int kLargeN = 12;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

// Runs a parsed configuration. Output goes to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs it; returns the process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cf::cli
