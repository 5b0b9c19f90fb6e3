#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace th::cli {

enum ExitCode { ok = 0, internal_error = 1, invalid_input = 2, falsified = 3 };

struct CommandOptions {
  std::optional<int> jobs;
  std::optional<std::uint64_t> seed;
  std::optional<double> numeric_tolerance;
  std::vector<int> criteria;  // selftest only; empty means 1..9
};

struct Report {
  nlohmann::json document;
  int exit_code = ok;
  std::vector<std::string> lines;  // human-readable progress (selftest)
};

const std::vector<std::string>& commands();

// `input` is the raw job text (empty for selftest). Never throws; errors become reports
// with the matching exit code.
Report run_command(const std::string& command, const std::string& input, const CommandOptions& opt);

}  // namespace th::cli
