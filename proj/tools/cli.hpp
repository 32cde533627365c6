#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ppdiamond/oracles.hpp"
#include "ppdiamond/partition.hpp"

namespace ppd::cli {

enum class Command { params, count, table, quasipoly, polypart, waves, verify };
enum class Method { automatic, enumerate, series, shifts, quasipoly, compressed };
enum class Format { text, json, csv };

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kBudgetExceeded = 3 };

struct RunConfig {
  Command command = Command::count;
  int k = 1;
  std::optional<std::int64_t> n;
  std::int64_t min_n = 0;
  std::optional<std::int64_t> max_n;
  Method method = Method::automatic;
  Format format = Format::text;
  std::int64_t node_budget = kDefaultNodeBudget;
  std::int64_t tuple_budget = kDefaultTupleBudget;
  int jobs = 1;
  bool witnesses = false;
};

std::string method_name(Method m);

/// Executes one command, writing results to out and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11), applies DIAMOND_BUDGET, and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppd::cli
