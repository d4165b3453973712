#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "frankl/search.hpp"

namespace frankl::cli {

enum class Format { kText, kJson, kCsv };

struct CommandConfig {
  /// f, g, lp, bound, certify, verify, table, witness, or check-paper.
  std::string command;
  std::optional<int> n;
  std::optional<long> a;
  std::optional<std::size_t> m;
  Format format = Format::kText;
  SearchBudget budget;
  std::uint64_t seed = 1;
  std::string claim = "all";
  /// table: f-aa, bound, fr.
  std::string what;
  std::optional<long> from;
  std::optional<long> to;
  /// Drops node counts and timings so repeated runs are byte-identical.
  bool stable = false;
  /// check-paper: include the stretch targets.
  bool stretch = false;
};

enum ExitCode : int { kOk = 0, kBadArguments = 1, kBudgetExhausted = 2, kViolation = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

CommandResult run(const CommandConfig& config);

}  // namespace frankl::cli
