#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "timeline/core.hpp"

namespace timeline {

enum class Algorithm { Auto, Oracle, Dp, Vimwx, Kernel, Branch, Cc, Ilp0 };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);

struct SolveSettings {
  uint64_t seed = 0;
  double delta = 0.01;
  double dp_budget = 1e8;
  double oracle_budget = 1e8;
  std::string lp_out;  // ilp0 only; empty means no export
};

struct SolveOutcome {
  bool decision = false;
  std::optional<Count> optimum;
  std::string algorithm;  // what actually ran, e.g. "kernel+branch"
  std::string detail;     // case label or solver reason, may be empty
  std::optional<Timeline> witness;
};

// Throws std::invalid_argument for an unavailable algorithm/kind pairing,
// BudgetExceeded when the chosen solver would exceed its budget, and
// std::runtime_error when `auto` finds no solver within budget.
SolveOutcome solve_instance(const ProblemInstance& inst, Algorithm algo, const SolveSettings& settings);

// Entry point of the `timeline` tool. args excludes the program name.
// Returns the process exit code: 0 yes, 1 no, 2 error (for solve/verify).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace timeline
