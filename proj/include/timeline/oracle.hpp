#pragma once

#include "timeline/core.hpp"

namespace timeline {

struct OracleOptions {
  double budget = 1e8;  // cap on (sum_{j<=k} C(T, j))^n
};

struct OracleResult {
  Count optimum = 0;
  Timeline witness;
  bool decision = false;
};

// (sum_{j=0..k} C(T, j))^n as a double; saturates to +inf.
double oracle_search_space(int n, int T, int k);

// Exhaustive search over canonical timelines (start-time sets, each interval
// extended to min(a + ell, T)). Throws BudgetExceeded above the guard.
OracleResult oracle_solve(const ProblemInstance& inst, const OracleOptions& opts = {});

}  // namespace timeline
