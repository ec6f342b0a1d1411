#pragma once

#include <optional>

#include "timeline/core.hpp"

namespace timeline {

struct BranchingOptions {
  // Search nodes before giving up with BudgetExceeded; 0 means unlimited.
  Count node_limit = 0;
};

struct BranchingResult {
  bool decision = false;
  std::optional<Timeline> witness;
  Count nodes = 0;
  int max_depth = 0;
};

// Search tree for full dominating set: take the earliest undominated temporal
// vertex (v, i) and try opening (u, i, min(i+ell, T)) for each u in N_{G_i}[v],
// v first, then neighbors by id.
BranchingResult solve_ds_branching(const TemporalGraph& g, int k, int ell,
                                   const BranchingOptions& opts = {});

// Same scheme for full vertex cover over the two endpoints of the earliest
// uncovered temporal edge.
BranchingResult solve_vc_branching(const TemporalGraph& g, int k, int ell,
                                   const BranchingOptions& opts = {});

}  // namespace timeline
