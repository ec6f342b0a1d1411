#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "timeline/core.hpp"

namespace timeline {

struct ColoringTrialPlan {
  int t = 0;
  Count trials = 0;
  uint64_t master_seed = 0;
  double delta = 0.01;
};

// ceil(e^t * ln(1/delta)), at least 1.
Count trials_for(int t, double delta);
ColoringTrialPlan make_plan(int t, uint64_t master_seed, double delta = 0.01);

// Number of colorable elements: temporal vertices for domination kinds
// (index (i-1)*n + (v-1)), temporal edges otherwise (snapshot order, then
// edge order within the snapshot).
Count colorable_elements(const TemporalGraph& g, ProblemKind kind);

// True when some timeline with at most k intervals of length ell per vertex
// hits all `t` colors. On success and with `witness` given, stores one such
// timeline.
bool cc_dp(const TemporalGraph& g, int k, int ell, const std::vector<int>& coloring, int t,
           ProblemKind kind, Timeline* witness = nullptr);

struct CcResult {
  bool decision = false;
  std::optional<Timeline> witness;
  Count trials_run = 0;
};

// Randomized one-sided solver for the partial kinds. Trial j colors with a
// generator seeded by master_seed + j.
CcResult solve_partial_cc(const ProblemInstance& inst, const ColoringTrialPlan& plan);

}  // namespace timeline
