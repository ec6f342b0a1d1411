#pragma once

#include <string>
#include <utility>
#include <vector>

#include "timeline/core.hpp"

namespace timeline {

struct DpOptions {
  double budget = 1e8;               // max profiles in one layer
  double max_logged_cells = 4e8;     // max backpointers kept across all layers
};

struct DpStats {
  std::vector<Count> profiles_per_step;  // table size materialized at step i
  std::vector<int> bag_sizes;
};

struct DpResult {
  Count optimum = 0;
  Timeline witness;
  DpStats stats;
};

struct RemovedVertex {
  Vertex v = 0;
  std::string reason;
};

struct ReductionLedger {
  std::vector<RemovedVertex> removed;
  Count credit = 0;
  Timeline forced_intervals;
};

// Profiles materialized by the bag DP for a bag of the given size.
double profile_count(int k, int ell, int bag_size);

// Removes vertices isolated in every snapshot and, repeatedly, vertices in
// fewer than k(ell+1)+1 bags (after committing intervals that cover all their
// edges). Removed vertices keep their ids but lose their edges.
std::pair<ProblemInstance, ReductionLedger> preprocess_pvc(const TemporalGraph& g, int k, int ell,
                                                           Count t);

// Maximum number of coverable temporal edges. Exact for every input; the
// bag DP runs whenever T > k(ell+1).
DpResult solve_pvc_dp(const TemporalGraph& g, int k, int ell, const DpOptions& opts = {});

// Large-run removal over the k(ell+1) largest bags. Runs its own short-lifetime
// rule first (vertices in fewer than k(ell+1) bags), so vertices whose whole
// lifetime sits inside a run of large bags are the ones removed here.
std::pair<ProblemInstance, ReductionLedger> reduce_large_bags_pvc(const TemporalGraph& g, int k,
                                                                  int ell, Count t);

// Covering pipeline on the original graph: reduction (preprocess_pvc, or
// reduce_large_bags_pvc when `large_bags`), bag DP on the remainder, and the
// combined witness. The optimum refers to the original graph.
DpResult solve_pvc_pipeline(const TemporalGraph& g, int k, int ell, bool large_bags,
                            const DpOptions& opts = {});

// Maximum number of dominated temporal vertices.
DpResult solve_pds_dp(const TemporalGraph& g, int k, int ell, const DpOptions& opts = {});

struct DsDecision {
  bool decision = false;
  std::optional<Timeline> witness;
  std::string reason;
  DpStats stats;
  int forced_vertices = 0;
};

// Full dominating-set decision using the large-bag rule over the ell+1 largest
// bags followed by the bag DP on the remaining vertices.
DsDecision solve_ds_vimw_x(const TemporalGraph& g, int k, int ell, const DpOptions& opts = {});

}  // namespace timeline
