#include "timeline/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace timeline {

namespace {

class Brancher {
 public:
  Brancher(const TemporalGraph& g, int k, int ell, bool domination, const BranchingOptions& opts)
      : g_(g), k_(k), ell_(ell), domination_(domination), opts_(opts) {
    const int n = g.num_vertices(), T = g.lifetime();
    active_.assign(T + 1, std::vector<int>(n + 1, 0));
    used_.assign(n + 1, 0);
  }

  BranchingResult run() {
    BranchingResult res;
    res.decision = search(0, 1);
    res.nodes = nodes_;
    res.max_depth = max_depth_;
    if (res.decision) {
      Timeline tl;
      tl.intervals = chosen_;
      tl.normalize();
      res.witness = std::move(tl);
    }
    return res;
  }

 private:
  bool dominated(Step i, Vertex v) const {
    if (active_[i][v]) return true;
    for (Vertex u : g_.neighbors(i, v))
      if (active_[i][u]) return true;
    return false;
  }

  // Earliest failing element at or after `from` (everything earlier is
  // already satisfied): its step and the vertices that may fix it.
  bool find_failure(Step from, Step& at, std::vector<Vertex>& options) const {
    for (Step i = from; i <= g_.lifetime(); ++i) {
      if (domination_) {
        for (Vertex v = 1; v <= g_.num_vertices(); ++v) {
          if (dominated(i, v)) continue;
          at = i;
          options = {v};
          for (Vertex u : g_.neighbors(i, v)) options.push_back(u);
          return true;
        }
      } else {
        for (const auto& e : g_.snapshot(i)) {
          if (active_[i][e.u] || active_[i][e.v]) continue;
          at = i;
          options = {e.u, e.v};
          return true;
        }
      }
    }
    return false;
  }

  void toggle(Vertex u, Step a, Step b, int delta) {
    for (Step x = a; x <= b; ++x) active_[x][u] += delta;
    used_[u] += delta;
  }

  bool search(int depth, Step from) {
    ++nodes_;
    max_depth_ = std::max(max_depth_, depth);
    if (opts_.node_limit > 0 && nodes_ > opts_.node_limit)
      throw BudgetExceeded("branching: node limit reached");
    Step i = 0;
    std::vector<Vertex> options;
    if (!find_failure(from, i, options)) return true;
    const Step b = std::min(i + ell_, g_.lifetime());
    for (Vertex u : options) {
      if (used_[u] == k_) continue;  // one more interval would exceed k
      toggle(u, i, b, +1);
      chosen_.push_back({u, i, b});
      if (search(depth + 1, i)) return true;
      chosen_.pop_back();
      toggle(u, i, b, -1);
    }
    return false;
  }

  const TemporalGraph& g_;
  int k_, ell_;
  bool domination_;
  BranchingOptions opts_;
  std::vector<std::vector<int>> active_;
  std::vector<int> used_;
  std::vector<ActivityInterval> chosen_;
  Count nodes_ = 0;
  int max_depth_ = 0;
};

void check(int k, int ell) {
  if (k < 1 || ell < 0) throw std::invalid_argument("branching: need k >= 1 and ell >= 0");
}

}  // namespace

BranchingResult solve_ds_branching(const TemporalGraph& g, int k, int ell,
                                   const BranchingOptions& opts) {
  check(k, ell);
  return Brancher(g, k, ell, true, opts).run();
}

BranchingResult solve_vc_branching(const TemporalGraph& g, int k, int ell,
                                   const BranchingOptions& opts) {
  check(k, ell);
  return Brancher(g, k, ell, false, opts).run();
}

}  // namespace timeline
