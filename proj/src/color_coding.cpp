#include "timeline/color_coding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace timeline {

namespace {

constexpr int kMaxColors = 24;

struct Window {
  Step a, b;
};

std::vector<Window> windows(int T, int ell) {
  if (T < ell + 1) return {{1, T}};
  std::vector<Window> w;
  for (Step a = 1; a + ell <= T; ++a) w.push_back({a, a + ell});
  return w;
}

// hit[v][w]: colors reached when v is active through window w.
std::vector<std::vector<uint32_t>> window_colors(const TemporalGraph& g, const std::vector<Window>& ws,
                                                 const std::vector<int>& coloring, ProblemKind kind) {
  const int n = g.num_vertices(), T = g.lifetime();
  // per_step[v][i]: colors reached when v is active at step i.
  std::vector<std::vector<uint32_t>> per_step(n + 1, std::vector<uint32_t>(T + 1, 0));
  if (is_domination(kind)) {
    for (Step i = 1; i <= T; ++i)
      for (Vertex v = 1; v <= n; ++v) {
        const uint32_t own = 1u << coloring[size_t(i - 1) * n + (v - 1)];
        per_step[v][i] |= own;
        for (Vertex u : g.neighbors(i, v)) per_step[u][i] |= own;
      }
  } else {
    size_t idx = 0;
    for (Step i = 1; i <= T; ++i)
      for (const auto& e : g.snapshot(i)) {
        const uint32_t c = 1u << coloring[idx++];
        per_step[e.u][i] |= c;
        per_step[e.v][i] |= c;
      }
  }
  std::vector<std::vector<uint32_t>> hit(n + 1, std::vector<uint32_t>(ws.size(), 0));
  for (Vertex v = 1; v <= n; ++v)
    for (size_t w = 0; w < ws.size(); ++w)
      for (Step i = ws[w].a; i <= ws[w].b; ++i) hit[v][w] |= per_step[v][i];
  return hit;
}

}  // namespace

Count trials_for(int t, double delta) {
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("color coding: delta must be in (0,1)");
  return std::max<Count>(1, static_cast<Count>(std::ceil(std::exp(double(t)) * std::log(1.0 / delta))));
}

ColoringTrialPlan make_plan(int t, uint64_t master_seed, double delta) {
  return {t, trials_for(t, delta), master_seed, delta};
}

Count colorable_elements(const TemporalGraph& g, ProblemKind kind) {
  return is_domination(kind) ? g.total_temporal_vertices() : g.total_temporal_edges();
}

bool cc_dp(const TemporalGraph& g, int k, int ell, const std::vector<int>& coloring, int t,
           ProblemKind kind, Timeline* witness) {
  if (t < 0 || t > kMaxColors) throw std::invalid_argument("color coding: color count out of range");
  if (static_cast<Count>(coloring.size()) != colorable_elements(g, kind))
    throw std::invalid_argument("color coding: coloring size does not match the instance");
  for (int c : coloring)
    if (c < 0 || c >= std::max(t, 1)) throw std::invalid_argument("color coding: color out of range");
  if (t == 0) {
    if (witness) *witness = Timeline{};
    return true;
  }

  const int n = g.num_vertices(), T = g.lifetime();
  const auto ws = windows(T, ell);
  const auto hit = window_colors(g, ws, coloring, kind);
  const uint32_t full = (1u << t) - 1;
  const size_t subsets = size_t(1) << t;

  // layer[j][r][S]: colors S can be hit by vertices 1..j where vertex j has
  // r intervals placed so far (r = 0 means vertex j-1 is finished).
  std::vector<std::vector<std::vector<char>>> layer(n + 1, std::vector<std::vector<char>>(k + 1));
  layer[0][k].assign(subsets, 0);
  layer[0][k][0] = 1;
  for (Vertex j = 1; j <= n; ++j) {
    layer[j][0] = layer[j - 1][k];
    for (int r = 1; r <= k; ++r) {
      auto& cur = layer[j][r];
      const auto& prev = layer[j][r - 1];
      cur.assign(subsets, 0);
      for (uint32_t s = 0; s < subsets; ++s)
        for (uint32_t c : hit[j]) {
          if (prev[s & ~c]) {
            cur[s] = 1;
            break;
          }
        }
    }
  }
  if (!layer[n][k][full]) return false;

  if (witness) {
    Timeline tl;
    uint32_t s = full;
    for (Vertex j = n; j >= 1; --j)
      for (int r = k; r >= 1; --r)
        for (size_t w = 0; w < ws.size(); ++w) {
          if (!layer[j][r - 1][s & ~hit[j][w]]) continue;
          if (s & hit[j][w]) tl.add(j, ws[w].a, ws[w].b);
          s &= ~hit[j][w];
          break;
        }
    tl.normalize();
    *witness = std::move(tl);
  }
  return true;
}

CcResult solve_partial_cc(const ProblemInstance& inst, const ColoringTrialPlan& plan) {
  if (!is_partial(inst.kind))
    throw std::invalid_argument("color coding: needs a partial problem kind");
  const auto& g = inst.graph;
  CcResult res;
  if (inst.t <= 0) {
    res.decision = true;
    res.witness = Timeline{};
    return res;
  }
  const Count universe = inst.universe_size();
  if (Count(g.lifetime()) < Count(inst.k) * (inst.ell + 1)) {
    // Every vertex can stay active throughout.
    res.decision = universe >= inst.t;
    if (res.decision) res.witness = tiling_timeline(g.num_vertices(), g.lifetime(), inst.k, inst.ell);
    return res;
  }
  if (inst.t > universe) return res;
  if (inst.t > kMaxColors) throw BudgetExceeded("color coding: t above the supported color count");
  const int t = static_cast<int>(inst.t);

  std::vector<int> coloring(universe);
  for (Count trial = 0; trial < plan.trials; ++trial) {
    std::mt19937_64 rng(plan.master_seed + static_cast<uint64_t>(trial));
    for (auto& c : coloring) c = static_cast<int>(rng() % static_cast<uint64_t>(t));
    Timeline tl;
    res.trials_run = trial + 1;
    if (cc_dp(g, inst.k, inst.ell, coloring, t, inst.kind, &tl)) {
      res.decision = true;
      res.witness = std::move(tl);
      return res;
    }
  }
  return res;
}

}  // namespace timeline
