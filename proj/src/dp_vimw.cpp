#include "timeline/dp_vimw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "timeline/params.hpp"

namespace timeline {

namespace {

constexpr Count NEG = std::numeric_limits<Count>::min() / 4;

struct ProfileEntry {
  Step i = 0;
  int curr = 0;
  int pos = 0;
};

using GainFn = std::function<std::vector<Count>(Step, const std::vector<Vertex>&)>;
using CreditFn = std::function<Count(Step, int curr, int pos)>;

struct BagDpProblem {
  int k = 1, ell = 0, T = 1;
  std::vector<std::vector<Vertex>> bags;  // bags[i-1], sorted ids
  GainFn gains;                           // per active mask over bag positions
  CreditFn enter;                         // vertex first appears at step i
  CreditFn leave;                         // vertex left after step i-1
};

struct BagDpSolution {
  Count value = NEG;
  std::map<Vertex, std::vector<ProfileEntry>> profiles;
  DpStats stats;
};

// One layer of the table: digit j of a cell index belongs to vars[j], with
// digit = curr * (ell + 2) + pos. `org` keeps, for every cell, the cell of the
// previous layer it was derived from.
struct Table {
  std::vector<Vertex> vars;
  std::vector<Count> val;
  std::vector<uint32_t> org;
};

class BagDp {
 public:
  BagDp(const BagDpProblem& p, const DpOptions& opts) : p_(p), W_(p.ell + 2), R_((p.k + 1) * W_) {
    double logged = 0;
    int widest = 0;
    for (const auto& bag : p_.bags) {
      const double cells = profile_count(p_.k, p_.ell, static_cast<int>(bag.size()));
      if (cells > opts.budget)
        throw BudgetExceeded("bag DP: " + std::to_string(bag.size()) +
                             "-vertex bag exceeds the profile budget");
      logged += cells;
      widest = std::max(widest, static_cast<int>(bag.size()));
    }
    if (logged > opts.max_logged_cells)
      throw BudgetExceeded("bag DP: backpointer log exceeds its budget");
    pow_.assign(widest + 2, 1);
    for (size_t j = 1; j < pow_.size(); ++j) pow_[j] = pow_[j - 1] * R_;
  }

  BagDpSolution run() {
    const int T = p_.T;
    BagDpSolution sol;
    layer_vars_.assign(T + 1, {});
    origins_.assign(T + 1, {});

    Table t{{}, {0}, {0}};
    for (Step i = 1; i <= T; ++i) {
      const auto& bag = p_.bags[i - 1];
      if (i > 1) {
        for (size_t j = 0; j < t.vars.size();) {
          if (std::binary_search(bag.begin(), bag.end(), t.vars[j])) {
            ++j;
            continue;
          }
          eliminate(t, static_cast<int>(j), leave_weights(i));
        }
        for (size_t j = 0; j < t.vars.size(); ++j) transform(t, static_cast<int>(j), i);
      }
      for (Vertex v : bag)
        if (!std::binary_search(t.vars.begin(), t.vars.end(), v)) introduce(t, v, enter_weights(i));
      add_gains(t, i);

      sol.stats.profiles_per_step.push_back(static_cast<Count>(t.val.size()));
      sol.stats.bag_sizes.push_back(static_cast<int>(bag.size()));
      layer_vars_[i] = t.vars;
      origins_[i] = std::move(t.org);
      t.org.resize(t.val.size());
      std::iota(t.org.begin(), t.org.end(), 0u);
    }

    // Read-off: every vertex of the last bag has used all k intervals, none
    // of them cut short.
    size_t best = t.val.size();
    for (size_t c = 0; c < t.val.size(); ++c) {
      if (t.val[c] == NEG) continue;
      bool ok = true;
      for (size_t j = 0; j < t.vars.size() && ok; ++j) {
        const int d = digit(c, static_cast<int>(j));
        ok = d / W_ == p_.k && (d % W_ == 0 || d % W_ == p_.ell + 1);
      }
      if (ok && (best == t.val.size() || t.val[c] > t.val[best])) best = c;
    }
    if (best == t.val.size()) return sol;
    sol.value = t.val[best];

    size_t cell = best;
    for (Step i = T; i >= 1; --i) {
      const auto& vars = layer_vars_[i];
      for (size_t j = 0; j < vars.size(); ++j) {
        const int d = digit(cell, static_cast<int>(j));
        sol.profiles[vars[j]].push_back({i, d / W_, d % W_});
      }
      if (i > 1) cell = origins_[i][cell];
    }
    for (auto& [v, seq] : sol.profiles) std::reverse(seq.begin(), seq.end());
    return sol;
  }

 private:
  int digit(size_t cell, int j) const { return static_cast<int>((cell / pow_[j]) % R_); }

  bool valid(int d, Step i) const {
    const int c = d / W_, pos = d % W_;
    return !(c == 0 && pos > 0) && pos <= i;
  }

  std::vector<Count> enter_weights(Step i) const {
    std::vector<Count> w(R_, NEG);
    for (int d = 0; d < R_; ++d)
      if (valid(d, i)) w[d] = p_.enter(i, d / W_, d % W_);
    return w;
  }

  std::vector<Count> leave_weights(Step i) const {
    std::vector<Count> w(R_, NEG);
    for (int d = 0; d < R_; ++d)
      if (valid(d, i - 1)) w[d] = p_.leave(i, d / W_, d % W_);
    return w;
  }

  // Predecessor digits allowed for each digit at step i (vertex present at
  // both i-1 and i).
  std::vector<std::vector<int>> compatible(Step i) const {
    const int k = p_.k, ell = p_.ell;
    const int ended = std::min(i - 1, ell + 1);
    std::vector<std::vector<int>> prev(R_);
    for (int c = 0; c <= k; ++c)
      for (int pos = 0; pos <= ell + 1; ++pos) {
        const int d = c * W_ + pos;
        if (!valid(d, i)) continue;
        auto& out = prev[d];
        auto push = [&](int pc, int pp) {
          if (pc == 0 && pp > 0) return;
          out.push_back(pc * W_ + pp);
        };
        if (c == 0) {
          push(0, 0);  // no interval started yet stays so
        } else if (pos >= 2) {
          for (int pc = 1; pc <= c; ++pc) push(pc, pos - 1);
        } else if (pos == 1 && c == 1) {
          push(0, 0);
        } else {
          // pos == 1 with c > 1 opens interval c; pos == 0 is idle.
          const int top = pos == 1 ? c - 1 : c;
          for (int pc = 0; pc <= top; ++pc) {
            push(pc, ended);
            if (ended != 0) push(pc, 0);
          }
        }
      }
    return prev;
  }

  void eliminate(Table& t, int j, const std::vector<Count>& w) {
    const size_t stride = pow_[j], n = t.val.size() / R_;
    std::vector<Count> val(n, NEG);
    std::vector<uint32_t> org(n, 0);
    for (size_t c = 0; c < n; ++c) {
      const size_t base = (c / stride) * stride * R_ + c % stride;
      for (int d = 0; d < R_; ++d) {
        const size_t o = base + d * stride;
        if (w[d] == NEG || t.val[o] == NEG) continue;
        const Count cand = t.val[o] + w[d];
        if (cand > val[c]) {
          val[c] = cand;
          org[c] = t.org[o];
        }
      }
    }
    t.vars.erase(t.vars.begin() + j);
    t.val = std::move(val);
    t.org = std::move(org);
  }

  void transform(Table& t, int j, Step i) {
    const auto prev = compatible(i);
    const size_t stride = pow_[j], n = t.val.size();
    std::vector<Count> val(n, NEG);
    std::vector<uint32_t> org(n, 0);
    for (size_t c = 0; c < n; ++c) {
      const int d = static_cast<int>((c / stride) % R_);
      const size_t base = c - d * stride;
      for (int pd : prev[d]) {
        const size_t o = base + pd * stride;
        if (t.val[o] > val[c]) {
          val[c] = t.val[o];
          org[c] = t.org[o];
        }
      }
    }
    t.val = std::move(val);
    t.org = std::move(org);
  }

  void introduce(Table& t, Vertex v, const std::vector<Count>& w) {
    const int j = static_cast<int>(std::lower_bound(t.vars.begin(), t.vars.end(), v) - t.vars.begin());
    const size_t stride = pow_[j], n = t.val.size() * R_;
    std::vector<Count> val(n, NEG);
    std::vector<uint32_t> org(n, 0);
    for (size_t c = 0; c < n; ++c) {
      const int d = static_cast<int>((c / stride) % R_);
      const size_t o = (c / (stride * R_)) * stride + c % stride;
      org[c] = t.org[o];
      if (w[d] != NEG && t.val[o] != NEG) val[c] = t.val[o] + w[d];
    }
    t.vars.insert(t.vars.begin() + j, v);
    t.val = std::move(val);
    t.org = std::move(org);
  }

  void add_gains(Table& t, Step i) {
    const auto gain = p_.gains(i, t.vars);
    const int b = static_cast<int>(t.vars.size());
    for (size_t c = 0; c < t.val.size(); ++c) {
      if (t.val[c] == NEG) continue;
      uint32_t mask = 0;
      size_t rest = c;
      for (int j = 0; j < b; ++j, rest /= R_)
        if (rest % R_ % W_ > 0) mask |= 1u << j;
      t.val[c] = gain[mask] == NEG ? NEG : t.val[c] + gain[mask];
    }
  }

  const BagDpProblem& p_;
  int W_, R_;
  std::vector<size_t> pow_;
  std::vector<std::vector<Vertex>> layer_vars_;
  std::vector<std::vector<uint32_t>> origins_;
};

// Intervals realizing a vertex's profile sequence. With `outside`, the
// intervals before its first and after its last bag are laid out as well.
void emit_profile(Timeline& tl, Vertex v, const std::vector<ProfileEntry>& seq, int k, int ell,
                  int T, bool outside) {
  auto full = [&](long long a) { tl.add(v, static_cast<Step>(a), static_cast<Step>(std::min<long long>(a + ell, T))); };
  const auto& first = seq.front();
  const long long f = first.i;
  const long long start = first.pos > 0 ? f - first.pos + 1 : f;
  if (outside) {
    const int before = first.pos > 0 ? first.curr - 1 : first.curr;
    for (int j = 0; j < before; ++j) {
      const long long s = 1 + static_cast<long long>(j) * (ell + 1);
      if (s >= start) break;
      full(s);
    }
  }
  if (first.pos > 0) full(start);
  for (size_t x = 1; x < seq.size(); ++x)
    if (seq[x].pos == 1) full(seq[x].i);
  const auto& last = seq.back();
  if (outside && last.i < T) {
    const long long s0 = last.pos > 0 ? last.i - last.pos + 1 + ell + 1 : last.i + 1;
    for (int j = 0; j < k - last.curr; ++j) {
      const long long s = s0 + static_cast<long long>(j) * (ell + 1);
      if (s > T) break;
      full(s);
    }
  }
}

std::vector<std::vector<Vertex>> bags_without(const TemporalGraph& g,
                                              const std::vector<char>& excluded) {
  auto seq = vertex_membership_sequence(g);
  std::vector<std::vector<Vertex>> bags(g.lifetime());
  for (size_t i = 0; i < seq.bags.size(); ++i)
    for (int v : seq.bags[i])
      if (excluded.empty() || !excluded[v]) bags[i].push_back(v);
  return bags;
}

GainFn covering_gains(const TemporalGraph& g) {
  return [&g](Step i, const std::vector<Vertex>& bag) {
    const int b = static_cast<int>(bag.size());
    std::vector<uint32_t> edge_masks;
    for (const auto& e : g.snapshot(i)) {
      uint32_t m = 0;
      for (int j = 0; j < b; ++j)
        if (bag[j] == e.u || bag[j] == e.v) m |= 1u << j;
      edge_masks.push_back(m);
    }
    std::vector<Count> gain(size_t(1) << b, 0);
    for (uint32_t s = 0; s < gain.size(); ++s)
      for (uint32_t m : edge_masks) gain[s] += (m & s) != 0;
    return gain;
  };
}

// |N[S ∪ fixed_i]| over G_i for every S within the bag; NEG when some vertex of
// must_i stays undominated.
GainFn domination_gains(const TemporalGraph& g, std::function<std::vector<Vertex>(Step)> fixed,
                        std::function<std::vector<Vertex>(Step)> must) {
  return [&g, fixed, must](Step i, const std::vector<Vertex>& bag) {
    const int b = static_cast<int>(bag.size());
    // stamp -1: dominated by the fixed actives; stamp s+1: dominated under mask s.
    std::vector<int> stamp(g.num_vertices() + 1, 0);
    Count base = 0;
    const auto fixed_i = fixed ? fixed(i) : std::vector<Vertex>{};
    for (Vertex a : fixed_i) {
      if (stamp[a] != -1) stamp[a] = -1, ++base;
      for (Vertex u : g.neighbors(i, a))
        if (stamp[u] != -1) stamp[u] = -1, ++base;
    }
    const auto must_i = must ? must(i) : std::vector<Vertex>{};
    std::vector<Count> gain(size_t(1) << b, 0);
    for (uint32_t s = 0; s < gain.size(); ++s) {
      const int tag = static_cast<int>(s) + 1;
      Count add = 0;
      for (int j = 0; j < b; ++j) {
        if (!(s >> j & 1)) continue;
        const Vertex v = bag[j];
        if (stamp[v] != -1 && stamp[v] != tag) stamp[v] = tag, ++add;
        for (Vertex u : g.neighbors(i, v))
          if (stamp[u] != -1 && stamp[u] != tag) stamp[u] = tag, ++add;
      }
      bool ok = true;
      for (Vertex m : must_i) ok = ok && (stamp[m] == -1 || stamp[m] == tag);
      gain[s] = ok ? base + add : NEG;
    }
    return gain;
  };
}

CreditFn no_credit() {
  return [](Step, int, int) -> Count { return 0; };
}

CreditFn entering_credit(int ell) {
  return [ell](Step i, int c, int p) -> Count {
    const Count past = i - 1;
    if (p == 0) return std::min<Count>(Count(c) * (ell + 1), past);
    return std::min<Count>(Count(c - 1) * (ell + 1) + p - 1, past);
  };
}

CreditFn leaving_credit(int k, int ell, int T) {
  return [k, ell, T](Step i, int c, int p) -> Count {
    const Count future = T - i + 1;
    if (p == 0) return std::min<Count>(Count(k - c) * (ell + 1), future);
    return std::min<Count>(Count(k - c) * (ell + 1) + ell + 1 - p, future);
  };
}

// Removes `v`'s edges from `snaps`, returning how many temporal edges went.
Count strip_vertex(std::vector<std::vector<Edge>>& snaps, Vertex v) {
  Count gone = 0;
  for (auto& es : snaps) {
    const auto before = es.size();
    std::erase_if(es, [v](const Edge& e) { return e.u == v || e.v == v; });
    gone += static_cast<Count>(before - es.size());
  }
  return gone;
}

Lifespan lifespan_of(const std::vector<std::vector<Edge>>& snaps, Vertex v) {
  Lifespan life;
  for (size_t s = 0; s < snaps.size(); ++s)
    for (const auto& e : snaps[s])
      if (e.u == v || e.v == v) {
        if (life.empty()) life.first = static_cast<Step>(s + 1);
        life.last = static_cast<Step>(s + 1);
        break;
      }
  return life;
}

// Intervals from the first non-isolated step onward, covering the whole
// lifespan (which must fit in k intervals).
void commit_span(ReductionLedger& led, Vertex v, Lifespan life, int ell, int T) {
  for (long long a = life.first; a <= life.last; a += ell + 1)
    led.forced_intervals.add(v, static_cast<Step>(a),
                             static_cast<Step>(std::min<long long>(a + ell, T)));
}

// Removes isolated vertices and, to a fixpoint, vertices whose lifespan is
// shorter than `threshold` steps.
void strip_short(std::vector<std::vector<Edge>>& snaps, int n, int ell, int threshold,
                 std::vector<char>& removed, ReductionLedger& led) {
  const int T = static_cast<int>(snaps.size());
  for (bool changed = true; changed;) {
    changed = false;
    TemporalGraph cur(n, snaps);
    const auto life = vertex_lifespans(cur);
    for (Vertex v = 1; v <= n; ++v) {
      if (removed[v]) continue;
      if (life[v].empty()) {
        removed[v] = 1;
        led.removed.push_back({v, "isolated"});
        continue;
      }
      if (life[v].length() >= threshold) continue;
      const auto fresh = lifespan_of(snaps, v);
      removed[v] = 1;
      led.removed.push_back({v, fresh.empty() ? "isolated" : "short-lifetime"});
      if (fresh.empty()) continue;
      commit_span(led, v, fresh, ell, T);
      led.credit += strip_vertex(snaps, v);
      changed = true;
    }
  }
}

ProblemInstance reduced_instance(int n, std::vector<std::vector<Edge>> snaps, int k, int ell,
                                 Count t, Count credit) {
  ProblemInstance inst;
  inst.graph = TemporalGraph(n, std::move(snaps));
  inst.kind = ProblemKind::PVC;
  inst.k = k;
  inst.ell = ell;
  inst.t = std::max<Count>(0, t - credit);
  return inst;
}

void check_params(int k, int ell) {
  if (k < 1 || ell < 0) throw std::invalid_argument("need k >= 1 and ell >= 0");
}

bool fits_everything(int T, int k, int ell) { return Count(T) <= Count(k) * (ell + 1); }

}  // namespace

double profile_count(int k, int ell, int bag_size) {
  return std::pow(double(k + 1) * (ell + 2), bag_size);
}

std::pair<ProblemInstance, ReductionLedger> preprocess_pvc(const TemporalGraph& g, int k, int ell,
                                                           Count t) {
  check_params(k, ell);
  auto snaps = g.snapshots();
  std::vector<char> removed(g.num_vertices() + 1, 0);
  ReductionLedger led;
  const Count threshold = Count(k) * (ell + 1) + 1;
  strip_short(snaps, g.num_vertices(), ell, static_cast<int>(std::min<Count>(threshold, g.lifetime() + 1)), removed, led);
  auto inst = reduced_instance(g.num_vertices(), std::move(snaps), k, ell, t, led.credit);
  led.forced_intervals.normalize();
  return {std::move(inst), std::move(led)};
}

std::pair<ProblemInstance, ReductionLedger> reduce_large_bags_pvc(const TemporalGraph& g, int k,
                                                                  int ell, Count t) {
  check_params(k, ell);
  const int n = g.num_vertices(), T = g.lifetime();
  auto snaps = g.snapshots();
  std::vector<char> removed(n + 1, 0);
  ReductionLedger led;
  const Count window = Count(k) * (ell + 1);
  strip_short(snaps, n, ell, static_cast<int>(std::min<Count>(window, T + 1)), removed, led);

  TemporalGraph cur(n, snaps);
  const auto life = vertex_lifespans(cur);
  const auto large = largest_bags(vertex_membership_sequence(cur).sizes(),
                                  static_cast<int>(std::min<Count>(window, T)));
  for (int i = 0; i < T;) {
    if (!large[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < T && large[j + 1]) ++j;
    // Steps i+1..j+1 form a maximal run of large bags.
    for (Vertex v = 1; v <= n; ++v) {
      if (removed[v] || life[v].empty()) continue;
      if (life[v].first < i + 1 || life[v].last > j + 1) continue;
      removed[v] = 1;
      led.removed.push_back({v, "large-run"});
      commit_span(led, v, life[v], ell, T);
      led.credit += strip_vertex(snaps, v);
    }
    i = j + 1;
  }
  auto inst = reduced_instance(n, std::move(snaps), k, ell, t, led.credit);
  led.forced_intervals.normalize();
  return {std::move(inst), std::move(led)};
}

DpResult solve_pvc_dp(const TemporalGraph& g, int k, int ell, const DpOptions& opts) {
  check_params(k, ell);
  const int T = g.lifetime();
  DpResult res;
  if (fits_everything(T, k, ell)) {
    const auto life = vertex_lifespans(g);
    for (const auto& iv : tiling_timeline(g.num_vertices(), T, k, ell).intervals)
      if (!life[iv.v].empty()) res.witness.intervals.push_back(iv);
    res.optimum = g.total_temporal_edges();
    return res;
  }
  BagDpProblem p;
  p.k = k;
  p.ell = ell;
  p.T = T;
  p.bags = bags_without(g, {});
  p.gains = covering_gains(g);
  p.enter = no_credit();
  p.leave = no_credit();
  auto sol = BagDp(p, opts).run();
  res.optimum = sol.value;
  res.stats = std::move(sol.stats);
  for (const auto& [v, seq] : sol.profiles) emit_profile(res.witness, v, seq, k, ell, T, false);
  res.witness.normalize();
  return res;
}

DpResult solve_pvc_pipeline(const TemporalGraph& g, int k, int ell, bool large_bags,
                            const DpOptions& opts) {
  auto [reduced, led] = large_bags ? reduce_large_bags_pvc(g, k, ell, 0) : preprocess_pvc(g, k, ell, 0);
  auto res = solve_pvc_dp(reduced.graph, k, ell, opts);
  res.optimum += led.credit;
  res.witness.append(led.forced_intervals);
  res.witness.normalize();
  return res;
}

DpResult solve_pds_dp(const TemporalGraph& g, int k, int ell, const DpOptions& opts) {
  check_params(k, ell);
  const int n = g.num_vertices(), T = g.lifetime();
  DpResult res;
  if (fits_everything(T, k, ell)) {
    res.optimum = g.total_temporal_vertices();
    res.witness = tiling_timeline(n, T, k, ell);
    return res;
  }
  const auto life = vertex_lifespans(g);
  Count credit = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (life[v].empty()) {
      credit += std::min<Count>(T, Count(k) * (ell + 1));
      for (long long a = 1, j = 0; j < k && a <= T; ++j, a += ell + 1)
        res.witness.add(v, static_cast<Step>(a), static_cast<Step>(std::min<long long>(a + ell, T)));
    }
  BagDpProblem p;
  p.k = k;
  p.ell = ell;
  p.T = T;
  p.bags = bags_without(g, {});
  p.gains = domination_gains(g, nullptr, nullptr);
  p.enter = entering_credit(ell);
  p.leave = leaving_credit(k, ell, T);
  auto sol = BagDp(p, opts).run();
  res.optimum = sol.value + credit;
  res.stats = std::move(sol.stats);
  for (const auto& [v, seq] : sol.profiles) emit_profile(res.witness, v, seq, k, ell, T, true);
  res.witness.normalize();
  return res;
}

namespace {

// Fewest canonical intervals covering the flagged steps, scanning left to
// right; fills `starts` with the chosen start steps.
int greedy_cover(const std::vector<char>& need, int ell, std::vector<Step>* starts) {
  const int T = static_cast<int>(need.size()) - 1;
  int used = 0;
  for (Step x = 1; x <= T; ++x) {
    if (!need[x]) continue;
    ++used;
    if (starts) starts->push_back(x);
    x += ell;  // loop increment moves past the interval end
  }
  return used;
}

}  // namespace

DsDecision solve_ds_vimw_x(const TemporalGraph& g, int k, int ell, const DpOptions& opts) {
  check_params(k, ell);
  const int n = g.num_vertices(), T = g.lifetime();
  DsDecision out;
  if (fits_everything(T, k, ell)) {
    out.decision = true;
    out.witness = tiling_timeline(n, T, k, ell);
    out.reason = "fits";
    return out;
  }
  const auto life = vertex_lifespans(g);
  for (Vertex v = 1; v <= n; ++v)
    if (life[v].empty()) {
      out.reason = "isolated-vertex";
      return out;
    }

  const auto large = largest_bags(vertex_membership_sequence(g).sizes(), std::min(ell + 1, T));
  std::vector<char> forced(n + 1, 0);
  for (int i = 0; i < T;) {
    if (!large[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < T && large[j + 1]) ++j;
    for (Vertex v = 1; v <= n; ++v)
      if (life[v].first >= i + 1 && life[v].last <= j + 1) forced[v] = 1;
    i = j + 1;
  }
  out.forced_vertices = static_cast<int>(std::count(forced.begin(), forced.end(), 1));
  if (out.forced_vertices > 0 && Count(T) >= Count(k) * (ell + 1) + ell + 2) {
    out.reason = "forced-vertex-cannot-fit";
    return out;
  }

  // A forced vertex spends all k intervals on its isolated steps. Among all
  // such placements take the one activating the most lifespan steps; it
  // exists when the union of coverable lifespan steps is coverable at once.
  Timeline forced_tl;
  std::vector<std::vector<Vertex>> active_forced(T + 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (!forced[v]) continue;
    std::vector<char> need(T + 1, 0);
    for (Step x = 1; x <= T; ++x) need[x] = g.degree(x, v) == 0;
    if (greedy_cover(need, ell, nullptr) > k) {
      out.reason = "isolated-steps-uncoverable";
      return out;
    }
    auto best = need;
    for (Step x = life[v].first; x <= life[v].last; ++x) {
      if (need[x]) continue;
      auto trial = need;
      trial[x] = 1;
      if (greedy_cover(trial, ell, nullptr) <= k) best[x] = 1;
    }
    std::vector<Step> starts;
    if (greedy_cover(best, ell, &starts) > k) {
      // No single maximal placement; the plain domination DP is still exact.
      auto full = solve_pds_dp(g, k, ell, opts);
      out.decision = full.optimum == g.total_temporal_vertices();
      if (out.decision) out.witness = full.witness;
      out.stats = std::move(full.stats);
      out.reason = "fallback-dp";
      return out;
    }
    for (Step a : starts) {
      const Step b = std::min(a + ell, T);
      forced_tl.add(v, a, b);
      for (Step x = a; x <= b; ++x)
        if (x >= life[v].first && x <= life[v].last) active_forced[x].push_back(v);
    }
  }

  std::vector<std::vector<Vertex>> must(T + 1);
  Count credit = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (!forced[v]) continue;
    credit += T - life[v].length();
    for (Step x = life[v].first; x <= life[v].last; ++x) must[x].push_back(v);
  }

  BagDpProblem p;
  p.k = k;
  p.ell = ell;
  p.T = T;
  p.bags = bags_without(g, forced);
  p.gains = domination_gains(
      g, [&](Step i) { return active_forced[i]; }, [&](Step i) { return must[i]; });
  p.enter = entering_credit(ell);
  p.leave = leaving_credit(k, ell, T);
  auto sol = BagDp(p, opts).run();
  out.stats = std::move(sol.stats);
  out.decision = sol.value != NEG && sol.value + credit == g.total_temporal_vertices();
  out.reason = out.forced_vertices > 0 ? "dp-with-forced" : "dp";
  if (out.decision) {
    Timeline tl = forced_tl;
    for (const auto& [v, seq] : sol.profiles) emit_profile(tl, v, seq, k, ell, T, true);
    tl.normalize();
    out.witness = std::move(tl);
  }
  return out;
}

}  // namespace timeline
