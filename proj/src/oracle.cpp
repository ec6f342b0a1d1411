#include "timeline/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

namespace timeline {

double oracle_search_space(int n, int T, int k) {
  double per_vertex = 0, binom = 1;
  for (int j = 0; j <= std::min(k, T); ++j) {
    per_vertex += binom;
    binom = binom * (T - j) / (j + 1);
  }
  const double space = std::pow(per_vertex, n);
  return std::isfinite(space) ? space : std::numeric_limits<double>::infinity();
}

namespace {

using Mask = std::vector<uint64_t>;

struct Choice {
  Mask mask;  // relevant steps activated
  std::vector<Step> starts;
};

bool subset_of(const Mask& a, const Mask& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

class Search {
 public:
  Search(const ProblemInstance& inst) : inst_(inst), g_(inst.graph) {
    n_ = g_.num_vertices();
    T_ = g_.lifetime();
    words_ = (T_ + 63) / 64;
    build_elements();
    for (Vertex v = 1; v <= n_; ++v) build_choices(v);
  }

  OracleResult run() {
    chosen_.assign(n_ + 1, 0);
    best_choice_.assign(n_ + 1, 0);
    hits_.assign(max_cover_.size(), 0);
    covered_ = 0;
    best_ = -1;
    dfs(1, 0);

    OracleResult res;
    res.optimum = best_;
    for (Vertex v = 1; v <= n_; ++v)
      for (Step a : choices_[v][best_choice_[v]].starts)
        res.witness.add(v, a, std::min(a + inst_.ell, T_));
    res.witness.normalize();
    res.decision = res.optimum >= inst_.target();
    return res;
  }

 private:
  void build_elements() {
    // touches_[v][i]: elements that become covered when v is active at step i.
    touches_.assign(n_ + 1, std::vector<std::vector<int>>(T_ + 1));
    auto add = [&](const std::vector<Vertex>& coverers, Step i) {
      const int id = static_cast<int>(max_cover_.size());
      Vertex top = 0;
      for (Vertex w : coverers) {
        touches_[w][i].push_back(id);
        top = std::max(top, w);
      }
      max_cover_.push_back(top);
    };
    for (Step i = 1; i <= T_; ++i) {
      if (is_domination(inst_.kind)) {
        for (Vertex v = 1; v <= n_; ++v) {
          std::vector<Vertex> closed{v};
          for (Vertex u : g_.neighbors(i, v)) closed.push_back(u);
          add(closed, i);
        }
      } else {
        for (const auto& e : g_.snapshot(i)) add({e.u, e.v}, i);
      }
    }
    const int levels = n_ + 1;
    finalized_at_.assign(levels, {});
    open_after_.assign(levels, 0);
    for (int id = 0; id < static_cast<int>(max_cover_.size()); ++id) {
      finalized_at_[max_cover_[id]].push_back(id);
      for (int d = 0; d < max_cover_[id]; ++d) ++open_after_[d];
    }
  }

  void build_choices(Vertex v) {
    Mask relevant(words_, 0);
    for (Step i = 1; i <= T_; ++i)
      if (!touches_[v][i].empty()) relevant[(i - 1) / 64] |= uint64_t(1) << ((i - 1) % 64);

    const int size = std::min(inst_.k, T_);
    std::map<Mask, std::vector<Step>> distinct;
    std::vector<Step> starts(size);
    // Enumerate start sets of exactly min(k, T) steps: adding starts only
    // grows activity, so smaller sets are dominated.
    auto rec = [&](auto&& self, int idx, Step from) -> void {
      if (idx == size) {
        Mask m(words_, 0);
        for (Step a : starts)
          for (Step i = a; i <= std::min(a + inst_.ell, T_); ++i)
            m[(i - 1) / 64] |= uint64_t(1) << ((i - 1) % 64);
        for (int w = 0; w < words_; ++w) m[w] &= relevant[w];
        distinct.try_emplace(std::move(m), starts);
        return;
      }
      for (Step a = from; a <= T_ - (size - idx - 1); ++a) {
        starts[idx] = a;
        self(self, idx + 1, a + 1);
      }
    };
    rec(rec, 0, 1);

    std::vector<Choice> all;
    for (auto& [m, s] : distinct) all.push_back({m, s});
    std::vector<Choice> maximal;
    for (size_t x = 0; x < all.size(); ++x) {
      bool dominated = false;
      for (size_t y = 0; y < all.size() && !dominated; ++y)
        dominated = y != x && all[x].mask != all[y].mask && subset_of(all[x].mask, all[y].mask);
      if (!dominated) maximal.push_back(all[x]);
    }
    // Larger activity first: good incumbents early make the bound bite.
    std::stable_sort(maximal.begin(), maximal.end(), [](const Choice& a, const Choice& b) {
      int pa = 0, pb = 0;
      for (auto w : a.mask) pa += std::popcount(w);
      for (auto w : b.mask) pb += std::popcount(w);
      return pa > pb;
    });
    choices_.resize(n_ + 1);
    choices_[v] = std::move(maximal);
  }

  void apply(Vertex v, const Mask& m, int delta) {
    for (int w = 0; w < words_; ++w)
      for (uint64_t bits = m[w]; bits; bits &= bits - 1) {
        const Step i = w * 64 + std::countr_zero(bits) + 1;
        for (int id : touches_[v][i]) {
          if (delta > 0 && hits_[id]++ == 0) ++covered_;
          if (delta < 0 && --hits_[id] == 0) --covered_;
        }
      }
  }

  // Elements whose coverers all lie in 1..depth are settled.
  void dfs(Vertex v, Count settled) {
    const int depth = v - 1;
    for (int id : finalized_at_[depth]) settled += hits_[id] > 0;
    if (settled + open_after_[depth] <= best_) return;
    if (v > n_) {
      best_ = covered_;
      best_choice_ = chosen_;
      return;
    }
    for (size_t c = 0; c < choices_[v].size(); ++c) {
      chosen_[v] = static_cast<int>(c);
      apply(v, choices_[v][c].mask, +1);
      dfs(v + 1, settled);
      apply(v, choices_[v][c].mask, -1);
      if (best_ == static_cast<Count>(max_cover_.size())) return;
    }
  }

  const ProblemInstance& inst_;
  const TemporalGraph& g_;
  int n_ = 0, T_ = 0, words_ = 0;
  std::vector<std::vector<std::vector<int>>> touches_;
  std::vector<Vertex> max_cover_;
  std::vector<std::vector<int>> finalized_at_;
  std::vector<Count> open_after_;
  std::vector<std::vector<Choice>> choices_;
  std::vector<int> chosen_, best_choice_, hits_;
  Count covered_ = 0, best_ = -1;
};

}  // namespace

OracleResult oracle_solve(const ProblemInstance& inst, const OracleOptions& opts) {
  const auto& g = inst.graph;
  if (inst.k < 1 || inst.ell < 0) throw std::invalid_argument("oracle: need k >= 1 and ell >= 0");
  if (oracle_search_space(g.num_vertices(), g.lifetime(), inst.k) > opts.budget)
    throw BudgetExceeded("oracle: search space exceeds budget");
  return Search(inst).run();
}

}  // namespace timeline
