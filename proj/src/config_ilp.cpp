#include "timeline/config_ilp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace timeline {

ConfigProgram build_config_program(const TemporalGraph& g, int k, Count t, ProblemKind kind,
                                   int max_vertices) {
  if (k < 1) throw std::invalid_argument("config program: need k >= 1");
  const int n = g.num_vertices();
  if (n > max_vertices)
    throw GuardExceeded("config program: " + std::to_string(n) + " vertices exceed the guard of " +
                        std::to_string(max_vertices));
  ConfigProgram prog;
  prog.domination = is_domination(kind);
  prog.n = n;
  prog.T = g.lifetime();
  prog.k = k;

  std::map<std::vector<Edge>, int> index;
  for (Step i = 1; i <= g.lifetime(); ++i) {
    std::vector<Edge> es(g.snapshot(i).begin(), g.snapshot(i).end());
    auto [it, fresh] = index.try_emplace(es, static_cast<int>(prog.classes.size()));
    if (fresh) {
      prog.classes.push_back(es);
      prog.multiplicity.push_back(0);
      prog.class_steps.push_back({});
    }
    ++prog.multiplicity[it->second];
    prog.class_steps[it->second].push_back(i);
  }

  const uint32_t subsets = 1u << n;
  for (const auto& es : prog.classes) {
    std::vector<uint32_t> closed(n, 0);
    for (int v = 0; v < n; ++v) closed[v] = 1u << v;
    for (const auto& e : es) {
      closed[e.u - 1] |= 1u << (e.v - 1);
      closed[e.v - 1] |= 1u << (e.u - 1);
    }
    std::vector<Count> row(subsets, 0);
    for (uint32_t s = 0; s < subsets; ++s) {
      if (prog.domination) {
        uint32_t dom = 0;
        for (int v = 0; v < n; ++v)
          if (s >> v & 1) dom |= closed[v];
        row[s] = std::popcount(dom);
      } else {
        for (const auto& e : es) row[s] += ((s >> (e.u - 1)) & 1) || ((s >> (e.v - 1)) & 1);
      }
    }
    prog.value.push_back(std::move(row));
  }

  if (is_partial(kind)) {
    prog.target = t;
  } else {
    prog.target = prog.domination ? Count(n) * g.lifetime() : g.total_temporal_edges();
  }
  return prog;
}

namespace {

class ConfigSearch {
 public:
  ConfigSearch(const ConfigProgram& p, const ConfigOptions& o) : p_(p), o_(o) {
    const int subsets = p.num_subsets();
    for (const auto& row : p.value) {
      std::vector<int> order(subsets);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return row[a] > row[b]; });
      order_.push_back(std::move(order));
    }
    used_.assign(p.n, 0);
    counts_.assign(p.classes.size(), std::vector<int>(subsets, 0));
  }

  bool run() { return dfs(0, 0, 0, 0); }
  const std::vector<std::vector<int>>& counts() const { return counts_; }
  Count nodes() const { return nodes_; }

 private:
  uint32_t available() const {
    uint32_t m = 0;
    for (int v = 0; v < p_.n; ++v)
      if (used_[v] < p_.k) m |= 1u << v;
    return m;
  }

  // Slot `slot` of class c; option indices in a class never decrease, so each
  // multiset of subsets is visited once.
  bool dfs(size_t c, int slot, int from, Count value) {
    if (++nodes_ > o_.node_limit) throw BudgetExceeded("config search: node limit reached");
    if (value >= p_.target) {
      finish_with_empty(c, slot);
      return true;
    }
    if (c == p_.classes.size()) return false;
    if (slot == p_.multiplicity[c]) return dfs(c + 1, 0, 0, value);

    // Values are monotone in S, so the best any remaining snapshot can add is
    // its value with every vertex that still has budget active.
    const uint32_t avail = available();
    Count bound = value + Count(p_.multiplicity[c] - slot) * p_.value[c][avail];
    for (size_t d = c + 1; d < p_.classes.size(); ++d) bound += Count(p_.multiplicity[d]) * p_.value[d][avail];
    if (bound < p_.target) return false;

    const auto& order = order_[c];
    for (int idx = from; idx < static_cast<int>(order.size()); ++idx) {
      const uint32_t s = static_cast<uint32_t>(order[idx]);
      if ((s & avail) != s) continue;
      take(c, s, +1);
      const bool ok = dfs(c, slot + 1, idx, value + p_.value[c][s]);
      if (ok) return true;
      take(c, s, -1);
    }
    return false;
  }

  void take(size_t c, uint32_t s, int delta) {
    counts_[c][s] += delta;
    for (int v = 0; v < p_.n; ++v)
      if (s >> v & 1) used_[v] += delta;
  }

  void finish_with_empty(size_t c, int slot) {
    for (size_t d = c; d < p_.classes.size(); ++d) {
      const int left = p_.multiplicity[d] - (d == c ? slot : 0);
      counts_[d][0] += left;
    }
  }

  const ConfigProgram& p_;
  ConfigOptions o_;
  std::vector<std::vector<int>> order_;
  std::vector<int> used_;
  std::vector<std::vector<int>> counts_;
  Count nodes_ = 0;
};

std::string var(size_t c, int s) { return "X_" + std::to_string(c) + "_" + std::to_string(s); }

// Writes " name: t1 + t2 + ..." wrapping long rows onto continuation lines.
void write_row(std::ostringstream& out, const std::string& name,
               const std::vector<std::pair<Count, std::string>>& terms, const std::string& tail) {
  out << ' ' << name << ':';
  int on_line = 0;
  for (size_t j = 0; j < terms.size(); ++j) {
    if (on_line == 8) {
      out << "\n   ";
      on_line = 0;
    }
    out << (j == 0 ? " " : " + ") << terms[j].first << ' ' << terms[j].second;
    ++on_line;
  }
  if (terms.empty()) out << " 0";
  out << tail << '\n';
}

}  // namespace

ConfigSolution solve_config_exact(const ConfigProgram& prog, const ConfigOptions& opts) {
  ConfigSolution sol;
  ConfigSearch search(prog, opts);
  sol.feasible = search.run();
  sol.nodes = search.nodes();
  if (sol.feasible) {
    sol.counts = search.counts();
    sol.witness = timeline_from_assignment(prog, sol.counts);
  }
  return sol;
}

Timeline timeline_from_assignment(const ConfigProgram& prog,
                                  const std::vector<std::vector<int>>& counts) {
  Timeline tl;
  for (size_t c = 0; c < prog.classes.size(); ++c) {
    size_t next = 0;
    for (int s = 0; s < prog.num_subsets(); ++s)
      for (int rep = 0; rep < counts[c][s]; ++rep) {
        const Step i = prog.class_steps[c].at(next++);
        for (int v = 0; v < prog.n; ++v)
          if (s >> v & 1) tl.add(v + 1, i, i);
      }
  }
  tl.normalize();
  return tl;
}

std::string export_lp(const ConfigProgram& prog) {
  std::ostringstream out;
  out << "\\ configuration program: " << prog.classes.size() << " classes, " << prog.n
      << " vertices, k=" << prog.k << ", target=" << prog.target << '\n';
  const bool empty = prog.classes.empty();
  out << "Maximize\n";
  std::vector<std::pair<Count, std::string>> objective;
  for (size_t c = 0; c < prog.classes.size(); ++c)
    for (int s = 0; s < prog.num_subsets(); ++s)
      if (prog.value[c][s] != 0) objective.push_back({prog.value[c][s], var(c, s)});
  if (!empty) write_row(out, "value", objective, "");

  out << "Subject To\n";
  if (!empty) {
    write_row(out, "target", objective, " >= " + std::to_string(prog.target));
    for (size_t c = 0; c < prog.classes.size(); ++c) {
      std::vector<std::pair<Count, std::string>> terms;
      for (int s = 0; s < prog.num_subsets(); ++s) terms.push_back({1, var(c, s)});
      write_row(out, "class_" + std::to_string(c), terms,
                " = " + std::to_string(prog.multiplicity[c]));
    }
    for (int v = 0; v < prog.n; ++v) {
      std::vector<std::pair<Count, std::string>> terms;
      for (size_t c = 0; c < prog.classes.size(); ++c)
        for (int s = 0; s < prog.num_subsets(); ++s)
          if (s >> v & 1) terms.push_back({1, var(c, s)});
      write_row(out, "budget_" + std::to_string(v + 1), terms, " <= " + std::to_string(prog.k));
    }
  }

  out << "Bounds\n";
  for (size_t c = 0; c < prog.classes.size(); ++c)
    for (int s = 0; s < prog.num_subsets(); ++s) out << ' ' << var(c, s) << " >= 0\n";
  out << "General\n";
  for (size_t c = 0; c < prog.classes.size(); ++c)
    for (int s = 0; s < prog.num_subsets(); ++s) out << ' ' << var(c, s) << '\n';
  out << "End\n";
  return out.str();
}

}  // namespace timeline
