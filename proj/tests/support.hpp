#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <cstdint>
#include <functional>
#include <vector>

#include "timeline/core.hpp"
#include "timeline/generators.hpp"

namespace fixtures {

using namespace timeline;

// The 5-vertex, 6-snapshot example instance.
inline TemporalGraph fig1() {
  auto E = [](std::initializer_list<std::pair<int, int>> es) {
    std::vector<Edge> out;
    for (auto [u, v] : es) out.emplace_back(u, v);
    return out;
  };
  return TemporalGraph(5, {E({{2, 4}, {3, 4}, {4, 5}}),
                           E({{1, 2}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}),
                           E({{1, 2}, {3, 4}, {5, 4}, {3, 5}}),
                           E({{2, 3}, {4, 5}, {2, 1}, {4, 3}}),
                           E({{1, 5}, {3, 5}, {3, 1}}),
                           E({{1, 4}, {2, 5}, {3, 5}, {2, 1}})});
}

// Covering timeline drawn for the example (k = 1, ell = 2).
inline Timeline fig1_blue() {
  Timeline tl;
  tl.add(4, 1, 3);
  tl.add(2, 2, 4);
  tl.add(3, 3, 5);
  tl.add(1, 4, 6);
  tl.add(5, 4, 6);
  return tl;
}

inline ProblemInstance make(const TemporalGraph& g, ProblemKind kind, int k, int ell, Count t = 0) {
  ProblemInstance inst;
  inst.graph = g;
  inst.kind = kind;
  inst.k = k;
  inst.ell = ell;
  inst.t = t;
  return inst;
}

struct GridCase {
  TemporalGraph g;
  int k = 1;
  int ell = 0;
  double p = 0;
  uint64_t seed = 0;
};

// Seeded random grid: n <= max_n, T <= max_T, k <= 2, ell <= 2,
// p in {0.2, 0.5, 0.8}.
inline std::vector<GridCase> random_grid(int count, uint64_t seed, int max_n = 4, int max_T = 5,
                                         int max_k = 2, int max_ell = 2) {
  std::vector<GridCase> out;
  const double ps[3] = {0.2, 0.5, 0.8};
  for (int j = 0; j < count; ++j) {
    const uint64_t s = seed * 1000003ULL + j;
    const int n = 1 + static_cast<int>(s % max_n);
    const int T = 1 + static_cast<int>((s / 7) % max_T);
    const int k = 1 + static_cast<int>((s / 11) % max_k);
    const int ell = static_cast<int>((s / 13) % (max_ell + 1));
    const double p = ps[(s / 17) % 3];
    out.push_back({gen_random(n, T, p, s), k, ell, p, s});
  }
  return out;
}

// Exhaustive optimum over every timeline with at most k intervals of length
// at most ell per vertex (arbitrary start and end), for tiny instances.
inline Count unrestricted_optimum(const TemporalGraph& g, bool domination, int k, int ell) {
  const int n = g.num_vertices(), T = g.lifetime();
  std::vector<ActivityInterval> shapes;
  for (Step a = 1; a <= T; ++a)
    for (Step b = a; b <= T && b - a <= ell; ++b) shapes.push_back({0, a, b});
  // All multisets of at most k shapes per vertex.
  std::vector<std::vector<std::vector<int>>> per_vertex_sets;
  std::vector<std::vector<int>> sets{{}};
  std::function<void(std::vector<int>&, size_t)> grow = [&](std::vector<int>& cur, size_t from) {
    if (static_cast<int>(cur.size()) == k) return;
    for (size_t s = from; s < shapes.size(); ++s) {
      cur.push_back(static_cast<int>(s));
      sets.push_back(cur);
      grow(cur, s);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  grow(cur, 0);

  Count best = 0;
  std::vector<size_t> pick(n, 0);
  while (true) {
    Timeline tl;
    for (int v = 0; v < n; ++v)
      for (int s : sets[pick[v]]) tl.add(v + 1, shapes[s].a, shapes[s].b);
    const Count got = domination ? dominated_temporal_vertices(g, tl).first : covered_temporal_edges(g, tl).first;
    best = std::max(best, got);
    int v = 0;
    while (v < n && ++pick[v] == sets.size()) pick[v++] = 0;
    if (v == n) break;
  }
  return best;
}

// Smallest dominating set size of a static graph by subset enumeration.
inline int min_dominating_set(const StaticGraph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    uint32_t dom = s;
    for (const auto& e : g.edges()) {
      if (s >> (e.u - 1) & 1) dom |= 1u << (e.v - 1);
      if (s >> (e.v - 1) & 1) dom |= 1u << (e.u - 1);
    }
    if (dom == (1u << n) - 1) best = size;
  }
  return best;
}

// Proper 3-coloring by brute force; empty when none exists.
inline std::vector<int> three_coloring(const StaticGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> c(n + 1, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v > n) return true;
    for (int x = 0; x < 3; ++x) {
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (u < v && c[u] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  if (!rec(1)) return {};
  return c;
}

inline StaticGraph triangle() { return StaticGraph(3, {{1, 2}, {2, 3}, {1, 3}}); }

inline StaticGraph k4() { return StaticGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// A satisfiable formula where every variable occurs twice with each sign.
inline CnfFormula small_3sat22() {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{1, 2, 3}, {1, 2, 3}, {-1, -2, -3}, {-1, -2, -3}};
  return f;
}

}  // namespace fixtures
