#include "timeline/core.hpp"

#include <algorithm>
#include <map>

namespace timeline {

namespace {

void check_edge(int n, const Edge& e, const std::string& where) {
  if (e.u < 1 || e.v > n)
    throw std::invalid_argument(where + ": endpoint out of range");
  if (e.u == e.v) throw std::invalid_argument(where + ": self-loop");
}

}  // namespace

StaticGraph::StaticGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("static graph: negative vertex count");
  for (auto& e : edges_) {
    e = Edge(e.u, e.v);
    check_edge(n, e, "static graph");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("static graph: duplicate edge");
  adj_.assign(n + 1, {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int StaticGraph::max_degree() const {
  size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return static_cast<int>(d);
}

TemporalGraph::TemporalGraph(int n, std::vector<std::vector<Edge>> snapshots)
    : n_(n), snapshots_(std::move(snapshots)) {
  if (n < 1) throw std::invalid_argument("temporal graph: need at least one vertex");
  if (snapshots_.empty()) throw std::invalid_argument("temporal graph: need at least one snapshot");
  adjacency_.resize(snapshots_.size());
  offsets_.resize(snapshots_.size());
  for (size_t s = 0; s < snapshots_.size(); ++s) {
    auto& es = snapshots_[s];
    const std::string where = "snapshot " + std::to_string(s + 1);
    for (auto& e : es) {
      e = Edge(e.u, e.v);
      check_edge(n, e, where);
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      throw std::invalid_argument(where + ": duplicate edge");

    std::vector<uint32_t> deg(n + 1, 0);
    for (const auto& e : es) {
      ++deg[e.u];
      ++deg[e.v];
    }
    auto& off = offsets_[s];
    off.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) off[v] = off[v - 1] + deg[v];
    auto& adj = adjacency_[s];
    adj.assign(off[n], 0);
    std::vector<uint32_t> fill(off.begin(), off.end() - 1);
    for (const auto& e : es) {
      adj[fill[e.u - 1]++] = e.v;
      adj[fill[e.v - 1]++] = e.u;
    }
    for (int v = 1; v <= n; ++v) std::sort(adj.begin() + off[v - 1], adj.begin() + off[v]);
  }
}

Count TemporalGraph::total_temporal_edges() const {
  Count m = 0;
  for (const auto& s : snapshots_) m += static_cast<Count>(s.size());
  return m;
}

void Timeline::normalize() { std::sort(intervals.begin(), intervals.end()); }

bool is_partial(ProblemKind kind) { return kind == ProblemKind::PVC || kind == ProblemKind::PDS; }

bool is_domination(ProblemKind kind) { return kind == ProblemKind::DS || kind == ProblemKind::PDS; }

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::VC: return "vc";
    case ProblemKind::PVC: return "pvc";
    case ProblemKind::DS: return "ds";
    case ProblemKind::PDS: return "pds";
  }
  return "?";
}

ProblemKind parse_problem_kind(const std::string& s) {
  static const std::map<std::string, ProblemKind> names = {
      {"vc", ProblemKind::VC}, {"pvc", ProblemKind::PVC},
      {"ds", ProblemKind::DS}, {"pds", ProblemKind::PDS}};
  auto it = names.find(s);
  if (it == names.end()) throw std::invalid_argument("unknown problem kind '" + s + "'");
  return it->second;
}

Count ProblemInstance::universe_size() const {
  return is_domination(kind) ? graph.total_temporal_vertices() : graph.total_temporal_edges();
}

Count ProblemInstance::target() const { return is_partial(kind) ? t : universe_size(); }

StaticGraph underlying_graph(const TemporalGraph& g) {
  std::vector<Edge> all;
  for (const auto& s : g.snapshots()) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return StaticGraph(g.num_vertices(), std::move(all));
}

std::vector<Vertex> active_set(const TemporalGraph& g, const Timeline& tl, Step i) {
  if (i < 1 || i > g.lifetime()) throw std::out_of_range("active_set: time step out of range");
  std::vector<Vertex> out;
  for (const auto& iv : tl.intervals)
    if (iv.a <= i && i <= iv.b && iv.v >= 1 && iv.v <= g.num_vertices()) out.push_back(iv.v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<char>> activity_table(const TemporalGraph& g, const Timeline& tl) {
  const int n = g.num_vertices(), T = g.lifetime();
  std::vector<std::vector<char>> act(T + 1, std::vector<char>(n + 1, 0));
  for (const auto& iv : tl.intervals) {
    if (iv.v < 1 || iv.v > n || iv.a > iv.b) continue;
    for (Step i = std::max(iv.a, 1); i <= std::min(iv.b, T); ++i) act[i][iv.v] = 1;
  }
  return act;
}

std::pair<Count, std::vector<TemporalEdge>> covered_temporal_edges(const TemporalGraph& g,
                                                                   const Timeline& tl) {
  auto act = activity_table(g, tl);
  std::vector<TemporalEdge> out;
  for (Step i = 1; i <= g.lifetime(); ++i)
    for (const auto& e : g.snapshot(i))
      if (act[i][e.u] || act[i][e.v]) out.push_back({e, i});
  return {static_cast<Count>(out.size()), std::move(out)};
}

std::pair<Count, std::vector<TemporalVertex>> dominated_temporal_vertices(const TemporalGraph& g,
                                                                          const Timeline& tl) {
  auto act = activity_table(g, tl);
  std::vector<TemporalVertex> out;
  for (Step i = 1; i <= g.lifetime(); ++i)
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      bool dom = act[i][v];
      for (Vertex u : g.neighbors(i, v)) dom = dom || act[i][u];
      if (dom) out.push_back({v, i});
    }
  return {static_cast<Count>(out.size()), std::move(out)};
}

VerificationReport verify(const ProblemInstance& inst, const Timeline& tl) {
  const auto& g = inst.graph;
  VerificationReport rep;
  std::vector<int> per_vertex(g.num_vertices() + 1, 0);
  for (const auto& iv : tl.intervals) {
    if (iv.v < 1 || iv.v > g.num_vertices() || iv.a < 1 || iv.a > iv.b || iv.b > g.lifetime()) {
      rep.well_formed = false;
      continue;
    }
    if (++per_vertex[iv.v] > inst.k) rep.k_respected = false;
    if (iv.length() > inst.ell) rep.ell_respected = false;
  }
  rep.covered = covered_temporal_edges(g, tl).first;
  rep.dominated = dominated_temporal_vertices(g, tl).first;
  const Count achieved = is_domination(inst.kind) ? rep.dominated : rep.covered;
  rep.satisfies_instance =
      rep.well_formed && rep.k_respected && rep.ell_respected && achieved >= inst.target();
  return rep;
}

Timeline tiling_timeline(int n, int T, int k, int ell) {
  Timeline tl;
  for (Vertex v = 1; v <= n; ++v)
    for (int j = 0; j < k; ++j) {
      const long long a = 1 + static_cast<long long>(j) * (ell + 1);
      if (a > T) break;
      tl.add(v, static_cast<Step>(a), static_cast<Step>(std::min<long long>(a + ell, T)));
    }
  return tl;
}

}  // namespace timeline
