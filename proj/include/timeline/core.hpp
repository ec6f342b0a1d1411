#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace timeline {

using Vertex = int32_t;  // 1-based
using Step = int32_t;    // 1-based
using Count = int64_t;

// Unordered edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Thrown by exhaustive or table-based solvers when the configured state budget
// would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StaticGraph {
 public:
  StaticGraph() = default;
  // Throws std::invalid_argument on loops, duplicates or out-of-range ids.
  StaticGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Ascending neighbor list of v.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int max_degree() const;

  friend bool operator==(const StaticGraph& a, const StaticGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::vector<Vertex>> adj_;
};

// A sequence of T snapshots over vertices 1..n. Edges inside a snapshot are
// kept sorted, so two graphs with the same edge sets compare equal.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  // Throws std::invalid_argument when an invariant is violated.
  TemporalGraph(int n, std::vector<std::vector<Edge>> snapshots);

  int num_vertices() const { return n_; }
  int lifetime() const { return static_cast<int>(snapshots_.size()); }

  std::span<const Edge> snapshot(Step i) const { return snapshots_.at(i - 1); }
  const std::vector<std::vector<Edge>>& snapshots() const { return snapshots_; }

  // Ascending neighbors of v in G_i.
  std::span<const Vertex> neighbors(Step i, Vertex v) const {
    const auto& o = offsets_[i - 1];
    return {adjacency_[i - 1].data() + o[v - 1], adjacency_[i - 1].data() + o[v]};
  }
  int degree(Step i, Vertex v) const {
    const auto& o = offsets_[i - 1];
    return static_cast<int>(o[v] - o[v - 1]);
  }

  Count total_temporal_edges() const;
  Count total_temporal_vertices() const { return Count(n_) * lifetime(); }

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.n_ == b.n_ && a.snapshots_ == b.snapshots_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Edge>> snapshots_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<uint32_t>> offsets_;
};

struct ActivityInterval {
  Vertex v = 0;
  Step a = 0;
  Step b = 0;

  int length() const { return b - a; }
  friend bool operator==(const ActivityInterval&, const ActivityInterval&) = default;
  friend auto operator<=>(const ActivityInterval&, const ActivityInterval&) = default;
};

struct Timeline {
  std::vector<ActivityInterval> intervals;

  void add(Vertex v, Step a, Step b) { intervals.push_back({v, a, b}); }
  void append(const Timeline& other) {
    intervals.insert(intervals.end(), other.intervals.begin(), other.intervals.end());
  }
  // Sorts intervals by (v, a, b); solvers return witnesses in this form.
  void normalize();

  friend bool operator==(const Timeline&, const Timeline&) = default;
};

enum class ProblemKind { VC, PVC, DS, PDS };

bool is_partial(ProblemKind kind);
bool is_domination(ProblemKind kind);
std::string to_string(ProblemKind kind);
ProblemKind parse_problem_kind(const std::string& s);

struct ProblemInstance {
  TemporalGraph graph;
  ProblemKind kind = ProblemKind::VC;
  int k = 1;
  int ell = 0;
  Count t = 0;  // only meaningful for PVC and PDS

  // Number of covered/dominated elements required for a yes.
  Count target() const;
  // Number of elements the kind counts (temporal edges or temporal vertices).
  Count universe_size() const;
};

struct VerificationReport {
  bool well_formed = true;
  bool k_respected = true;
  bool ell_respected = true;
  Count covered = 0;
  Count dominated = 0;
  bool satisfies_instance = false;
};

StaticGraph underlying_graph(const TemporalGraph& g);

// Sorted active vertex ids at step i. Throws std::out_of_range for a bad i.
std::vector<Vertex> active_set(const TemporalGraph& g, const Timeline& tl, Step i);

// Per-step activity table: active[i][v] for 1 <= i <= T, 1 <= v <= n.
// Intervals are clipped to [1, T]; malformed ones are ignored.
std::vector<std::vector<char>> activity_table(const TemporalGraph& g, const Timeline& tl);

struct TemporalEdge {
  Edge e;
  Step i = 0;
  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};
struct TemporalVertex {
  Vertex v = 0;
  Step i = 0;
  friend bool operator==(const TemporalVertex&, const TemporalVertex&) = default;
};

std::pair<Count, std::vector<TemporalEdge>> covered_temporal_edges(const TemporalGraph& g,
                                                                   const Timeline& tl);
std::pair<Count, std::vector<TemporalVertex>> dominated_temporal_vertices(const TemporalGraph& g,
                                                                          const Timeline& tl);

VerificationReport verify(const ProblemInstance& inst, const Timeline& tl);

// k intervals per vertex laid end to end from step 1; activates every vertex
// in every step when T <= k(ell+1).
Timeline tiling_timeline(int n, int T, int k, int ell);

}  // namespace timeline
