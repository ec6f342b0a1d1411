#include "timeline/params.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace timeline {

std::vector<int> MembershipSequence::sizes() const {
  std::vector<int> s;
  s.reserve(bags.size());
  for (const auto& b : bags) s.push_back(static_cast<int>(b.size()));
  return s;
}

std::vector<Lifespan> vertex_lifespans(const TemporalGraph& g) {
  std::vector<Lifespan> life(g.num_vertices() + 1);
  for (Step i = 1; i <= g.lifetime(); ++i)
    for (const auto& e : g.snapshot(i))
      for (Vertex v : {e.u, e.v}) {
        if (life[v].empty()) life[v].first = i;
        life[v].last = i;
      }
  return life;
}

MembershipSequence vertex_membership_sequence(const TemporalGraph& g) {
  MembershipSequence seq;
  seq.flavor = BagFlavor::Vertex;
  seq.bags.assign(g.lifetime(), {});
  const auto life = vertex_lifespans(g);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (life[v].empty()) continue;
    for (Step i = life[v].first; i <= life[v].last; ++i) seq.bags[i - 1].push_back(v);
  }
  return seq;
}

MembershipSequence edge_membership_sequence(const TemporalGraph& g) {
  MembershipSequence seq;
  seq.flavor = BagFlavor::Edge;
  seq.bags.assign(g.lifetime(), {});
  std::map<Edge, std::pair<Step, Step>> span;
  for (Step i = 1; i <= g.lifetime(); ++i)
    for (const auto& e : g.snapshot(i)) {
      auto [it, fresh] = span.try_emplace(e, i, i);
      if (!fresh) it->second.second = i;
    }
  for (const auto& [e, s] : span) {
    const int idx = static_cast<int>(seq.elements.size());
    seq.elements.push_back(e);
    for (Step i = s.first; i <= s.second; ++i) seq.bags[i - 1].push_back(idx);
  }
  return seq;
}

namespace {

int max_size(const MembershipSequence& seq) {
  size_t m = 0;
  for (const auto& b : seq.bags) m = std::max(m, b.size());
  return static_cast<int>(m);
}

}  // namespace

int vimw(const TemporalGraph& g) { return max_size(vertex_membership_sequence(g)); }

int imw(const TemporalGraph& g) { return max_size(edge_membership_sequence(g)); }

int vimw_x(const TemporalGraph& g, int x) {
  if (x < 1) throw std::invalid_argument("vimw_x: rank must be at least 1");
  if (x > g.lifetime()) return 0;
  auto sizes = vertex_membership_sequence(g).sizes();
  std::nth_element(sizes.begin(), sizes.begin() + (x - 1), sizes.end(), std::greater<>());
  return sizes[x - 1];
}

int max_snapshot_edges(const TemporalGraph& g) {
  size_t q = 0;
  for (const auto& s : g.snapshots()) q = std::max(q, s.size());
  return static_cast<int>(q);
}

std::vector<char> largest_bags(const std::vector<int>& sizes, int count) {
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes[a] > sizes[b]; });
  std::vector<char> large(sizes.size(), 0);
  for (int j = 0; j < count && j < static_cast<int>(order.size()); ++j) large[order[j]] = 1;
  return large;
}

}  // namespace timeline
