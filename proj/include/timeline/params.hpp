#pragma once

#include <vector>

#include "timeline/core.hpp"

namespace timeline {

enum class BagFlavor { Vertex, Edge };

// bags[i-1] holds the members of bag i: vertex ids for the vertex flavor,
// indices into `elements` (the underlying edges) for the edge flavor.
struct MembershipSequence {
  BagFlavor flavor = BagFlavor::Vertex;
  std::vector<std::vector<int>> bags;
  std::vector<Edge> elements;  // edge flavor only

  std::vector<int> sizes() const;
};

// First and last step at which a vertex has an incident edge; {0, 0} when the
// vertex is isolated in every snapshot.
struct Lifespan {
  Step first = 0;
  Step last = 0;
  bool empty() const { return first == 0; }
  int length() const { return empty() ? 0 : last - first + 1; }
};

// lifespans[v] for 1 <= v <= n (index 0 unused).
std::vector<Lifespan> vertex_lifespans(const TemporalGraph& g);

MembershipSequence vertex_membership_sequence(const TemporalGraph& g);
MembershipSequence edge_membership_sequence(const TemporalGraph& g);

int vimw(const TemporalGraph& g);
int imw(const TemporalGraph& g);
// Size of the x-th largest vertex bag; 0 when x > T.
int vimw_x(const TemporalGraph& g, int x);
int max_snapshot_edges(const TemporalGraph& g);

// Indices (0-based steps) of the `count` largest bags, ties broken by
// earlier step; returned as a per-step flag vector.
std::vector<char> largest_bags(const std::vector<int>& sizes, int count);

}  // namespace timeline
