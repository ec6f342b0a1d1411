#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "timeline/core.hpp"

namespace timeline {

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer program for ell = 0: for every distinct snapshot edge set E (a
// class) and every vertex subset S, X[E][S] counts the snapshots of class E in
// which exactly S is active.
struct ConfigProgram {
  bool domination = true;  // value table counts dominated vertices, else covered edges
  int n = 0;
  int T = 0;
  int k = 1;
  Count target = 0;
  std::vector<std::vector<Edge>> classes;     // first-appearance order
  std::vector<int> multiplicity;              // snapshots per class
  std::vector<std::vector<Step>> class_steps; // ascending steps of each class
  std::vector<std::vector<Count>> value;      // value[c][S], S a bitmask over vertices 1..n

  int num_subsets() const { return 1 << n; }
};

// Throws GuardExceeded when n > max_vertices.
ConfigProgram build_config_program(const TemporalGraph& g, int k, Count t, ProblemKind kind,
                                   int max_vertices = 12);

struct ConfigOptions {
  Count node_limit = 50'000'000;
};

struct ConfigSolution {
  bool feasible = false;
  std::vector<std::vector<int>> counts;  // counts[c][S]
  std::optional<Timeline> witness;
  Count nodes = 0;
};

// Exact feasibility by depth-first search over how each class's snapshots are
// split among subsets. Throws BudgetExceeded past the node limit.
ConfigSolution solve_config_exact(const ConfigProgram& prog, const ConfigOptions& opts = {});

// Activates, per class, the subsets in ascending bitmask order on consecutive
// snapshots of that class.
Timeline timeline_from_assignment(const ConfigProgram& prog,
                                  const std::vector<std::vector<int>>& counts);

// LP-format text (Maximize / Subject To / Bounds / General); variables X_c_s.
std::string export_lp(const ConfigProgram& prog);

}  // namespace timeline
