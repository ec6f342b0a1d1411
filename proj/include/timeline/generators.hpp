#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "timeline/core.hpp"

namespace timeline {

// Each potential edge present in each snapshot independently with
// probability p.
TemporalGraph gen_random(int n, int T, double p, uint64_t seed);

// Proper edge coloring with at most max_degree + 1 colors (fan rotation and
// alternating-path inversion). Returns the color classes; edges are those of g.
std::vector<std::vector<Edge>> vizing_edge_coloring(const StaticGraph& g);

// Literals are +v / -v with 1-based variables.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Throws std::invalid_argument unless every clause has 3 literals over
// distinct variables and every variable occurs exactly twice positively and
// twice negatively.
void check_3sat22(const CnfFormula& f);

// Coloring of a source graph: colors[v] in {0,1,2} for v = 1..n (index 0 unused).
using Coloring = std::vector<int>;
// Assignment: values[x] for x = 1..num_vars (index 0 unused).
using Assignment = std::vector<bool>;

// Vertex cover, T = 23, k = 2, ell = 4; source max degree <= 4.
// Snapshots 1-5, 10-14, 19-23 are the color blocks, each carrying the five
// edge color classes in order; 6-9 and 15-18 are empty.
ProblemInstance reduce_3col_to_tvc(const StaticGraph& g);
Timeline witness_3col_tvc(const StaticGraph& g, const Coloring& colors);

// Dominating set, T = 35, k = 3, ell = 6; source max degree <= 4.
// Source vertex i (1-based) owns ids 5(i-1)+1..5(i-1)+5 as v, v', u, u', u''.
ProblemInstance reduce_3col_to_tds(const StaticGraph& g);
Timeline witness_3col_tds(const StaticGraph& g, const Coloring& colors);
Vertex tds_vertex(int source_vertex, int role);  // role 0..4 = v, v', u, u', u''

// Partial dominating set, T = 2, k = 1, ell = 0, t = 2n - k_ds.
ProblemInstance reduce_ds_to_tpds(const StaticGraph& g, int k_ds);
Timeline witness_ds_tpds(const StaticGraph& g, const std::vector<Vertex>& dominating_set);

// Vertex cover with every underlying edge in exactly one snapshot, k = 2,
// ell = 0; source max degree <= 4. Source vertex v owns 16 ids: color c in
// {0,1,2} and index i in 1..4 give 16(v-1) + 4c + i, the hub x^i is
// 16(v-1) + 12 + i. Star snapshot (v, c, i) is 12(v-1) + 4c + i; the snapshot
// of source edge e (0-based input order) and color c is 12n + 3e + c + 1.
ProblemInstance reduce_3col_to_tvc_imw4(const StaticGraph& g);
Timeline witness_3col_tvc_imw4(const StaticGraph& g, const Coloring& colors);
Vertex imw4_color_vertex(int source_vertex, int color, int index);
Vertex imw4_hub_vertex(int source_vertex, int index);

// Partial dominating set, T = 6n + 7m, k = 1, ell = 0, t = 76n + 21m.
// Variable x (1-based) owns 14 ids: copy c in {1,2} and role r in 0..6
// (x, not-x, p, q, r, s, t) give 14(x-1) + 7(c-1) + r + 1. Clause j (0-based)
// owns 14n + 6j + 1..6 as a, a', b, b', c, c'. Snapshots: 6 per variable,
// then one per clause, then 6 dummy snapshots per clause.
ProblemInstance reduce_3sat22_to_tpds(const CnfFormula& f);
Timeline witness_3sat22_tpds(const CnfFormula& f, const Assignment& values);
Vertex sat_variable_vertex(int variable, int copy, int role);
Vertex sat_clause_vertex(int num_vars, int clause, int slot);

// Parsing of the source formats: static graph "n" then "u v" lines; DIMACS cnf.
StaticGraph parse_static_graph(const std::string& text);
CnfFormula parse_dimacs(const std::string& text);

}  // namespace timeline
