#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "timeline/branching.hpp"
#include "timeline/dp_vimw.hpp"
#include "timeline/generators.hpp"
#include "timeline/io.hpp"
#include "timeline/oracle.hpp"
#include "timeline/params.hpp"

using namespace timeline;

namespace {

int max_snapshot_degree(const TemporalGraph& g) {
  int d = 0;
  for (Step i = 1; i <= g.lifetime(); ++i)
    for (Vertex v = 1; v <= g.num_vertices(); ++v) d = std::max(d, g.degree(i, v));
  return d;
}

StaticGraph random_static(int n, double p, uint64_t seed, int max_deg) {
  const auto tg = gen_random(n, 1, p, seed);
  std::vector<Edge> keep;
  std::vector<int> deg(n + 1, 0);
  for (const auto& e : tg.snapshot(1))
    if (deg[e.u] < max_deg && deg[e.v] < max_deg) {
      keep.push_back(e);
      ++deg[e.u];
      ++deg[e.v];
    }
  return StaticGraph(n, keep);
}

}  // namespace

TEST_CASE("random generator extremes and determinism") {
  const auto empty = gen_random(5, 3, 0.0, 1);
  CHECK(empty.total_temporal_edges() == 0);
  const auto full = gen_random(5, 3, 1.0, 1);
  for (Step i = 1; i <= 3; ++i) CHECK(full.snapshot(i).size() == 10);
  CHECK(emit_instance(gen_random(6, 5, 0.4, 77)) == emit_instance(gen_random(6, 5, 0.4, 77)));
  CHECK_FALSE(gen_random(6, 5, 0.4, 77) == gen_random(6, 5, 0.4, 78));
  CHECK_THROWS(gen_random(3, 3, 1.5, 0));
}

TEST_CASE("edge coloring") {
  CHECK(vizing_edge_coloring(StaticGraph(2, {{1, 2}})).size() == 1);
  CHECK(vizing_edge_coloring(fixtures::triangle()).size() == 3);
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_static(4 + seed % 9, 0.5, seed, 4);
    const auto classes = vizing_edge_coloring(g);
    CHECK(static_cast<int>(classes.size()) <= g.max_degree() + 1);
    std::multiset<Edge> all;
    for (const auto& cls : classes) {
      std::set<Vertex> touched;
      for (const auto& e : cls) {
        CHECK(touched.insert(e.u).second);
        CHECK(touched.insert(e.v).second);
        all.insert(e);
      }
    }
    CHECK(std::vector<Edge>(all.begin(), all.end()) == g.edges());
  }
}

TEST_CASE("3-coloring to vertex cover") {
  const auto tri = fixtures::triangle();
  const auto inst = reduce_3col_to_tvc(tri);
  CHECK(inst.graph.lifetime() == 23);
  CHECK(inst.k == 2);
  CHECK(inst.ell == 4);
  CHECK(max_snapshot_degree(inst.graph) == 1);
  const auto tl = witness_3col_tvc(tri, fixtures::three_coloring(tri));
  CHECK(verify(inst, tl).satisfies_instance);

  const auto k4 = reduce_3col_to_tvc(fixtures::k4());
  CHECK(solve_pvc_dp(k4.graph, 2, 4).optimum < k4.graph.total_temporal_edges());
  CHECK_FALSE(solve_vc_branching(k4.graph, 2, 4).decision);

  CHECK_THROWS(witness_3col_tvc(tri, {0, 0, 0, 1}));
  CHECK_THROWS(reduce_3col_to_tvc(StaticGraph(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}})));
}

TEST_CASE("3-coloring to vertex cover on random 3-colorable sources") {
  int done = 0;
  for (uint64_t seed = 0; done < 30 && seed < 300; ++seed) {
    const auto g = random_static(5 + seed % 4, 0.5, seed, 4);
    const auto col = fixtures::three_coloring(g);
    if (col.empty()) continue;
    ++done;
    const auto inst = reduce_3col_to_tvc(g);
    CHECK(max_snapshot_degree(inst.graph) <= 1);
    CHECK(verify(inst, witness_3col_tvc(g, col)).satisfies_instance);
  }
  CHECK(done == 30);
}

TEST_CASE("3-coloring to dominating set") {
  const auto single = reduce_3col_to_tds(StaticGraph(1, {}));
  CHECK(single.graph.num_vertices() == 5);
  CHECK(single.graph.lifetime() == 35);
  CHECK(max_snapshot_degree(single.graph) == 1);
  CHECK(single.k == 3);
  CHECK(single.ell == 6);
  CHECK(verify(single, witness_3col_tds(StaticGraph(1, {}), {0, 0})).satisfies_instance);

  const auto tri = fixtures::triangle();
  const auto inst = reduce_3col_to_tds(tri);
  CHECK(inst.graph.num_vertices() == 15);
  CHECK(max_snapshot_degree(inst.graph) == 1);
  const auto rep = verify(inst, witness_3col_tds(tri, fixtures::three_coloring(tri)));
  CHECK(rep.dominated == 35 * 15);
  CHECK(rep.satisfies_instance);
  CHECK(tds_vertex(2, 0) == 6);
  CHECK(tds_vertex(2, 4) == 10);

  int done = 0;
  for (uint64_t seed = 0; done < 20 && seed < 300; ++seed) {
    const auto g = random_static(4 + seed % 4, 0.5, seed, 4);
    const auto col = fixtures::three_coloring(g);
    if (col.empty()) continue;
    ++done;
    const auto red = reduce_3col_to_tds(g);
    CHECK(max_snapshot_degree(red.graph) <= 1);
    CHECK(verify(red, witness_3col_tds(g, col)).satisfies_instance);
  }
}

TEST_CASE("dominating set to partial dominating set") {
  // Star with a universal vertex.
  const StaticGraph star(4, {{1, 2}, {1, 3}, {1, 4}});
  const auto inst = reduce_ds_to_tpds(star, 1);
  CHECK(inst.graph.lifetime() == 2);
  CHECK(inst.graph.snapshot(2).empty());
  CHECK(inst.t == 2 * 4 - 1);
  CHECK(verify(inst, witness_ds_tpds(star, {1})).satisfies_instance);
  CHECK(oracle_solve(inst).decision);

  const StaticGraph edgeless(4, {});
  for (int k = 0; k < 4; ++k)
    CHECK(oracle_solve(reduce_ds_to_tpds(edgeless, k)).decision == (fixtures::min_dominating_set(edgeless) <= k));

  for (uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 1 + seed % 8;
    const auto g = random_static(n, 0.35, seed, n);
    const int mds = fixtures::min_dominating_set(g);
    const int k = static_cast<int>(seed / 8) % (n + 1);
    CHECK(oracle_solve(reduce_ds_to_tpds(g, k)).decision == (mds <= k));
  }
}

TEST_CASE("3-coloring to vertex cover with interval-membership-width 4") {
  const StaticGraph edge(2, {{1, 2}});
  const auto inst = reduce_3col_to_tvc_imw4(edge);
  CHECK(inst.graph.num_vertices() == 32);
  CHECK(inst.graph.lifetime() == 12 * 2 + 3);
  CHECK(inst.k == 2);
  CHECK(inst.ell == 0);
  CHECK(imw(inst.graph) == 4);

  for (const auto& src : {edge, fixtures::triangle(), StaticGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})}) {
    const auto red = reduce_3col_to_tvc_imw4(src);
    CHECK(imw(red.graph) == 4);
    std::map<Edge, int> seen;
    for (Step i = 1; i <= red.graph.lifetime(); ++i)
      for (const auto& e : red.graph.snapshot(i)) ++seen[e];
    for (const auto& [e, c] : seen) CHECK(c == 1);
    CHECK(verify(red, witness_3col_tvc_imw4(src, fixtures::three_coloring(src))).satisfies_instance);
  }
  CHECK(imw4_color_vertex(2, 1, 3) == 16 + 4 + 3);
  CHECK(imw4_hub_vertex(1, 4) == 16);
}

TEST_CASE("3-SAT-(2,2) to partial dominating set") {
  const auto f = fixtures::small_3sat22();
  CHECK_NOTHROW(check_3sat22(f));
  const auto inst = reduce_3sat22_to_tpds(f);
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  CHECK(inst.graph.lifetime() == 6 * n + 7 * m);
  CHECK(inst.graph.num_vertices() == 14 * n + 6 * m);
  CHECK(inst.t == 76 * n + 21 * m);
  CHECK(inst.k == 1);
  CHECK(inst.ell == 0);
  // Crown graph on 6 + 6 vertices: the biclique minus a perfect matching.
  CHECK(max_snapshot_edges(inst.graph) == 30);

  int satisfying = 0;
  for (int mask = 0; mask < 8; ++mask) {
    Assignment a(4, false);
    for (int x = 1; x <= 3; ++x) a[x] = mask >> (x - 1) & 1;
    bool sat = true;
    for (const auto& cl : f.clauses) {
      bool any = false;
      for (int lit : cl) any = any || a[std::abs(lit)] == (lit > 0);
      sat = sat && any;
    }
    if (!sat) continue;
    ++satisfying;
    const auto rep = verify(inst, witness_3sat22_tpds(f, a));
    CHECK(rep.dominated >= inst.t);
    CHECK(rep.satisfies_instance);
  }
  CHECK(satisfying > 0);

  CnfFormula bad = f;
  bad.clauses[0] = {1, 1, 2};
  CHECK_THROWS(check_3sat22(bad));
  CHECK(sat_variable_vertex(2, 2, 6) == 28);
  CHECK(sat_clause_vertex(3, 1, 0) == 14 * 3 + 7);
}

TEST_CASE("source parsers") {
  const auto g = parse_static_graph("# triangle\n3\n1 2\n2 3\n1 3\n");
  CHECK(g == fixtures::triangle());
  CHECK_THROWS(parse_static_graph("3\n1 x\n"));
  const auto f = parse_dimacs("c demo\np cnf 3 4\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n-1 -2 -3 0\n");
  CHECK(f.num_vars == 3);
  CHECK(f.clauses == fixtures::small_3sat22().clauses);
  CHECK_THROWS(parse_dimacs("1 2 0\n"));
}
