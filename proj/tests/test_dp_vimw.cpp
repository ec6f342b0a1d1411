#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "timeline/dp_vimw.hpp"
#include "timeline/oracle.hpp"
#include "timeline/params.hpp"

using namespace timeline;
using fixtures::make;

namespace {

Count oracle_opt(const TemporalGraph& g, ProblemKind kind, int k, int ell) {
  return oracle_solve(make(g, kind, k, ell)).optimum;
}

void check_witness(const TemporalGraph& g, ProblemKind kind, int k, int ell, const Timeline& tl,
                   Count expected) {
  const auto rep = verify(make(g, kind, k, ell), tl);
  CHECK(rep.well_formed);
  CHECK(rep.k_respected);
  CHECK(rep.ell_respected);
  CHECK((is_domination(kind) ? rep.dominated : rep.covered) == expected);
}

}  // namespace

TEST_CASE("covering DP on small fixed instances") {
  const auto g = fixtures::fig1();
  const auto res = solve_pvc_dp(g, 1, 2);
  CHECK(res.optimum == 23);
  check_witness(g, ProblemKind::VC, 1, 2, res.witness, 23);

  TemporalGraph one(2, {{{1, 2}}});
  CHECK(solve_pvc_dp(one, 1, 0).optimum == 1);
}

TEST_CASE("domination DP on small fixed instances") {
  TemporalGraph lone(1, {{}, {}});
  CHECK(solve_pds_dp(lone, 1, 0).optimum == 1);

  const auto g = fixtures::fig1();
  const auto res = solve_pds_dp(g, 2, 0);
  CHECK(res.optimum == oracle_opt(g, ProblemKind::DS, 2, 0));
  check_witness(g, ProblemKind::DS, 2, 0, res.witness, res.optimum);
}

TEST_CASE("covering DP matches the oracle on the random grid") {
  for (const auto& c : fixtures::random_grid(500, 11)) {
    CAPTURE(c.seed);
    const Count want = oracle_opt(c.g, ProblemKind::VC, c.k, c.ell);
    const auto res = solve_pvc_dp(c.g, c.k, c.ell);
    CHECK(res.optimum == want);
    check_witness(c.g, ProblemKind::VC, c.k, c.ell, res.witness, want);
    for (bool large : {false, true}) {
      const auto piped = solve_pvc_pipeline(c.g, c.k, c.ell, large);
      CHECK(piped.optimum == want);
      check_witness(c.g, ProblemKind::VC, c.k, c.ell, piped.witness, want);
    }
  }
}

TEST_CASE("domination DP matches the oracle on the random grid") {
  for (const auto& c : fixtures::random_grid(500, 12)) {
    CAPTURE(c.seed);
    const Count want = oracle_opt(c.g, ProblemKind::DS, c.k, c.ell);
    const auto res = solve_pds_dp(c.g, c.k, c.ell);
    CHECK(res.optimum == want);
    check_witness(c.g, ProblemKind::DS, c.k, c.ell, res.witness, want);
  }
}

TEST_CASE("DP stays within the bag profile count") {
  const auto g = gen_random(4, 8, 0.4, 99);
  const auto res = solve_pvc_dp(g, 1, 1);
  REQUIRE(res.stats.profiles_per_step.size() == 8);
  for (size_t i = 0; i < 8; ++i)
    CHECK(res.stats.profiles_per_step[i] <= profile_count(1, 1, res.stats.bag_sizes[i]));
  DpOptions tight;
  tight.budget = 5;
  CHECK_THROWS_AS(solve_pvc_dp(gen_random(4, 8, 0.9, 1), 1, 1, tight), BudgetExceeded);
}

TEST_CASE("preprocessing removes isolated and short-lived vertices") {
  TemporalGraph iso(3, {{{1, 2}}, {}, {{1, 2}}, {}, {{1, 2}}});
  auto [inst, led] = preprocess_pvc(iso, 1, 0, 3);
  REQUIRE(led.removed.size() >= 1);
  CHECK(led.removed.front().v == 3);
  CHECK(led.removed.front().reason == "isolated");
  CHECK(led.credit == 0);
  CHECK(inst.t == 3);

  // Vertex 3 only touches edges in steps 4..6: 3 bags < k(ell+1)+1 = 4.
  TemporalGraph g(3, {{{1, 2}}, {{1, 2}}, {{1, 2}}, {{1, 3}}, {{2, 3}, {1, 2}}, {{1, 3}}, {{1, 2}}});
  auto [red, l2] = preprocess_pvc(g, 1, 2, 10);
  const auto it = std::find_if(l2.removed.begin(), l2.removed.end(), [](auto& r) { return r.v == 3; });
  REQUIRE(it != l2.removed.end());
  CHECK(it->reason == "short-lifetime");
  Timeline expect;
  expect.add(3, 4, 6);
  CHECK(l2.forced_intervals == expect);
  CHECK(l2.credit == 3);
  CHECK(red.t == 7);
  CHECK(red.graph.total_temporal_edges() == g.total_temporal_edges() - 3);
}

TEST_CASE("preprocessing preserves the oracle answer") {
  for (const auto& c : fixtures::random_grid(300, 13, 4, 4)) {
    CAPTURE(c.seed);
    const Count opt = oracle_opt(c.g, ProblemKind::VC, c.k, c.ell);
    for (Count t : {opt, opt + 1}) {
      auto [red, led] = preprocess_pvc(c.g, c.k, c.ell, t);
      CHECK(oracle_solve(red).decision == (t <= opt));
      auto [red2, led2] = reduce_large_bags_pvc(c.g, c.k, c.ell, t);
      CHECK(oracle_solve(red2).decision == (t <= opt));
    }
  }
}

TEST_CASE("large-bag reduction") {
  // Nothing sits inside a run of large bags.
  TemporalGraph span(2, {{{1, 2}}, {}, {{1, 2}}});
  auto [same, led] = reduce_large_bags_pvc(span, 1, 0, 2);
  CHECK(led.removed.empty());
  CHECK(same.graph == span);
  CHECK(same.t == 2);

  // A large matching flanked by empty snapshots is credited entirely.
  TemporalGraph matching(8, {{}, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}, {}});
  auto [rest, l2] = reduce_large_bags_pvc(matching, 1, 0, 4);
  CHECK(l2.removed.size() == 8);
  for (const auto& r : l2.removed) CHECK(r.reason == "large-run");
  CHECK(l2.credit == 4);
  CHECK(rest.t == 0);
  CHECK(rest.graph.total_temporal_edges() == 0);
}

TEST_CASE("dominating-set decision with the large-bag rule") {
  TemporalGraph g(3, {{{1, 2}}, {}, {{2, 3}}});
  auto fit = solve_ds_vimw_x(g, 1, 2);
  CHECK(fit.decision);
  CHECK(fit.reason == "fits");
  REQUIRE(fit.witness);
  CHECK(verify(make(g, ProblemKind::DS, 1, 2), *fit.witness).satisfies_instance);

  // Vertex 3 lives in one step that is the largest bag; it must self-dominate
  // both isolated steps 1 and 3 with a single length-0 interval.
  TemporalGraph h(3, {{{1, 2}}, {{1, 2}, {2, 3}}, {{1, 2}}});
  auto no = solve_ds_vimw_x(h, 1, 0);
  CHECK_FALSE(no.decision);
  CHECK(no.forced_vertices >= 1);
  CHECK_FALSE(oracle_solve(make(h, ProblemKind::DS, 1, 0)).decision);

  TemporalGraph iso(2, {{}, {}, {}});
  CHECK(solve_ds_vimw_x(iso, 1, 0).reason == "isolated-vertex");
}

TEST_CASE("dominating-set decision matches the oracle on the random grid") {
  int with_forced = 0;
  for (const auto& c : fixtures::random_grid(600, 14)) {
    CAPTURE(c.seed);
    const bool want = oracle_solve(make(c.g, ProblemKind::DS, c.k, c.ell)).decision;
    const auto got = solve_ds_vimw_x(c.g, c.k, c.ell);
    CHECK(got.decision == want);
    CHECK(got.witness.has_value() == got.decision);
    if (got.witness) CHECK(verify(make(c.g, ProblemKind::DS, c.k, c.ell), *got.witness).satisfies_instance);
    with_forced += got.forced_vertices > 0;
  }
  CHECK(with_forced > 0);
}
