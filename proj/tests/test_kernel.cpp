#include "doctest.h"
#include "support.hpp"
#include "timeline/kernel.hpp"
#include "timeline/oracle.hpp"

using namespace timeline;

TEST_CASE("edgeless instances are answered directly") {
  TemporalGraph fits(3, {{}, {}, {}, {}});
  auto yes = kernelize_ds(fits, 2, 1);
  CHECK(yes.kind == KernelOutcome::Kind::Answer);
  CHECK(yes.decision);
  REQUIRE(yes.witness);
  CHECK(verify(fixtures::make(fits, ProblemKind::DS, 2, 1), *yes.witness).satisfies_instance);

  TemporalGraph too_long(3, {{}, {}, {}, {}, {}});
  auto no = kernelize_ds(too_long, 2, 1);
  CHECK(no.kind == KernelOutcome::Kind::Answer);
  CHECK_FALSE(no.decision);
  CHECK_FALSE(no.witness);
}

TEST_CASE("kernel answers agree with the oracle and reduced outcomes are small") {
  int answered = 0, reduced = 0;
  for (const auto& c : fixtures::random_grid(500, 21, 5, 7, 2, 2)) {
    CAPTURE(c.seed);
    const auto out = kernelize_ds(c.g, c.k, c.ell);
    const Count span = Count(c.k) * (c.ell + 1);
    if (out.kind == KernelOutcome::Kind::Reduced) {
      ++reduced;
      CHECK(Count(out.T) <= 2 * out.q * span);
      CHECK(Count(out.n) <= 4 * out.q * span);
      REQUIRE(out.reduced);
      CHECK(*out.reduced == c.g);
      continue;
    }
    ++answered;
    const auto inst = fixtures::make(c.g, ProblemKind::DS, c.k, c.ell);
    if (oracle_search_space(c.g.num_vertices(), c.g.lifetime(), c.k) <= 1e7)
      CHECK(out.decision == oracle_solve(inst).decision);
    if (out.decision) {
      REQUIRE(out.witness);
      CHECK(verify(inst, *out.witness).satisfies_instance);
    }
  }
  CHECK(answered > 0);
  CHECK(reduced > 0);
}

TEST_CASE("kernel rejects bad parameters") {
  CHECK_THROWS(kernelize_ds(TemporalGraph(1, {{}}), 0, 0));
}
