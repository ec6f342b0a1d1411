#include "timeline/kernel.hpp"

#include <stdexcept>

#include "timeline/params.hpp"

namespace timeline {

KernelOutcome kernelize_ds(const TemporalGraph& g, int k, int ell) {
  if (k < 1 || ell < 0) throw std::invalid_argument("kernel: need k >= 1 and ell >= 0");
  KernelOutcome out;
  out.n = g.num_vertices();
  out.T = g.lifetime();
  out.q = max_snapshot_edges(g);
  const Count n = out.n, T = out.T, q = out.q;
  const Count span = Count(k) * (ell + 1);

  auto answer = [&](bool yes, const char* label) {
    out.kind = KernelOutcome::Kind::Answer;
    out.decision = yes;
    out.reason = label;
    if (yes) out.witness = tiling_timeline(out.n, out.T, k, ell);
    return out;
  };
  auto reduced = [&](const char* label) {
    out.kind = KernelOutcome::Kind::Reduced;
    out.reason = label;
    out.reduced = g;
    return out;
  };

  // Case 1: every snapshot needs an active vertex, and n <= 2q vertices own
  // at most 2qk(ell+1) activity steps in total.
  if (2 * q >= n) {
    if (T > 2 * q * span) return answer(false, "case1-too-many-snapshots");
    return reduced("case1-reduced");
  }
  // Case 2.1: a snapshot with fewer than n/2 edges needs more than n/2 active
  // vertices, so fewer than 2k(ell+1) snapshots can be served.
  if (T > 2 * span) return answer(false, "case2.1-too-many-snapshots");
  // Case 2.2.
  if (n <= 4 * q * span) return reduced("case2.2-reduced");
  // At most 2qT <= 4qk(ell+1) < n vertices ever see an edge, so some vertex is
  // isolated throughout and must dominate itself in every step.
  if (T >= span + 1) return answer(false, "case2.2-isolated-vertex");
  return answer(true, "case2.2-fits");
}

}  // namespace timeline
