#pragma once

#include <optional>
#include <string>

#include "timeline/core.hpp"

namespace timeline {

struct KernelOutcome {
  enum class Kind { Answer, Reduced };
  Kind kind = Kind::Reduced;
  bool decision = false;          // Answer only
  std::string reason;             // case label
  std::optional<Timeline> witness;  // Answer yes only
  // Reduced only: the untouched instance, certified small.
  std::optional<TemporalGraph> reduced;
  int n = 0, T = 0, q = 0;
};

// Case analysis of the q + k + ell kernel for full dominating set. Either
// answers directly or certifies T <= 2qk(ell+1) and n <= 4qk(ell+1).
KernelOutcome kernelize_ds(const TemporalGraph& g, int k, int ell);

}  // namespace timeline
