#pragma once

#include <cstdint>
#include <optional>

#include "magic/factorization.hpp"
#include "magic/graph.hpp"
#include "magic/labeling.hpp"
#include "magic/spectrum.hpp"

namespace magic {

enum class ConstructStatus {
  Found,      // labeling returned and verified
  Absent,     // c is provably not a magic sum; the trace names the reason
  Undecided,  // no rule applied and the solver budget ran out
};

std::string to_string(ConstructStatus s);

struct ConstructOptions {
  PredictOptions predict;
  // Allows the exhaustive solver as the last rule.
  bool solver_fallback = true;
};

struct ConstructResult {
  ConstructStatus status = ConstructStatus::Undecided;
  std::optional<EdgeLabeling> labeling;
  ConstructionTrace trace;
};

// Builds a c-sum k-magic labeling of the regular graph g, component by
// component, with the first applicable construction. Every returned labeling
// has been checked with verify and equals replay(g, k, trace). For k >= 2, c
// must lie in [0, k). Throws InvalidInput for a non-regular or edgeless
// graph or k < 1.
ConstructResult construct(const MultiGraph& g, std::int64_t k, Label c,
                          const ConstructOptions& opts = {});

}  // namespace magic
