#pragma once

#include <cstdint>

#include "centdian/graph.hpp"
#include "centdian/models.hpp"

namespace centdian {

inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;

// Outcome of an exhaustive search: the lexicographically smallest optimal
// set, its evaluation, and how many subsets were inspected on the way.
struct ExactResult {
  VertexSet solution;
  CentdianEvaluation evaluation;
  std::uint64_t subsets_examined = 0;
};

// Enumerate all p-subsets in lexicographic order and keep the first set
// attaining the minimum value. Throws InstanceTooLarge when the subset
// count exceeds the cap.
ExactResult solve_pdp_exact(const PdpInstance& inst,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Sweep cardinalities k = 1, 2, ... and return the first (hence
// lexicographically smallest) k-subset with value within budget. The full
// vertex set evaluates to zero, so the sweep always terminates.
ExactResult solve_cdp_exact(const CdpInstance& inst,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Minimum dominating set by the same cardinality sweep, smallest witness
// first. Bitmask-based, limited to 20 vertices.
VertexSet solve_dsp_exact(const Graph& g);

}  // namespace centdian
