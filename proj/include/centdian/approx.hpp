#pragma once

#include <utility>
#include <vector>

#include "centdian/graph.hpp"
#include "centdian/models.hpp"

namespace centdian {

// Fractional service radii and the vertices within their inflated reach:
// dtilde(i) is the assignment cost of vertex i, and neighborhoods[i] holds
// every j with d(i,j) <= (1+epsilon) * dtilde(i), ascending.
struct NeighborhoodStructure {
  Vector dtilde;
  Scalar epsilon = 0;
  std::vector<VertexSet> neighborhoods;
};

// Covering formulation: one element per vertex, one candidate set per
// facility label j carrying the vertices whose neighborhood contains j.
struct SetCoverInstance {
  Index universe_size = 0;
  std::vector<std::pair<Index, VertexSet>> sets;
};

using SetCoverSolution = std::vector<Index>;

struct ApproxResult {
  VertexSet solution;
  CentdianEvaluation evaluation;
  Scalar lp_lower_bound = 0;
  Scalar cardinality_bound = 0;
};

NeighborhoodStructure build_neighborhoods(const FractionalSolution& frac,
                                          const DistanceMatrix& dm,
                                          Scalar epsilon);

// Smallest facility weight found inside any neighborhood; stays above
// epsilon/(1+epsilon) for weights coming from the relaxation.
Scalar lemma2_margin(const NeighborhoodStructure& ns, const Vector& y);

// One candidate set per facility with weight above the noise floor.
SetCoverInstance build_cover_instance(const NeighborhoodStructure& ns,
                                      const Vector& y);

// Textbook greedy: repeatedly take the set covering the most uncovered
// elements, ties by smallest label. Throws UncoverableElement when some
// element appears in no set.
SetCoverSolution greedy_set_cover(const SetCoverInstance& sc);

// Relaxation, neighborhoods, greedy cover, then a true re-evaluation of the
// chosen facilities on the metric.
ApproxResult apx_pdp(const PdpInstance& inst, Scalar epsilon);

// Smallest p whose approximate solution stays within (1+epsilon) of the
// budget; falls back to the full vertex set, which costs nothing.
ApproxResult apx_cdp(const CdpInstance& inst, Scalar epsilon);

}  // namespace centdian
