#pragma once

#include "centdian/graph.hpp"
#include "centdian/models.hpp"

namespace centdian {

// Image of a domination instance: the metric closure of the unit-weighted
// graph together with the facility count and the value bound that make the
// two decision problems equivalent.
struct ReductionOutput {
  PdpInstance reduced;
  Index p;
  Scalar u_bound;
};

// Unit lengths on the original edges, shortest-path lengths elsewhere;
// p = kappa and u_bound = n - kappa + 1. Edge weights of g are ignored.
ReductionOutput dsp_to_pdp(const Graph& g, Index kappa);

// Exhaustively confirms the equivalence on one instance: g has a dominating
// set of size at most kappa iff the reduced optimum stays within u_bound.
// A correct reduction makes this true for every input.
bool verify_equivalence(const Graph& g, Index kappa);

}  // namespace centdian
