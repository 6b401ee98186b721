#pragma once

#include <cstdint>
#include <string>

#include "centdian/graph.hpp"

namespace centdian {

// Instance text: optional '#' comment lines, a header "n m", then m lines
// "u v w" with 0-based endpoints and a nonnegative decimal weight.
Graph parse_instance(const std::string& text);
std::string format_instance(const Graph& g);

enum class InstanceKind { Gnp, Euclidean };

struct GenParams {
  Index n = 0;
  double edge_prob = 0.5;  // gnp: probability of keeping each pair
  int weight_min = 1;      // gnp: integer weight range
  int weight_max = 9;
  int grid = 100;  // euclidean: points on the [0,grid]^2 integer lattice
};

// Seeded generator with a fixed algorithm, so identical parameters produce
// bit-identical instances on every platform. Gnp graphs are patched to
// connectivity along a random spanning permutation; euclidean instances are
// complete graphs over distinct lattice points with weights
// round(1000 * distance).
Graph generate_instance(InstanceKind kind, const GenParams& params,
                        std::uint64_t seed);

}  // namespace centdian
