#pragma once

// Shared test fixtures: small named graphs plus hand-rolled random
// generators and bitmask brute-force oracles. The oracles here iterate in
// bitmask order on purpose so they share nothing with the library's
// lexicographic subset enumeration.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "centdian/graph.hpp"

namespace testutil {

using centdian::Edge;
using centdian::Graph;
using centdian::Index;
using centdian::Scalar;
using centdian::VertexSet;

inline Graph make_graph(Index n, std::vector<Edge> edges) {
  return Graph(n, std::move(edges));
}

// Path 0-1-2-3 with unit edges plus the dominated chord (0,3) of length 5.
inline Graph path4_chord() {
  return make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 5}});
}

// Star K_{1,k}: center 0, leaves 1..k, unit edges.
inline Graph star(Index k) {
  std::vector<Edge> edges;
  for (Index i = 1; i <= k; ++i) edges.push_back({0, i, 1});
  return make_graph(k + 1, std::move(edges));
}

// Cycle 0-1-...-(n-1)-0 with unit edges.
inline Graph cycle(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return make_graph(n, std::move(edges));
}

// Path 0-1-...-(n-1) with unit edges.
inline Graph path(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return make_graph(n, std::move(edges));
}

// Random connected graph: each pair kept with probability edge_prob,
// then missing connectivity patched along a random vertex permutation.
// Integer weights in [wmin, wmax].
inline Graph random_connected_graph(std::mt19937_64& rng, Index n,
                                    double edge_prob = 0.4, int wmin = 1,
                                    int wmax = 9) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(wmin, wmax);
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      if (coin(rng) < edge_prob) {
        edges.push_back({u, v, static_cast<Scalar>(weight(rng))});
        present[u][v] = true;
      }
    }
  }
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Index> parent(n);
  for (Index i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  for (Index i = 1; i < n; ++i) {
    Index a = order[i - 1], b = order[i];
    if (find(a) != find(b)) {
      parent[find(a)] = find(b);
      Index u = std::min(a, b), v = std::max(a, b);
      if (!present[u][v]) edges.push_back({u, v, static_cast<Scalar>(weight(rng))});
    }
  }
  return make_graph(n, std::move(edges));
}

// Every p-subset of 0..n-1 via bitmasks; calls f(sorted members).
template <typename F>
void for_each_mask_subset(Index n, Index p, F&& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    VertexSet members;
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    f(members);
  }
}

// Brute-force pDP optimum: minimum centdian value over all p-subsets and
// the lexicographically smallest subset attaining it.
struct BruteForceResult {
  VertexSet solution;
  Scalar value = 0;
};

inline BruteForceResult brute_force_pdp(const centdian::DistanceMatrix& dm, Index p) {
  BruteForceResult best;
  bool first = true;
  for_each_mask_subset(dm.n(), p, [&](const VertexSet& h) {
    const Scalar value = centdian::evaluate(dm, h).centdian();
    if (first || value < best.value ||
        (value == best.value && h < best.solution)) {
      best = {h, value};
      first = false;
    }
  });
  return best;
}

}  // namespace testutil
