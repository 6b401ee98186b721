#pragma once

#include <span>
#include <vector>

#include "centdian/types.hpp"

namespace centdian {

struct Edge {
  Index u = 0;
  Index v = 0;
  Scalar w = 0;  // nonnegative length
};

// Simple connected undirected graph with nonnegative edge lengths.
// Vertices are dense 0-based indices; external names are mapped at the
// I/O boundary. Construction validates every invariant and throws
// ValidationError / DisconnectedGraph on bad input.
class Graph {
 public:
  Graph(Index n, std::vector<Edge> edges);

  Index n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  Index n_ = 0;
  std::vector<Edge> edges_;
};

// Metric closure of a graph: exact all-pairs shortest-path lengths.
// Symmetric, zero diagonal, finite everywhere (the host graph is connected).
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Matrix d);

  Index n() const { return static_cast<Index>(d_.rows()); }
  Scalar operator()(Index i, Index j) const { return d_(i, j); }
  const Matrix& matrix() const { return d_; }

 private:
  Matrix d_;
};

// Score of a candidate vertex set H over all of V: the maximum and the sum
// of d(v,H). The combined centdian value is always the exact sum of the two.
struct CentdianEvaluation {
  Scalar eccentricity = 0;
  Scalar median = 0;

  Scalar centdian() const { return eccentricity + median; }
};

// All-pairs shortest paths by the cubic dynamic program over the full
// matrix (Floyd-Warshall). Throws DisconnectedGraph if any pair stays
// unreachable.
DistanceMatrix metric_closure(const Graph& g);

// min over u in h of d(v,u). h must be nonempty with valid indices.
Scalar distance_to_set(const DistanceMatrix& dm, Index v, std::span<const Index> h);

// Eccentricity and median-distance of h, taken over every vertex of the
// graph (members of h contribute 0 to both).
CentdianEvaluation evaluate(const DistanceMatrix& dm, std::span<const Index> h);

}  // namespace centdian
