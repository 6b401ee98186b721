#include "centdian/graph.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "centdian/errors.hpp"

namespace centdian {

namespace {

// Union-find over dense indices, only used for the connectivity check.
class DisjointSets {
 public:
  explicit DisjointSets(Index n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Index> parent_;
};

}  // namespace

Graph::Graph(Index n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw ValidationError("graph must have at least one vertex");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw ValidationError("edge endpoint out of range: (" + std::to_string(e.u) +
                            "," + std::to_string(e.v) + ") with n=" + std::to_string(n_));
    }
    if (e.u == e.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    }
    if (!(e.w >= 0) || !std::isfinite(e.w)) {
      throw NegativeWeight("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") has invalid length");
    }
  }
  DisjointSets dsu(n_);
  Index components = n_;
  for (const Edge& e : edges_) {
    if (dsu.unite(e.u, e.v)) --components;
  }
  if (components != 1) {
    throw DisconnectedGraph("graph is disconnected (" + std::to_string(components) +
                            " components)");
  }
}

DistanceMatrix::DistanceMatrix(Matrix d) : d_(std::move(d)) {}

DistanceMatrix metric_closure(const Graph& g) {
  const Index n = g.n();
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
  Matrix d = Matrix::Constant(n, n, inf);
  d.diagonal().setZero();
  for (const Edge& e : g.edges()) {
    const Scalar w = std::min(e.w, d(e.u, e.v));  // parallel edges: keep the shortest
    d(e.u, e.v) = w;
    d(e.v, e.u) = w;
  }
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      const Scalar dik = d(i, k);
      if (dik == inf) continue;
      d.row(i) = d.row(i).cwiseMin((d.row(k).array() + dik).matrix());
    }
  }
  if (!d.allFinite()) throw DisconnectedGraph("unreachable vertex pair in metric closure");
  return DistanceMatrix(std::move(d));
}

Scalar distance_to_set(const DistanceMatrix& dm, Index v, std::span<const Index> h) {
  if (h.empty()) throw EmptySet("distance_to_set: candidate set is empty");
  if (v < 0 || v >= dm.n()) throw ValidationError("distance_to_set: vertex out of range");
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (Index u : h) {
    if (u < 0 || u >= dm.n()) throw ValidationError("distance_to_set: member out of range");
    best = std::min(best, dm(v, u));
  }
  return best;
}

CentdianEvaluation evaluate(const DistanceMatrix& dm, std::span<const Index> h) {
  if (h.empty()) throw EmptySet("evaluate: candidate set is empty");
  for (Index u : h) {
    if (u < 0 || u >= dm.n()) throw ValidationError("evaluate: member out of range");
  }
  const std::vector<Index> cols(h.begin(), h.end());
  const Vector nearest = dm.matrix()(Eigen::all, cols).rowwise().minCoeff();
  return CentdianEvaluation{nearest.maxCoeff(), nearest.sum()};
}

}  // namespace centdian
