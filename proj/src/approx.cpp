#include "centdian/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "centdian/errors.hpp"

namespace centdian {

namespace {

void check_epsilon(Scalar epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0)
    throw InvalidParams("epsilon must be positive and finite");
}

}  // namespace

NeighborhoodStructure build_neighborhoods(const FractionalSolution& frac,
                                          const DistanceMatrix& dm,
                                          Scalar epsilon) {
  check_epsilon(epsilon);
  const Index n = dm.n();
  if (frac.x.rows() != n || frac.x.cols() != n || frac.y.size() != n)
    throw InvalidFractional("fractional solution does not match the metric");

  NeighborhoodStructure ns;
  ns.epsilon = epsilon;
  ns.dtilde = dm.matrix().cwiseProduct(frac.x).rowwise().sum();
  ns.neighborhoods.resize(n);
  for (Index i = 0; i < n; ++i) {
    const Scalar reach = (1 + epsilon) * ns.dtilde(i) + kPivotTol;
    for (Index j = 0; j < n; ++j)
      if (dm(i, j) <= reach) ns.neighborhoods[i].push_back(j);
  }
  return ns;
}

Scalar lemma2_margin(const NeighborhoodStructure& ns, const Vector& y) {
  Scalar margin = std::numeric_limits<Scalar>::infinity();
  for (const VertexSet& nb : ns.neighborhoods) {
    Scalar mass = 0;
    for (Index j : nb) mass += y(j);
    margin = std::min(margin, mass);
  }
  return margin;
}

SetCoverInstance build_cover_instance(const NeighborhoodStructure& ns,
                                      const Vector& y) {
  const Index n = static_cast<Index>(ns.neighborhoods.size());
  std::vector<std::vector<char>> member(n, std::vector<char>(n, 0));
  for (Index i = 0; i < n; ++i)
    for (Index j : ns.neighborhoods[i]) member[i][j] = 1;

  SetCoverInstance sc;
  sc.universe_size = n;
  for (Index j = 0; j < n; ++j) {
    if (y(j) <= kPivotTol) continue;  // noise floor: treat as closed
    VertexSet elems;
    for (Index i = 0; i < n; ++i)
      if (member[i][j]) elems.push_back(i);
    sc.sets.emplace_back(j, std::move(elems));
  }
  return sc;
}

SetCoverSolution greedy_set_cover(const SetCoverInstance& sc) {
  const Index n = sc.universe_size;
  std::vector<char> coverable(n, 0);
  for (const auto& [label, elems] : sc.sets)
    for (Index e : elems) {
      if (e < 0 || e >= n) throw InvalidParams("set element outside universe");
      coverable[e] = 1;
    }
  for (Index e = 0; e < n; ++e)
    if (!coverable[e])
      throw UncoverableElement("element " + std::to_string(e) +
                               " appears in no set");

  std::vector<char> covered(n, 0);
  Index remaining = n;
  SetCoverSolution chosen;
  while (remaining > 0) {
    Index best = -1;
    Index best_gain = 0;
    for (Index s = 0; s < static_cast<Index>(sc.sets.size()); ++s) {
      Index gain = 0;
      for (Index e : sc.sets[s].second)
        if (!covered[e]) ++gain;
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 &&
           sc.sets[s].first < sc.sets[best].first))
        best = s, best_gain = gain;
    }
    chosen.push_back(sc.sets[best].first);
    for (Index e : sc.sets[best].second) {
      if (!covered[e]) --remaining;
      covered[e] = 1;
    }
  }
  return chosen;
}

ApproxResult apx_pdp(const PdpInstance& inst, Scalar epsilon) {
  check_epsilon(epsilon);
  const Index n = inst.n();

  const FractionalSolution frac = solve_relaxation(inst);
  const NeighborhoodStructure ns = build_neighborhoods(frac, inst.dm, epsilon);
  if (lemma2_margin(ns, frac.y) <= epsilon / (1 + epsilon) - kPivotTol)
    throw NumericalFailure("neighborhood facility mass below guaranteed bound");

  const SetCoverSolution labels =
      greedy_set_cover(build_cover_instance(ns, frac.y));

  ApproxResult r;
  r.solution = labels;
  std::sort(r.solution.begin(), r.solution.end());
  r.evaluation = evaluate(inst.dm, r.solution);
  r.lp_lower_bound = frac.objective;
  r.cardinality_bound = (1 + 1 / epsilon) *
                        (std::log(static_cast<Scalar>(n)) + 1) *
                        static_cast<Scalar>(inst.p);
  return r;
}

ApproxResult apx_cdp(const CdpInstance& inst, Scalar epsilon) {
  check_epsilon(epsilon);
  const Index n = inst.n();
  const Scalar target = (1 + epsilon) * inst.budget;

  for (Index p = 1; p < n; ++p) {
    ApproxResult r = apx_pdp(PdpInstance(inst.dm, p), epsilon);
    if (r.evaluation.centdian() <= target) return r;
  }

  // the full vertex set costs nothing and needs no relaxation
  ApproxResult r;
  r.solution.resize(n);
  std::iota(r.solution.begin(), r.solution.end(), Index{0});
  r.evaluation = evaluate(inst.dm, r.solution);
  r.lp_lower_bound = 0;
  r.cardinality_bound = (1 + 1 / epsilon) *
                        (std::log(static_cast<Scalar>(n)) + 1) *
                        static_cast<Scalar>(n);
  return r;
}

}  // namespace centdian
