#include "centdian/reductions.hpp"

#include <vector>

#include "centdian/errors.hpp"
#include "centdian/exact.hpp"

namespace centdian {

ReductionOutput dsp_to_pdp(const Graph& g, Index kappa) {
  const Index n = g.n();
  if (kappa <= 0 || kappa >= n)
    throw InvalidKappa("kappa must satisfy 0 < kappa < n");

  std::vector<Edge> unit;
  unit.reserve(g.edges().size());
  for (const Edge& e : g.edges()) unit.push_back({e.u, e.v, 1});
  const DistanceMatrix dm = metric_closure(Graph(n, std::move(unit)));

  return ReductionOutput{PdpInstance(dm, kappa), kappa,
                         static_cast<Scalar>(n - kappa + 1)};
}

bool verify_equivalence(const Graph& g, Index kappa) {
  const Index n = g.n();
  if (n > 12)
    throw InstanceTooLarge("equivalence check is limited to 12 vertices");

  const ReductionOutput out = dsp_to_pdp(g, kappa);
  const bool dominated =
      static_cast<Index>(solve_dsp_exact(g).size()) <= kappa;
  const bool within =
      solve_pdp_exact(out.reduced).evaluation.centdian() <= out.u_bound + 1e-9;
  return dominated == within;
}

}  // namespace centdian
