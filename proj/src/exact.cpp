#include "centdian/exact.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

#include "centdian/errors.hpp"

namespace centdian {

namespace {

// True if C(n,k) > cap, with exact integer arithmetic and early saturation.
// The partial products are themselves binomials and grow monotonically, so
// bailing out as soon as one exceeds the cap is safe.
bool combinations_exceed(Index n, Index k, std::uint64_t cap) {
  if (k < 0 || k > n) return false;  // zero subsets
  const std::uint64_t kk = std::min<std::uint64_t>(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n) - kk + i;
    if (c > std::numeric_limits<std::uint64_t>::max() / num) return true;
    c = c * num / i;
    if (c > cap) return true;
  }
  return false;
}

// Visit all p-subsets of {0..n-1} in lexicographic order until f returns
// true. f receives the members in ascending order.
template <typename F>
void for_each_combination(Index n, Index p, F&& f) {
  VertexSet h(p);
  std::iota(h.begin(), h.end(), Index{0});
  while (true) {
    if (f(h)) return;
    Index i = p - 1;
    while (i >= 0 && h[i] == n - p + i) --i;
    if (i < 0) return;
    ++h[i];
    for (Index j = i + 1; j < p; ++j) h[j] = h[j - 1] + 1;
  }
}

}  // namespace

ExactResult solve_pdp_exact(const PdpInstance& inst, std::uint64_t cap) {
  const Index n = inst.n();
  if (combinations_exceed(n, inst.p, cap))
    throw InstanceTooLarge("subset count exceeds the enumeration cap");

  ExactResult best;
  bool first = true;
  for_each_combination(n, inst.p, [&](const VertexSet& h) {
    ++best.subsets_examined;
    const CentdianEvaluation eval = evaluate(inst.dm, h);
    if (first || eval.centdian() < best.evaluation.centdian()) {
      best.solution = h;
      best.evaluation = eval;
      first = false;
    }
    return false;
  });
  return best;
}

ExactResult solve_cdp_exact(const CdpInstance& inst, std::uint64_t cap) {
  const Index n = inst.n();
  ExactResult out;
  for (Index k = 1; k <= n; ++k) {
    if (combinations_exceed(n, k, cap - out.subsets_examined))
      throw InstanceTooLarge("subset count exceeds the enumeration cap");
    bool found = false;
    for_each_combination(n, k, [&](const VertexSet& h) {
      ++out.subsets_examined;
      const CentdianEvaluation eval = evaluate(inst.dm, h);
      if (eval.centdian() <= inst.budget) {
        out.solution = h;
        out.evaluation = eval;
        found = true;
        return true;
      }
      return false;
    });
    if (found) return out;
  }
  // the k = n iteration evaluates to zero, within any positive budget
  throw NumericalFailure("internal: no feasible cardinality found");
}

VertexSet solve_dsp_exact(const Graph& g) {
  const Index n = g.n();
  if (n > 20)
    throw InstanceTooLarge("dominating-set search is limited to 20 vertices");

  std::vector<std::uint32_t> closed(n);
  for (Index v = 0; v < n; ++v) closed[v] = std::uint32_t{1} << v;
  for (const Edge& e : g.edges()) {
    closed[e.u] |= std::uint32_t{1} << e.v;
    closed[e.v] |= std::uint32_t{1} << e.u;
  }
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;

  for (Index k = 1; k < n; ++k) {
    VertexSet witness;
    for_each_combination(n, k, [&](const VertexSet& h) {
      std::uint32_t covered = 0;
      for (Index v : h) covered |= closed[v];
      if (covered == all) {
        witness = h;
        return true;
      }
      return false;
    });
    if (!witness.empty()) return witness;
  }
  VertexSet everything(n);
  std::iota(everything.begin(), everything.end(), Index{0});
  return everything;
}

}  // namespace centdian
