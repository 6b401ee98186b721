#pragma once

#include <vector>

#include "centdian/types.hpp"

namespace centdian {

enum class Relation { LessEqual, Equal, GreaterEqual };

// Dense LP in minimization form:
//   min c'x  s.t.  A x {<=,=,>=} b,  lower <= x <= upper.
// Bounds may be -inf / +inf; everything else must be finite.
struct LpModel {
  Index num_vars = 0;
  Vector objective;          // length num_vars
  Matrix constraint_matrix;  // num_constraints x num_vars
  std::vector<Relation> relations;
  Vector rhs;
  Vector lower;
  Vector upper;

  explicit LpModel(Index nvars);

  Index num_constraints() const { return static_cast<Index>(constraint_matrix.rows()); }

  // Convenience for small hand-built models; larger builders should size
  // constraint_matrix up front.
  void add_constraint(const Vector& coeffs, Relation rel, Scalar b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective_value = 0;
  Vector values;  // length num_vars when Optimal, empty otherwise
};

// Two-phase primal simplex on the dense standard form. Dantzig pricing with
// lowest-index tie-breaks; Bland's rule takes over permanently once the
// degenerate-pivot budget (10 * num_vars) is spent. Deterministic: identical
// models give bit-identical solutions.
//
// Throws MalformedModel on dimension mismatches or non-finite data and
// NumericalFailure if the iteration cap is exhausted or a returned basis
// fails the feasibility re-check.
LpSolution solve_lp(const LpModel& m);

}  // namespace centdian
