#pragma once

#include <string>
#include <utility>

#include "centdian/graph.hpp"
#include "centdian/simplex.hpp"

namespace centdian {

// Choose exactly p facility vertices minimizing eccentricity + median.
struct PdpInstance {
  DistanceMatrix dm;
  Index p;

  PdpInstance(DistanceMatrix dm_, Index p_);
  Index n() const { return dm.n(); }
};

// Choose a minimum-cardinality vertex set whose value stays within budget.
struct CdpInstance {
  DistanceMatrix dm;
  Scalar budget;

  CdpInstance(DistanceMatrix dm_, Scalar budget_);
  Index n() const { return dm.n(); }
};

// Primal solution of the relaxation: facility weights y in [0,1]^n,
// assignment weights x (row i distributes vertex i over facilities),
// the eccentricity variable c, and the optimal objective.
struct FractionalSolution {
  Vector y;
  Matrix x;
  Scalar c = 0;
  Scalar objective = 0;
};

// Variable layout shared by the relaxation and the integer-program export:
// x(i,j) first in row-major order, then y(j), then the eccentricity variable.
inline Index x_var(Index i, Index j, Index n) { return i * n + j; }
inline Index y_var(Index j, Index n) { return n * n + j; }
inline Index ecc_var(Index n) { return n * n + n; }

// LP relaxation of the facility integer program: minimize total assignment
// cost plus the eccentricity bound, subject to unit row sums, exactly p
// facilities in weight, assignment covered by open facilities, and per-row
// cost at most the eccentricity variable. All x and y boxed to [0,1].
LpModel build_lp_relaxation(const PdpInstance& inst);

// Solve the relaxation and unpack the primal point. The relaxation is always
// feasible and bounded; anything but Optimal is a NumericalFailure.
FractionalSolution solve_relaxation(const PdpInstance& inst);

// Cheapest assignment for fixed facility weights y: each row is filled by
// increasing distance (ties by vertex index) until it sums to one. Returns
// the assignment matrix and the maximum row cost. Throws InvalidFractional
// if y is out of range or sums below one.
std::pair<Matrix, Scalar> lemma1_assignment(const DistanceMatrix& dm,
                                            const Vector& y, Index p);

// Integer programs in CPLEX LP file format for external cross-validation.
// Variables are named x_i_j, y_j, and C.
std::string export_pdp_ilp(const PdpInstance& inst);
std::string export_cdp_ilp(const CdpInstance& inst);

}  // namespace centdian
