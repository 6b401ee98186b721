#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace centdian {

// All distances, objectives, and LP coefficients are 64-bit floats.
// Instance weights are recommended integral so derived sums stay exact.
using Scalar = double;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = int;

// Canonical form: indices sorted ascending, no duplicates.
using VertexSet = std::vector<Index>;

// The two numerical constants everything else derives from.
// kPivotTol guards simplex pivots and doubles as the generic noise floor
// (LP support detection, neighborhood membership slack).
// kFeasTol is the constraint-satisfaction tolerance on returned solutions.
inline constexpr Scalar kPivotTol = 1e-9;
inline constexpr Scalar kFeasTol = 1e-7;

}  // namespace centdian
