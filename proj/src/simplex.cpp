#include "centdian/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "centdian/errors.hpp"

namespace centdian {

namespace {

constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

enum class ColKind { Structural, Slack, Artificial };

// How an original variable maps onto nonnegative standardized columns.
//   Shift:  x = base + x',  base = lower (finite)
//   Mirror: x = base - x',  base = upper (lower = -inf, upper finite)
//   Split:  x = x' - x'',   both bounds infinite
struct VarMap {
  enum Kind { Shift, Mirror, Split } kind = Shift;
  Index col = -1;
  Index neg_col = -1;
  Scalar base = 0;
};

void validate(const LpModel& m) {
  const Index rows = m.num_constraints();
  if (m.num_vars < 1) throw MalformedModel("model needs at least one variable");
  if (m.objective.size() != m.num_vars)
    throw MalformedModel("objective length != num_vars");
  if (m.constraint_matrix.cols() != m.num_vars && rows > 0)
    throw MalformedModel("constraint row length != num_vars");
  if (static_cast<Index>(m.relations.size()) != rows || m.rhs.size() != rows)
    throw MalformedModel("relations/rhs count != constraint count");
  if (m.lower.size() != m.num_vars || m.upper.size() != m.num_vars)
    throw MalformedModel("bounds length != num_vars");
  if (!m.objective.allFinite() || (rows > 0 && !m.constraint_matrix.allFinite()) ||
      (rows > 0 && !m.rhs.allFinite()))
    throw MalformedModel("non-finite coefficient in model");
  for (Index j = 0; j < m.num_vars; ++j) {
    if (std::isnan(m.lower(j)) || std::isnan(m.upper(j)) || m.lower(j) > m.upper(j))
      throw MalformedModel("invalid bounds on variable " + std::to_string(j));
  }
}

struct Tableau {
  Matrix t;                   // (m+1) x (ncols+1); last row = reduced costs
  std::vector<Index> basis;   // per row, column index of its basic variable
  std::vector<ColKind> kind;  // per column
  Index m = 0;
  Index ncols = 0;
  Index rhs_col = 0;
};

struct PivotState {
  long long iterations = 0;
  long long iteration_cap = 0;
  long long degenerate_pivots = 0;
  long long bland_threshold = 0;
  bool bland = false;
};

void pivot(Tableau& tab, Index r, Index q) {
  Matrix& t = tab.t;
  t.row(r) /= t(r, q);
  Vector colq = t.col(q);
  colq(r) = 0;
  t.noalias() -= colq * t.row(r);
  // Keep the basis column exact; roundoff here would leak into every later pivot.
  t.col(q).setZero();
  t(r, q) = 1;
  tab.basis[r] = q;
}

// Rebuild the reduced-cost row for the given raw column costs.
void install_costs(Tableau& tab, const Vector& costs) {
  Matrix& t = tab.t;
  t.row(tab.m).setZero();
  t.row(tab.m).head(tab.ncols) = costs.transpose();
  for (Index i = 0; i < tab.m; ++i) {
    const Scalar cb = t(tab.m, tab.basis[i]);
    if (cb != 0) t.row(tab.m) -= cb * t.row(i);
  }
}

enum class LoopResult { Optimal, Unbounded };

LoopResult run_simplex(Tableau& tab, const std::vector<bool>& enterable,
                       PivotState& st) {
  Matrix& t = tab.t;
  const Index m = tab.m;
  while (true) {
    Index q = -1;
    if (st.bland) {
      for (Index j = 0; j < tab.ncols && q < 0; ++j) {
        if (enterable[j] && t(m, j) < -kPivotTol) q = j;
      }
    } else {
      Scalar best = -kPivotTol;
      for (Index j = 0; j < tab.ncols; ++j) {
        if (enterable[j] && t(m, j) < best) {
          best = t(m, j);
          q = j;
        }
      }
    }
    if (q < 0) return LoopResult::Optimal;

    Index r = -1;
    Scalar best_ratio = kInf;
    for (Index i = 0; i < m; ++i) {
      if (t(i, q) <= kPivotTol) continue;
      const Scalar ratio = t(i, tab.rhs_col) / t(i, q);
      if (r < 0 || ratio < best_ratio ||
          (st.bland && ratio == best_ratio && tab.basis[i] < tab.basis[r])) {
        best_ratio = ratio;
        r = i;
      }
    }
    if (r < 0) return LoopResult::Unbounded;

    if (++st.iterations > st.iteration_cap) {
      throw NumericalFailure("simplex: no progress within iteration cap " +
                             std::to_string(st.iteration_cap));
    }
    if (best_ratio <= kPivotTol && ++st.degenerate_pivots > st.bland_threshold) {
      st.bland = true;
    }
    pivot(tab, r, q);
  }
}

}  // namespace

LpModel::LpModel(Index nvars)
    : num_vars(nvars),
      objective(Vector::Zero(nvars)),
      constraint_matrix(0, nvars),
      lower(Vector::Zero(nvars)),
      upper(Vector::Constant(nvars, kInf)) {
  rhs.resize(0);
}

void LpModel::add_constraint(const Vector& coeffs, Relation rel, Scalar b) {
  if (coeffs.size() != num_vars) throw MalformedModel("constraint row length != num_vars");
  const Index rows = num_constraints();
  constraint_matrix.conservativeResize(rows + 1, num_vars);
  constraint_matrix.row(rows) = coeffs.transpose();
  rhs.conservativeResize(rows + 1);
  rhs(rows) = b;
  relations.push_back(rel);
}

LpSolution solve_lp(const LpModel& m) {
  validate(m);

  // Map every variable onto nonnegative columns.
  std::vector<VarMap> vmap(m.num_vars);
  Index n_struct = 0;
  for (Index j = 0; j < m.num_vars; ++j) {
    VarMap& vm = vmap[j];
    if (m.lower(j) > -kInf) {
      vm = {VarMap::Shift, n_struct++, -1, m.lower(j)};
    } else if (m.upper(j) < kInf) {
      vm = {VarMap::Mirror, n_struct++, -1, m.upper(j)};
    } else {
      vm.kind = VarMap::Split;
      vm.col = n_struct++;
      vm.neg_col = n_struct++;
    }
  }

  // Transformed objective and its constant offset.
  Vector struct_costs = Vector::Zero(n_struct);
  Scalar cost_const = 0;
  for (Index j = 0; j < m.num_vars; ++j) {
    const VarMap& vm = vmap[j];
    const Scalar c = m.objective(j);
    switch (vm.kind) {
      case VarMap::Shift:
        struct_costs(vm.col) += c;
        cost_const += c * vm.base;
        break;
      case VarMap::Mirror:
        struct_costs(vm.col) -= c;
        cost_const += c * vm.base;
        break;
      case VarMap::Split:
        struct_costs(vm.col) += c;
        struct_costs(vm.neg_col) -= c;
        break;
    }
  }

  // Functional rows plus one bound row per finite upper bound of a shifted
  // variable (upper bounds of mirrored variables became the base).
  const Index n_func = m.num_constraints();
  Index n_bound = 0;
  for (Index j = 0; j < m.num_vars; ++j) {
    if (vmap[j].kind == VarMap::Shift && m.upper(j) < kInf) ++n_bound;
  }
  const Index n_rows = n_func + n_bound;

  Matrix rows = Matrix::Zero(n_rows, n_struct);
  Vector row_rhs = Vector::Zero(n_rows);
  std::vector<Relation> rels(n_rows, Relation::LessEqual);
  for (Index i = 0; i < n_func; ++i) {
    Scalar b = m.rhs(i);
    for (Index j = 0; j < m.num_vars; ++j) {
      const VarMap& vm = vmap[j];
      const Scalar a = m.constraint_matrix(i, j);
      if (a == 0) continue;
      switch (vm.kind) {
        case VarMap::Shift:
          rows(i, vm.col) += a;
          b -= a * vm.base;
          break;
        case VarMap::Mirror:
          rows(i, vm.col) -= a;
          b -= a * vm.base;
          break;
        case VarMap::Split:
          rows(i, vm.col) += a;
          rows(i, vm.neg_col) -= a;
          break;
      }
    }
    row_rhs(i) = b;
    rels[i] = m.relations[i];
  }
  {
    Index i = n_func;
    for (Index j = 0; j < m.num_vars; ++j) {
      if (vmap[j].kind == VarMap::Shift && m.upper(j) < kInf) {
        rows(i, vmap[j].col) = 1;
        row_rhs(i) = m.upper(j) - m.lower(j);
        rels[i] = Relation::LessEqual;
        ++i;
      }
    }
  }

  // Normalize to nonnegative right-hand sides.
  for (Index i = 0; i < n_rows; ++i) {
    if (row_rhs(i) < 0) {
      rows.row(i) = -rows.row(i);
      row_rhs(i) = -row_rhs(i);
      if (rels[i] == Relation::LessEqual) rels[i] = Relation::GreaterEqual;
      else if (rels[i] == Relation::GreaterEqual) rels[i] = Relation::LessEqual;
    }
  }

  Index n_slack = 0, n_art = 0;
  for (Relation rel : rels) {
    if (rel != Relation::Equal) ++n_slack;
    if (rel != Relation::LessEqual) ++n_art;
  }

  Tableau tab;
  tab.m = n_rows;
  tab.ncols = n_struct + n_slack + n_art;
  tab.rhs_col = tab.ncols;
  tab.t = Matrix::Zero(n_rows + 1, tab.ncols + 1);
  tab.basis.assign(n_rows, -1);
  tab.kind.assign(tab.ncols, ColKind::Structural);

  tab.t.topLeftCorner(n_rows, n_struct) = rows;
  tab.t.col(tab.rhs_col).head(n_rows) = row_rhs;
  {
    Index slack = n_struct;
    Index art = n_struct + n_slack;
    for (Index i = 0; i < n_rows; ++i) {
      switch (rels[i]) {
        case Relation::LessEqual:
          tab.t(i, slack) = 1;
          tab.kind[slack] = ColKind::Slack;
          tab.basis[i] = slack++;
          break;
        case Relation::GreaterEqual:
          tab.t(i, slack) = -1;
          tab.kind[slack] = ColKind::Slack;
          ++slack;
          tab.t(i, art) = 1;
          tab.kind[art] = ColKind::Artificial;
          tab.basis[i] = art++;
          break;
        case Relation::Equal:
          tab.t(i, art) = 1;
          tab.kind[art] = ColKind::Artificial;
          tab.basis[i] = art++;
          break;
      }
    }
  }

  PivotState st;
  st.iteration_cap = 50LL * (tab.ncols + tab.m);
  st.bland_threshold = 10LL * m.num_vars;

  std::vector<bool> enter_any(tab.ncols, true);
  std::vector<bool> enter_no_art(tab.ncols);
  for (Index j = 0; j < tab.ncols; ++j) {
    enter_no_art[j] = tab.kind[j] != ColKind::Artificial;
  }

  if (n_art > 0) {
    Vector phase1_costs = Vector::Zero(tab.ncols);
    for (Index j = 0; j < tab.ncols; ++j) {
      if (tab.kind[j] == ColKind::Artificial) phase1_costs(j) = 1;
    }
    install_costs(tab, phase1_costs);
    if (run_simplex(tab, enter_any, st) == LoopResult::Unbounded) {
      throw NumericalFailure("simplex: phase 1 reported unbounded");
    }
    if (-tab.t(tab.m, tab.rhs_col) > kFeasTol) {
      return LpSolution{LpStatus::Infeasible, 0, Vector{}};
    }
    // Pivot leftover artificials out of the basis; rows with no eligible
    // entry are redundant and ride along at level zero.
    for (Index i = 0; i < tab.m; ++i) {
      if (tab.kind[tab.basis[i]] != ColKind::Artificial) continue;
      for (Index j = 0; j < tab.ncols; ++j) {
        if (tab.kind[j] != ColKind::Artificial && std::abs(tab.t(i, j)) > kPivotTol) {
          pivot(tab, i, j);
          break;
        }
      }
    }
  }

  Vector phase2_costs = Vector::Zero(tab.ncols);
  phase2_costs.head(n_struct) = struct_costs;
  install_costs(tab, phase2_costs);
  if (run_simplex(tab, enter_no_art, st) == LoopResult::Unbounded) {
    return LpSolution{LpStatus::Unbounded, -kInf, Vector{}};
  }

  Vector xstd = Vector::Zero(tab.ncols);
  for (Index i = 0; i < tab.m; ++i) {
    xstd(tab.basis[i]) = tab.t(i, tab.rhs_col);
  }
  Vector x(m.num_vars);
  for (Index j = 0; j < m.num_vars; ++j) {
    const VarMap& vm = vmap[j];
    switch (vm.kind) {
      case VarMap::Shift: x(j) = vm.base + xstd(vm.col); break;
      case VarMap::Mirror: x(j) = vm.base - xstd(vm.col); break;
      case VarMap::Split: x(j) = xstd(vm.col) - xstd(vm.neg_col); break;
    }
  }

  // Re-check the basis against the original model before trusting it.
  for (Index i = 0; i < n_func; ++i) {
    const Scalar ax = m.constraint_matrix.row(i).dot(x);
    const Scalar resid = ax - m.rhs(i);
    const bool ok = (m.relations[i] == Relation::LessEqual && resid <= kFeasTol) ||
                    (m.relations[i] == Relation::Equal && std::abs(resid) <= kFeasTol) ||
                    (m.relations[i] == Relation::GreaterEqual && resid >= -kFeasTol);
    if (!ok) {
      throw NumericalFailure("simplex: row " + std::to_string(i) +
                             " infeasible in returned basis");
    }
  }
  for (Index j = 0; j < m.num_vars; ++j) {
    if (x(j) < m.lower(j) - kPivotTol || x(j) > m.upper(j) + kPivotTol) {
      throw NumericalFailure("simplex: variable " + std::to_string(j) +
                             " violates its bounds in returned basis");
    }
  }

  const Scalar objective_value = -tab.t(tab.m, tab.rhs_col) + cost_const;
  return LpSolution{LpStatus::Optimal, objective_value, std::move(x)};
}

}  // namespace centdian
