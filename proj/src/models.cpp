#include "centdian/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "centdian/errors.hpp"
#include "centdian/numfmt.hpp"

namespace centdian {

PdpInstance::PdpInstance(DistanceMatrix dm_, Index p_)
    : dm(std::move(dm_)), p(p_) {
  if (p <= 0 || p >= dm.n()) throw InvalidParams("p must satisfy 0 < p < n");
}

CdpInstance::CdpInstance(DistanceMatrix dm_, Scalar budget_)
    : dm(std::move(dm_)), budget(budget_) {
  if (!std::isfinite(budget) || budget <= 0)
    throw InvalidParams("budget must be positive and finite");
}

LpModel build_lp_relaxation(const PdpInstance& inst) {
  const Index n = inst.n();
  const Index nv = n * n + n + 1;
  const Index rows = n * n + 2 * n + 1;

  LpModel m(nv);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m.objective(x_var(i, j, n)) = inst.dm(i, j);
  m.objective(ecc_var(n)) = 1;
  m.upper.head(n * n + n).setOnes();  // x and y in [0,1]; C keeps [0, inf)

  m.constraint_matrix = Matrix::Zero(rows, nv);
  m.rhs = Vector::Zero(rows);
  m.relations.assign(rows, Relation::LessEqual);

  Index r = 0;
  // each vertex distributes one unit of assignment
  for (Index i = 0; i < n; ++i, ++r) {
    m.constraint_matrix.row(r).segment(i * n, n).setOnes();
    m.relations[r] = Relation::Equal;
    m.rhs(r) = 1;
  }
  // exactly p facilities in weight
  m.constraint_matrix.row(r).segment(n * n, n).setOnes();
  m.relations[r] = Relation::Equal;
  m.rhs(r) = static_cast<Scalar>(inst.p);
  ++r;
  // assignment only to open facilities
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j, ++r) {
      m.constraint_matrix(r, x_var(i, j, n)) = 1;
      m.constraint_matrix(r, y_var(j, n)) = -1;
    }
  // every row cost stays below the eccentricity variable
  for (Index i = 0; i < n; ++i, ++r) {
    for (Index j = 0; j < n; ++j)
      m.constraint_matrix(r, x_var(i, j, n)) = inst.dm(i, j);
    m.constraint_matrix(r, ecc_var(n)) = -1;
  }
  return m;
}

FractionalSolution solve_relaxation(const PdpInstance& inst) {
  const Index n = inst.n();
  const LpSolution sol = solve_lp(build_lp_relaxation(inst));
  if (sol.status != LpStatus::Optimal)
    throw NumericalFailure("facility relaxation did not solve to optimality");
  FractionalSolution f;
  f.x = sol.values.head(n * n).reshaped<Eigen::RowMajor>(n, n);
  f.y = sol.values.segment(n * n, n);
  f.c = sol.values(ecc_var(n));
  f.objective = sol.objective_value;
  return f;
}

std::pair<Matrix, Scalar> lemma1_assignment(const DistanceMatrix& dm,
                                            const Vector& y, Index p) {
  const Index n = dm.n();
  if (y.size() != n) throw InvalidFractional("facility weights length != n");
  for (Index j = 0; j < n; ++j)
    if (!(y(j) >= -kPivotTol) || !(y(j) <= 1 + kPivotTol))
      throw InvalidFractional("facility weight outside [0,1]");
  const Scalar total = y.sum();
  if (total < 1 - 1e-6)
    throw InvalidFractional("facility weights sum below one");
  if (std::abs(total - static_cast<Scalar>(p)) > 1e-6)
    throw InvalidFractional("facility weights do not sum to p");

  Matrix x = Matrix::Zero(n, n);
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (dm(i, a) != dm(i, b)) return dm(i, a) < dm(i, b);
      return a < b;
    });
    // fill the row nearest-first; the last facility takes a partial share
    Scalar remaining = 1;
    Index last = order.front();
    for (Index j : order) {
      if (remaining <= 0) break;
      const Scalar take = std::min(std::max(y(j), Scalar{0}), remaining);
      if (take > 0) {
        x(i, j) = take;
        remaining -= take;
        last = j;
      }
    }
    if (remaining > 0) x(i, last) += remaining;  // sum deficit below 1e-6
  }
  const Scalar c = dm.matrix().cwiseProduct(x).rowwise().sum().maxCoeff();
  return {x, c};
}

namespace {

std::string xname(Index i, Index j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string yname(Index j) { return "y_" + std::to_string(j); }

void append_term(std::string& s, Scalar coef, const std::string& name) {
  if (coef == 0) return;
  const bool neg = coef < 0;
  const Scalar mag = neg ? -coef : coef;
  if (s.empty()) {
    if (neg) s += "- ";
  } else {
    s += neg ? " - " : " + ";
  }
  if (mag != 1) {
    s += format_number(mag);
    s += " ";
  }
  s += name;
}

std::string assignment_terms(const DistanceMatrix& dm) {
  const Index n = dm.n();
  std::string terms;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) append_term(terms, dm(i, j), xname(i, j));
  return terms;
}

void append_common_rows(std::string& out, const DistanceMatrix& dm) {
  const Index n = dm.n();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::string row;
      append_term(row, 1, xname(i, j));
      append_term(row, -1, yname(j));
      out += " link_" + std::to_string(i) + "_" + std::to_string(j) + ": " +
             row + " <= 0\n";
    }
  for (Index i = 0; i < n; ++i) {
    std::string row;
    for (Index j = 0; j < n; ++j) append_term(row, dm(i, j), xname(i, j));
    append_term(row, -1, "C");
    out += " ecc_" + std::to_string(i) + ": " + row + " <= 0\n";
  }
}

void append_assign_rows(std::string& out, Index n) {
  for (Index i = 0; i < n; ++i) {
    std::string row;
    for (Index j = 0; j < n; ++j) append_term(row, 1, xname(i, j));
    out += " assign_" + std::to_string(i) + ": " + row + " = 1\n";
  }
}

void append_tail(std::string& out, Index n) {
  out += "Bounds\n C >= 0\nBinary\n";
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out += " " + xname(i, j) + "\n";
  for (Index j = 0; j < n; ++j) out += " " + yname(j) + "\n";
  out += "End\n";
}

}  // namespace

std::string export_pdp_ilp(const PdpInstance& inst) {
  const Index n = inst.n();
  std::string out = "Minimize\n obj: ";
  std::string obj = assignment_terms(inst.dm);
  append_term(obj, 1, "C");
  out += obj + "\nSubject To\n";
  append_assign_rows(out, n);
  std::string card;
  for (Index j = 0; j < n; ++j) append_term(card, 1, yname(j));
  out += " card: " + card + " = " + format_number(static_cast<Scalar>(inst.p)) + "\n";
  append_common_rows(out, inst.dm);
  append_tail(out, n);
  return out;
}

std::string export_cdp_ilp(const CdpInstance& inst) {
  const Index n = inst.n();
  std::string obj;
  for (Index j = 0; j < n; ++j) append_term(obj, 1, yname(j));
  std::string out = "Minimize\n obj: " + obj + "\nSubject To\n";
  append_assign_rows(out, n);
  std::string budget = assignment_terms(inst.dm);
  append_term(budget, 1, "C");
  out += " budget: " + budget + " <= " + format_number(inst.budget) + "\n";
  append_common_rows(out, inst.dm);
  append_tail(out, n);
  return out;
}

}  // namespace centdian
