#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "centdian/errors.hpp"
#include "centdian/models.hpp"
#include "helpers.hpp"

using namespace centdian;
using testutil::make_graph;

namespace {

// Random facility weights with entries in [0,1] and sum exactly p: start
// from an indicator vector and run random mass transfers between entries.
Vector random_facility_weights(std::mt19937_64& rng, Index n, Index p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::vector<Index> verts(n);
  std::iota(verts.begin(), verts.end(), Index{0});
  std::shuffle(verts.begin(), verts.end(), rng);
  Vector y = Vector::Zero(n);
  for (Index k = 0; k < p; ++k) y(verts[k]) = 1;
  for (Index t = 0; t < 6 * n; ++t) {
    const Index a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const Scalar amount = unit(rng) * std::min(y(a), 1 - y(b));
    y(a) -= amount;
    y(b) += amount;
  }
  return y;
}

Scalar assignment_objective(const DistanceMatrix& dm, const Matrix& x, Scalar c) {
  return dm.matrix().cwiseProduct(x).sum() + c;
}

void check_primal_invariants(const DistanceMatrix& dm, Index p,
                             const FractionalSolution& f) {
  const Index n = dm.n();
  REQUIRE(f.x.rows() == n);
  REQUIRE(f.x.cols() == n);
  REQUIRE(f.y.size() == n);
  for (Index i = 0; i < n; ++i) {
    CHECK(std::abs(f.x.row(i).sum() - 1) <= 1e-6);
    CHECK(dm.matrix().row(i).dot(f.x.row(i)) <= f.c + 1e-7);
    for (Index j = 0; j < n; ++j) {
      CHECK(f.x(i, j) >= -1e-9);
      CHECK(f.x(i, j) <= f.y(j) + 1e-7);
    }
  }
  for (Index j = 0; j < n; ++j) {
    CHECK(f.y(j) >= -1e-9);
    CHECK(f.y(j) <= 1 + 1e-9);
  }
  CHECK(std::abs(f.y.sum() - static_cast<Scalar>(p)) <= 1e-6);
  CHECK(f.c >= -1e-9);
  CHECK(std::abs(assignment_objective(dm, f.x, f.c) - f.objective) <= 1e-6);
}

}  // namespace

TEST_CASE("models: instance validation") {
  const DistanceMatrix dm = metric_closure(testutil::path(3));
  CHECK_THROWS_AS(PdpInstance(dm, 0), InvalidParams);
  CHECK_THROWS_AS(PdpInstance(dm, -1), InvalidParams);
  CHECK_THROWS_AS(PdpInstance(dm, 3), InvalidParams);
  CHECK_NOTHROW(PdpInstance(dm, 1));
  CHECK_NOTHROW(PdpInstance(dm, 2));

  // a single vertex admits no valid p at all
  const DistanceMatrix one = metric_closure(make_graph(1, {}));
  CHECK_THROWS_AS(PdpInstance(one, 1), InvalidParams);

  CHECK_THROWS_AS(CdpInstance(dm, 0), InvalidParams);
  CHECK_THROWS_AS(CdpInstance(dm, -2), InvalidParams);
  CHECK_THROWS_AS(CdpInstance(dm, std::numeric_limits<Scalar>::infinity()),
                  InvalidParams);
  CHECK_NOTHROW(CdpInstance(dm, 0.5));
}

TEST_CASE("models: relaxation dimensions and structure") {
  const Graph k2 = make_graph(2, {{0, 1, 1}});
  const PdpInstance inst(metric_closure(k2), 1);
  const LpModel m = build_lp_relaxation(inst);

  CHECK(m.num_vars == 7);
  CHECK(m.num_constraints() == 9);

  // row order: assignment equalities, cardinality, coupling, eccentricity
  CHECK(m.relations[0] == Relation::Equal);
  CHECK(m.relations[1] == Relation::Equal);
  CHECK(m.relations[2] == Relation::Equal);
  for (int r = 3; r < 9; ++r) CHECK(m.relations[r] == Relation::LessEqual);
  CHECK(m.rhs(0) == 1);
  CHECK(m.rhs(1) == 1);
  CHECK(m.rhs(2) == 1);
  for (int r = 3; r < 9; ++r) CHECK(m.rhs(r) == 0);

  // objective carries the distances on x and a unit on the last variable
  CHECK(m.objective(x_var(0, 0, 2)) == 0);
  CHECK(m.objective(x_var(0, 1, 2)) == 1);
  CHECK(m.objective(x_var(1, 0, 2)) == 1);
  CHECK(m.objective(x_var(1, 1, 2)) == 0);
  CHECK(m.objective(y_var(0, 2)) == 0);
  CHECK(m.objective(ecc_var(2)) == 1);

  CHECK(m.lower.minCoeff() == 0);
  CHECK(m.upper.head(6).maxCoeff() == 1);
  CHECK(m.upper.head(6).minCoeff() == 1);
  CHECK(m.upper(6) == std::numeric_limits<Scalar>::infinity());

  // first coupling row ties x(0,0) to y(0)
  CHECK(m.constraint_matrix(3, x_var(0, 0, 2)) == 1);
  CHECK(m.constraint_matrix(3, y_var(0, 2)) == -1);
  // first eccentricity row carries the distances of vertex 0
  CHECK(m.constraint_matrix(7, x_var(0, 1, 2)) == 1);
  CHECK(m.constraint_matrix(7, ecc_var(2)) == -1);

  const PdpInstance inst3(metric_closure(testutil::path(3)), 2);
  const LpModel m3 = build_lp_relaxation(inst3);
  CHECK(m3.num_vars == 13);
  CHECK(m3.num_constraints() == 16);
  CHECK(m3.rhs(3) == 2);
}

TEST_CASE("models: relaxation optimum on the single edge") {
  // For the unit edge with p=1 the relaxation optimum is 3/2 at
  // y=(1/2,1/2): every feasible point has assignment cost at least 1 and
  // eccentricity at least max(y0, 1-y0) >= 1/2, and the split attains it.
  const PdpInstance inst(metric_closure(make_graph(2, {{0, 1, 1}})), 1);
  const FractionalSolution f = solve_relaxation(inst);
  CHECK(std::abs(f.objective - 1.5) <= 1e-6);
  check_primal_invariants(inst.dm, inst.p, f);
}

TEST_CASE("models: relaxation stays below integral witnesses") {
  const PdpInstance p3(metric_closure(testutil::path(3)), 1);
  const FractionalSolution f1 = solve_relaxation(p3);
  check_primal_invariants(p3.dm, p3.p, f1);
  CHECK(f1.objective <= 3 + 1e-6);  // value of {1}

  const PdpInstance st(metric_closure(testutil::star(4)), 1);
  const FractionalSolution f2 = solve_relaxation(st);
  check_primal_invariants(st.dm, st.p, f2);
  CHECK(f2.objective <= 5 + 1e-6);  // value of {0}

  // the four-cycle with p=2 has a genuine integrality gap: uniform halves
  // give 5/2 while every vertex pair costs 3
  const PdpInstance c4(metric_closure(testutil::cycle(4)), 2);
  const FractionalSolution f3 = solve_relaxation(c4);
  check_primal_invariants(c4.dm, c4.p, f3);
  CHECK(f3.objective <= 2.5 + 1e-6);
  CHECK(testutil::brute_force_pdp(c4.dm, 2).value == 3);
}

TEST_CASE("models: fractional assignment worked examples") {
  const DistanceMatrix dm = metric_closure(testutil::path(3));

  SUBCASE("spread weights fill nearest-first") {
    Vector y(3);
    y << 0.5, 0.3, 0.2;
    const auto [x, c] = lemma1_assignment(dm, y, 1);
    Matrix expected(3, 3);
    expected << 0.5, 0.3, 0.2,
                0.5, 0.3, 0.2,
                0.5, 0.3, 0.2;
    CHECK((x - expected).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(dm.matrix().row(0).dot(x.row(0)) - 0.7) <= 1e-12);
    CHECK(std::abs(dm.matrix().row(2).dot(x.row(2)) - 1.3) <= 1e-12);
    CHECK(std::abs(c - 1.3) <= 1e-12);
  }

  SUBCASE("partial share lands on the split facility") {
    Vector y(3);
    y << 0.6, 0.6, 0.8;
    const auto [x, c] = lemma1_assignment(dm, y, 2);
    Matrix expected(3, 3);
    expected << 0.6, 0.4, 0.0,
                0.4, 0.6, 0.0,
                0.0, 0.2, 0.8;
    CHECK((x - expected).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(c - 0.4) <= 1e-12);
  }

  SUBCASE("integral weights pick the nearest facility, lowest index first") {
    const DistanceMatrix dm4 = metric_closure(testutil::path4_chord());
    Vector y(4);
    y << 1, 0, 1, 0;
    const auto [x, c] = lemma1_assignment(dm4, y, 2);
    Matrix expected(4, 4);
    expected << 1, 0, 0, 0,
                1, 0, 0, 0,  // vertex 1 ties between 0 and 2, takes 0
                0, 0, 1, 0,
                0, 0, 1, 0;
    CHECK((x - expected).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(c - 1) <= 1e-12);
  }
}

TEST_CASE("models: fractional assignment input validation") {
  const DistanceMatrix dm = metric_closure(testutil::path(3));
  Vector short_y(2);
  short_y << 0.5, 0.5;
  CHECK_THROWS_AS(lemma1_assignment(dm, short_y, 1), InvalidFractional);

  Vector negative(3);
  negative << -0.5, 1, 0.5;
  CHECK_THROWS_AS(lemma1_assignment(dm, negative, 1), InvalidFractional);

  Vector oversized(3);
  oversized << 1.5, 0.25, 0.25;
  CHECK_THROWS_AS(lemma1_assignment(dm, oversized, 2), InvalidFractional);

  Vector deficient(3);
  deficient << 0.2, 0.2, 0.1;
  CHECK_THROWS_AS(lemma1_assignment(dm, deficient, 1), InvalidFractional);

  Vector mismatched(3);
  mismatched << 0.5, 0.25, 0.25;
  CHECK_THROWS_AS(lemma1_assignment(dm, mismatched, 2), InvalidFractional);
}

TEST_CASE("models: fixed-weight assignment matches the pinned relaxation") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> size(3, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = size(rng);
    const Graph g = testutil::random_connected_graph(rng, n);
    const DistanceMatrix dm = metric_closure(g);
    std::uniform_int_distribution<int> pd(1, static_cast<int>(n) - 1);
    const Index p = pd(rng);
    const Vector y = random_facility_weights(rng, n, p);

    const auto [x, c] = lemma1_assignment(dm, y, p);
    const Scalar direct = assignment_objective(dm, x, c);

    LpModel m = build_lp_relaxation(PdpInstance(dm, p));
    for (Index j = 0; j < n; ++j) {
      m.lower(y_var(j, n)) = y(j);
      m.upper(y_var(j, n)) = y(j);
    }
    const LpSolution sol = solve_lp(m);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(std::abs(direct - sol.objective_value) <= 1e-6);
  }
}

TEST_CASE("models: relaxation lower-bounds the integer optimum") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> size(4, 8);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = size(rng);
    const Graph g = testutil::random_connected_graph(rng, n);
    const DistanceMatrix dm = metric_closure(g);
    std::uniform_int_distribution<int> pd(1, std::min(3, static_cast<int>(n) - 1));
    const Index p = pd(rng);

    const FractionalSolution f = solve_relaxation(PdpInstance(dm, p));
    check_primal_invariants(dm, p, f);
    CHECK(f.objective <= testutil::brute_force_pdp(dm, p).value + 1e-6);
  }
}

TEST_CASE("models: integer-program export") {
  const Graph k2 = make_graph(2, {{0, 1, 1}});
  const DistanceMatrix dm = metric_closure(k2);

  SUBCASE("full facility program") {
    const std::string text = export_pdp_ilp(PdpInstance(dm, 1));
    CHECK(text ==
          "Minimize\n"
          " obj: x_0_1 + x_1_0 + C\n"
          "Subject To\n"
          " assign_0: x_0_0 + x_0_1 = 1\n"
          " assign_1: x_1_0 + x_1_1 = 1\n"
          " card: y_0 + y_1 = 1\n"
          " link_0_0: x_0_0 - y_0 <= 0\n"
          " link_0_1: x_0_1 - y_1 <= 0\n"
          " link_1_0: x_1_0 - y_0 <= 0\n"
          " link_1_1: x_1_1 - y_1 <= 0\n"
          " ecc_0: x_0_1 - C <= 0\n"
          " ecc_1: x_1_0 - C <= 0\n"
          "Bounds\n"
          " C >= 0\n"
          "Binary\n"
          " x_0_0\n"
          " x_0_1\n"
          " x_1_0\n"
          " x_1_1\n"
          " y_0\n"
          " y_1\n"
          "End\n");
  }

  SUBCASE("full budget program") {
    const std::string text = export_cdp_ilp(CdpInstance(dm, 7));
    CHECK(text ==
          "Minimize\n"
          " obj: y_0 + y_1\n"
          "Subject To\n"
          " assign_0: x_0_0 + x_0_1 = 1\n"
          " assign_1: x_1_0 + x_1_1 = 1\n"
          " budget: x_0_1 + x_1_0 + C <= 7\n"
          " link_0_0: x_0_0 - y_0 <= 0\n"
          " link_0_1: x_0_1 - y_1 <= 0\n"
          " link_1_0: x_1_0 - y_0 <= 0\n"
          " link_1_1: x_1_1 - y_1 <= 0\n"
          " ecc_0: x_0_1 - C <= 0\n"
          " ecc_1: x_1_0 - C <= 0\n"
          "Bounds\n"
          " C >= 0\n"
          "Binary\n"
          " x_0_0\n"
          " x_0_1\n"
          " x_1_0\n"
          " x_1_1\n"
          " y_0\n"
          " y_1\n"
          "End\n");
  }

  SUBCASE("fractional weights keep their digits") {
    const DistanceMatrix dmw = metric_closure(make_graph(2, {{0, 1, 2.5}}));
    const std::string text = export_pdp_ilp(PdpInstance(dmw, 1));
    CHECK(text.find(" obj: 2.5 x_0_1 + 2.5 x_1_0 + C\n") != std::string::npos);
    CHECK(text.find(" ecc_0: 2.5 x_0_1 - C <= 0\n") != std::string::npos);

    const std::string budget = export_cdp_ilp(CdpInstance(dmw, 6.5));
    CHECK(budget.find(" budget: 2.5 x_0_1 + 2.5 x_1_0 + C <= 6.5\n") !=
          std::string::npos);
  }

  SUBCASE("larger instance spot checks") {
    const std::string text =
        export_pdp_ilp(PdpInstance(metric_closure(testutil::path(3)), 2));
    CHECK(text.find(" card: y_0 + y_1 + y_2 = 2\n") != std::string::npos);
    CHECK(text.find(" ecc_0: x_0_1 + 2 x_0_2 - C <= 0\n") != std::string::npos);
    CHECK(text.find(" link_2_1: x_2_1 - y_1 <= 0\n") != std::string::npos);
  }
}
