#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "centdian/errors.hpp"
#include "centdian/graph.hpp"
#include "centdian/instance_io.hpp"

using namespace centdian;

namespace {

std::vector<Scalar> sorted_weights(const Graph& g) {
  std::vector<Scalar> w;
  for (const Edge& e : g.edges()) w.push_back(e.w);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

TEST_CASE("instance_io: parses a triangle") {
  const Graph g = parse_instance("3 3\n0 1 1\n1 2 2\n0 2 2.5\n");
  CHECK(g.n() == 3);
  REQUIRE(g.edges().size() == 3);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 1);
  CHECK(g.edges()[0].w == 1.0);
  CHECK(g.edges()[2].w == 2.5);
}

TEST_CASE("instance_io: comments and blank lines are skipped anywhere") {
  const std::string text =
      "# tiny path\n"
      "\n"
      "3 2\n"
      "  \t \n"
      "0 1 4\n"
      "# middle note\n"
      "1 2 3\n"
      "\n";
  const Graph g = parse_instance(text);
  CHECK(g.n() == 3);
  CHECK(g.edges().size() == 2);
}

TEST_CASE("instance_io: parse errors carry the offending line number") {
  CHECK_THROWS_WITH_AS(parse_instance(""), "line 1: missing 'n m' header",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("3\n"), "line 1: header must be 'n m'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("0 0\n"),
                       "line 1: vertex count must be at least 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n0 1 one\n"),
                       "line 2: weight 'one' is not a number", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n0 x 1\n"),
                       "line 2: endpoint 'x' is not an integer", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("# pad\n2 1\n0 2 1\n"),
                       "line 3: endpoint outside 0..1", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n1 1 1\n"), "line 2: self loop",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("3 3\n0 1 1\n1 2 1\n1 0 9\n"),
                       "line 4: duplicate edge 1-0", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n0 1 1\n1 0 2\n"),
                       "line 3: more than 1 edge lines", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("3 2\n0 1 1\n"),
                       "line 1: expected 2 edge lines, got 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n0 1 -3\n"),
                       "line 2: negative weight", NegativeWeight);
}

TEST_CASE("instance_io: disconnected input is rejected by construction") {
  CHECK_THROWS_AS(parse_instance("4 2\n0 1 1\n2 3 1\n"), DisconnectedGraph);
  CHECK_THROWS_AS(parse_instance("2 0\n"), DisconnectedGraph);
}

TEST_CASE("instance_io: format round-trips through the parser") {
  const Graph g = parse_instance("4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 5\n");
  const std::string text = format_instance(g);
  CHECK(text == "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 5\n");
  const Graph h = parse_instance(text);
  CHECK(format_instance(h) == text);
}

TEST_CASE("instance_io: gnp at probability one is the complete graph") {
  GenParams params;
  params.n = 5;
  params.edge_prob = 1.0;
  params.weight_min = 1;
  params.weight_max = 1;
  const Graph g = generate_instance(InstanceKind::Gnp, params, 42);
  CHECK(g.n() == 5);
  CHECK(g.edges().size() == 10);
  for (const Edge& e : g.edges()) CHECK(e.w == 1.0);
}

TEST_CASE("instance_io: generation is reproducible per seed") {
  GenParams params;
  params.n = 9;
  params.edge_prob = 0.4;

  const std::string a =
      format_instance(generate_instance(InstanceKind::Gnp, params, 7));
  const std::string b =
      format_instance(generate_instance(InstanceKind::Gnp, params, 7));
  const std::string c =
      format_instance(generate_instance(InstanceKind::Gnp, params, 8));
  CHECK(a == b);
  CHECK(a != c);

  params.grid = 30;
  const std::string d =
      format_instance(generate_instance(InstanceKind::Euclidean, params, 7));
  const std::string e =
      format_instance(generate_instance(InstanceKind::Euclidean, params, 7));
  CHECK(d == e);
}

TEST_CASE("instance_io: sparse gnp output always parses back connected") {
  GenParams params;
  params.n = 12;
  params.edge_prob = 0.1;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = generate_instance(InstanceKind::Gnp, params, seed);
    // Round trip through text; the parser re-runs every invariant.
    const Graph h = parse_instance(format_instance(g));
    CHECK(h.n() == 12);
    for (const Edge& e : h.edges()) {
      CHECK(e.w >= 1.0);
      CHECK(e.w <= 9.0);
    }
  }
}

TEST_CASE("instance_io: unit-grid euclidean instance is the square") {
  GenParams params;
  params.n = 4;
  params.grid = 1;
  // Only four lattice points exist, so the instance is the unit square:
  // four sides of length 1 and two diagonals of length sqrt(2).
  const Graph g = generate_instance(InstanceKind::Euclidean, params, 123);
  REQUIRE(g.edges().size() == 6);
  const std::vector<Scalar> w = sorted_weights(g);
  for (int i = 0; i < 4; ++i) CHECK(w[i] == 1000.0);
  CHECK(w[4] == 1414.0);
  CHECK(w[5] == 1414.0);
}

TEST_CASE("instance_io: euclidean weights are scaled lattice distances") {
  GenParams params;
  params.n = 7;
  params.grid = 3;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_instance(InstanceKind::Euclidean, params, seed);
    CHECK(g.edges().size() == 21);  // complete
    std::set<Scalar> seen;
    for (const Edge& e : g.edges()) {
      CHECK(e.w >= 1000.0);  // distinct lattice points are at least 1 apart
      seen.insert(e.w);
    }
    // every weight is llround(1000 * sqrt(k)) for some k in 1..18
    for (Scalar w : seen) {
      bool legal = false;
      for (int k = 1; k <= 18; ++k)
        if (w == static_cast<Scalar>(std::llround(1000.0 * std::sqrt(k))))
          legal = true;
      CHECK(legal);
    }
  }
}

TEST_CASE("instance_io: generator parameter validation") {
  GenParams params;
  params.n = 1;
  CHECK_THROWS_AS(generate_instance(InstanceKind::Gnp, params, 1),
                  InvalidParams);

  params.n = 5;
  params.edge_prob = 0.0;
  CHECK_THROWS_AS(generate_instance(InstanceKind::Gnp, params, 1),
                  InvalidParams);
  params.edge_prob = 1.5;
  CHECK_THROWS_AS(generate_instance(InstanceKind::Gnp, params, 1),
                  InvalidParams);

  params.edge_prob = 0.5;
  params.weight_min = 4;
  params.weight_max = 2;
  CHECK_THROWS_AS(generate_instance(InstanceKind::Gnp, params, 1),
                  InvalidParams);
  params.weight_min = -1;
  params.weight_max = 2;
  CHECK_THROWS_AS(generate_instance(InstanceKind::Gnp, params, 1),
                  InvalidParams);

  params.weight_min = 1;
  params.grid = 0;
  CHECK_THROWS_AS(generate_instance(InstanceKind::Euclidean, params, 1),
                  InvalidParams);
  params.grid = 1;
  params.n = 5;  // only four unit-grid points exist
  CHECK_THROWS_AS(generate_instance(InstanceKind::Euclidean, params, 1),
                  InvalidParams);
}
