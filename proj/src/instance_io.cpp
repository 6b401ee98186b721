#include "centdian/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "centdian/errors.hpp"
#include "centdian/numfmt.hpp"

namespace centdian {

namespace {

[[noreturn]] void fail(int line, const std::string& reason) {
  throw ParseError("line " + std::to_string(line) + ": " + reason);
}

// One whitespace-separated data line split into tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Index parse_index(const std::string& tok, int line, const char* what) {
  Index value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(line, std::string(what) + " '" + tok + "' is not an integer");
  return value;
}

Scalar parse_weight(const std::string& tok, int line) {
  Scalar value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(line, "weight '" + tok + "' is not a number");
  return value;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Platform-fixed sampling on top of the standard engine: std::mt19937_64 is
// specified bit-exactly, the distributions below are hand-rolled because
// the standard ones are not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  Index n = -1;
  Index m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Index, Index>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const std::vector<std::string> toks = tokens_of(line);

    if (n < 0) {
      if (toks.size() != 2) fail(lineno, "header must be 'n m'");
      n = parse_index(toks[0], lineno, "vertex count");
      m = parse_index(toks[1], lineno, "edge count");
      if (n < 1) fail(lineno, "vertex count must be at least 1");
      if (m < 0) fail(lineno, "edge count must be nonnegative");
      header_line = lineno;
      continue;
    }

    if (static_cast<Index>(edges.size()) == m)
      fail(lineno, "more than " + std::to_string(m) + " edge lines");
    if (toks.size() != 3) fail(lineno, "edge line must be 'u v w'");
    const Index u = parse_index(toks[0], lineno, "endpoint");
    const Index v = parse_index(toks[1], lineno, "endpoint");
    const Scalar w = parse_weight(toks[2], lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(lineno, "endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) fail(lineno, "self loop");
    if (w < 0)
      throw NegativeWeight("line " + std::to_string(lineno) +
                           ": negative weight");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      fail(lineno, "duplicate edge " + std::to_string(u) + "-" +
                       std::to_string(v));
    edges.push_back({u, v, w});
  }

  if (n < 0) throw ParseError("line 1: missing 'n m' header");
  if (static_cast<Index>(edges.size()) != m)
    fail(header_line, "expected " + std::to_string(m) + " edge lines, got " +
                          std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

std::string format_instance(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " +
                    std::to_string(g.edges().size()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           format_number(e.w) + "\n";
  return out;
}

namespace {

Graph generate_gnp(const GenParams& params, std::mt19937_64& rng) {
  const Index n = params.n;
  if (params.edge_prob <= 0 || params.edge_prob > 1)
    throw InvalidParams("edge probability must be in (0,1]");
  if (params.weight_min < 0 || params.weight_min > params.weight_max)
    throw InvalidParams("weight range must satisfy 0 <= min <= max");
  const std::uint64_t span =
      static_cast<std::uint64_t>(params.weight_max - params.weight_min) + 1;
  auto weight = [&] {
    return static_cast<Scalar>(params.weight_min +
                               static_cast<int>(uniform_below(rng, span)));
  };

  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < params.edge_prob) {
        edges.push_back({u, v, weight()});
        present[u][v] = true;
      }

  // patch connectivity along a random permutation (Fisher-Yates with the
  // fixed sampler, never std::shuffle)
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  for (Index i = n - 1; i > 0; --i) {
    const Index j = static_cast<Index>(
        uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<Index> parent(n);
  for (Index i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  for (Index i = 1; i < n; ++i) {
    const Index a = perm[i - 1], b = perm[i];
    if (find(a) != find(b)) {
      parent[find(a)] = find(b);
      const Index u = std::min(a, b), v = std::max(a, b);
      if (!present[u][v]) edges.push_back({u, v, weight()});
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_euclidean(const GenParams& params, std::mt19937_64& rng) {
  const Index n = params.n;
  if (params.grid < 1) throw InvalidParams("grid must be at least 1");
  const std::uint64_t side = static_cast<std::uint64_t>(params.grid) + 1;
  if (side * side < static_cast<std::uint64_t>(n))
    throw InvalidParams("grid too small for n distinct points");

  std::vector<std::pair<long, long>> pts;
  std::set<std::pair<long, long>> used;
  while (static_cast<Index>(pts.size()) < n) {
    const long x = static_cast<long>(uniform_below(rng, side));
    const long y = static_cast<long>(uniform_below(rng, side));
    if (used.insert({x, y}).second) pts.push_back({x, y});
  }

  std::vector<Edge> edges;
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v) {
      const long dx = pts[u].first - pts[v].first;
      const long dy = pts[u].second - pts[v].second;
      // sqrt is correctly rounded by IEEE, so the weights are portable
      const Scalar w = static_cast<Scalar>(
          std::llround(1000.0 * std::sqrt(static_cast<double>(dx * dx + dy * dy))));
      edges.push_back({u, v, w});
    }
  return Graph(n, std::move(edges));
}

}  // namespace

Graph generate_instance(InstanceKind kind, const GenParams& params,
                        std::uint64_t seed) {
  if (params.n < 2) throw InvalidParams("generator needs n >= 2");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case InstanceKind::Gnp:
      return generate_gnp(params, rng);
    case InstanceKind::Euclidean:
      return generate_euclidean(params, rng);
  }
  throw InvalidParams("unknown instance kind");
}

}  // namespace centdian
