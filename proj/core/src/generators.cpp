#include "sixflow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace sixflow {

SignedGraph generate_random_cubic_signed(std::size_t n, double neg_prob, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw GeneratorError("n must be even and at least 4");
  if (!(neg_prob >= 0.0 && neg_prob <= 1.0)) throw GeneratorError("neg_prob must lie in [0, 1]");
  constexpr int kMaxAttempts = 100000;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> points(3 * n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::iota(points.begin(), points.end(), 0);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      VertexId a = points[i] / 3;
      VertexId b = points[i + 1] / 3;
      if (a == b) simple = false;
      if (a > b) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
    if (!simple) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;

    std::bernoulli_distribution negative(neg_prob);
    SignedGraph g(n);
    for (const auto& [a, b] : pairs) g.add_edge(a, b, negative(rng) ? Sign::Negative : Sign::Positive);
    return g;
  }
  throw GeneratorError("rejection cap exceeded while sampling a simple cubic graph");
}

SignedGraph generate_random_multigraph(std::size_t n, std::size_t m, double neg_prob, double loop_prob,
                                       std::uint64_t seed) {
  if (n == 0) throw GeneratorError("n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::bernoulli_distribution negative(neg_prob);
  std::bernoulli_distribution loop(loop_prob);
  SignedGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId a = vertex(rng);
    VertexId b = a;
    if (n > 1 && !loop(rng)) {
      while (b == a) b = vertex(rng);
    }
    g.add_edge(a, b, negative(rng) ? Sign::Negative : Sign::Positive);
  }
  return g;
}

SignedGraph with_signature(const SignedGraph& g, std::uint64_t mask) {
  SignedGraph out = g;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.set_sign(e, ((mask >> e) & 1U) ? Sign::Negative : Sign::Positive);
  }
  return out;
}

namespace named {

namespace {

SignedGraph from_pairs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs, Sign sign) {
  SignedGraph g(n);
  for (const auto& [a, b] : pairs) g.add_edge(a, b, sign);
  return g;
}

}  // namespace

SignedGraph petersen(Sign sign) {
  return from_pairs(10,
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                     {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}},
                    sign);
}

SignedGraph complete4(Sign sign) {
  return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, sign);
}

SignedGraph complete_bipartite33(Sign sign) {
  return from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, sign);
}

SignedGraph dumbbell() {
  SignedGraph g(2);
  g.add_edge(0, 0, Sign::Negative);
  g.add_edge(1, 0, Sign::Positive);
  g.add_edge(1, 1, Sign::Negative);
  return g;
}

SignedGraph mixed_digon() {
  SignedGraph g(2);
  g.add_edge(0, 1, Sign::Positive);
  g.add_edge(0, 1, Sign::Negative);
  return g;
}

SignedGraph triangle(Sign sign) { return cycle(3, sign); }

SignedGraph cycle(std::size_t n, Sign sign) {
  SignedGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, sign);
  return g;
}

SignedGraph dodecahedron(Sign sign) {
  // Outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19.
  SignedGraph g(20);
  for (VertexId i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, sign);
  for (VertexId i = 0; i < 5; ++i) g.add_edge(i, 5 + 2 * i, sign);
  for (VertexId i = 0; i < 10; ++i) g.add_edge(5 + i, 5 + (i + 1) % 10, sign);
  for (VertexId i = 0; i < 5; ++i) g.add_edge(6 + 2 * i, 15 + i, sign);
  for (VertexId i = 0; i < 5; ++i) g.add_edge(15 + i, 15 + (i + 1) % 5, sign);
  return g;
}

}  // namespace named

}  // namespace sixflow
