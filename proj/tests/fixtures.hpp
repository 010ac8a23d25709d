#pragma once

// Random orientations, valuations and a small graph corpus shared by tests.

#include <random>
#include <vector>

#include "sixflow/generators.hpp"
#include "sixflow/graph.hpp"

namespace sixflow::fixtures {

inline Orientation random_orientation(const SignedGraph& g, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Orientation::DirPair> dirs;
  for (const Edge& e : g.edges()) {
    const Dir d1 = coin(rng) ? Dir::Away : Dir::Toward;
    const Dir d2 = e.is_negative() ? d1 : flipped(d1);
    dirs.push_back({d1, d2});
  }
  return Orientation(std::move(dirs));
}

inline EdgeValuation random_valuation(const SignedGraph& g, std::mt19937_64& rng, FlowValue bound = 9) {
  std::uniform_int_distribution<FlowValue> value(-bound, bound);
  EdgeValuation f(g.edge_count());
  for (auto& x : f) x = value(rng);
  return f;
}

/// Small named graphs plus random multigraphs, all with at most `max_edges`
/// edges.
inline std::vector<SignedGraph> corpus(std::size_t max_edges, std::uint64_t seed = 1) {
  std::vector<SignedGraph> out = {
      named::dumbbell(),
      named::mixed_digon(),
      named::triangle(),
      named::triangle(Sign::Negative),
      with_signature(named::triangle(), 0b001),
      named::complete4(),
      named::complete4(Sign::Negative),
      named::complete_bipartite33(),
      named::complete_bipartite33(Sign::Negative),
      named::cycle(5, Sign::Negative),
      named::petersen(),
      named::petersen(Sign::Negative),
      with_signature(named::petersen(), 0b101),
  };
  for (std::uint64_t s = 0; s < 60; ++s) {
    std::mt19937_64 rng(seed * 1000 + s);
    const std::size_t n = 2 + rng() % 5;
    const std::size_t m = n + rng() % 6;
    out.push_back(generate_random_multigraph(n, m, 0.4, 0.1, seed * 7919 + s));
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    out.push_back(generate_random_cubic_signed(4 + 2 * (s % 3), 0.5, seed * 31 + s));
  }
  std::erase_if(out, [&](const SignedGraph& g) { return g.edge_count() > max_edges; });
  return out;
}

}  // namespace sixflow::fixtures
