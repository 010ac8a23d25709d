#pragma once

#include <cstdint>
#include <stdexcept>

#include "sixflow/graph.hpp"

namespace sixflow {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple cubic graph from the pairing model (loops and parallel edges are
/// rejected and the pairing redrawn), each edge independently negative with
/// probability neg_prob. Edges are listed with end1 < end2 in lexicographic
/// order. Deterministic for a fixed seed. Requires n even and n >= 4.
SignedGraph generate_random_cubic_signed(std::size_t n, double neg_prob, std::uint64_t seed);

/// Multigraph with the given vertex and edge counts, no isolated vertices
/// required; loops and parallels allowed. Used for oracle sweeps.
SignedGraph generate_random_multigraph(std::size_t n, std::size_t m, double neg_prob, double loop_prob,
                                       std::uint64_t seed);

/// Same underlying graph with edge e negative iff bit e of mask is set.
SignedGraph with_signature(const SignedGraph& g, std::uint64_t mask);

namespace named {

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
SignedGraph petersen(Sign sign = Sign::Positive);
SignedGraph complete4(Sign sign = Sign::Positive);
SignedGraph complete_bipartite33(Sign sign = Sign::Positive);
/// Two negative loops joined by a positive edge.
SignedGraph dumbbell();
/// One positive and one negative edge between two vertices.
SignedGraph mixed_digon();
SignedGraph triangle(Sign sign = Sign::Positive);
SignedGraph cycle(std::size_t n, Sign sign = Sign::Positive);
/// Regular dodecahedron: cubic, 20 vertices, cyclically 5-edge-connected.
SignedGraph dodecahedron(Sign sign = Sign::Positive);

}  // namespace named

}  // namespace sixflow
