#pragma once

// Structural predicates on signed graphs and the combinatorial subroutines
// the flow construction relies on.

#include <cstddef>
#include <optional>
#include <vector>

#include "sixflow/graph.hpp"

namespace sixflow {

/// Connected component index for every vertex, numbered by smallest member.
std::vector<std::size_t> component_labels(const SignedGraph& g);
std::size_t component_count(const SignedGraph& g);

/// Number of connected components switching-equivalent to an all-positive
/// signature. Isolated vertices count as balanced components.
std::size_t balanced_component_count(const SignedGraph& g);

/// A switching set that makes every balanced component all-positive.
/// Vertices of unbalanced components are left unswitched.
std::vector<bool> balancing_switches(const SignedGraph& g);

/// True iff deleting any single edge leaves the number of balanced
/// components unchanged, which holds exactly when some nowhere-zero integer
/// flow exists.
bool is_flow_admissible(const SignedGraph& g);

SignedGraph without_edge(const SignedGraph& g, EdgeId e);

struct CyclicCut {
  std::size_t size = 0;
  std::vector<EdgeId> edges;  // lexicographically smallest minimum cut
};

/// Minimum edge set whose removal leaves two components that each contain a
/// cycle (signs ignored). nullopt when no such cut exists, i.e. the graph
/// has no two vertex-disjoint cycles.
std::optional<CyclicCut> minimum_cyclic_cut(const SignedGraph& g);

/// Size of the minimum cyclic cut. Graphs without one (K4, K3,3, ...) get
/// their cycle rank |E| - |V| + c instead, the usual convention; acyclic
/// graphs give nullopt.
std::optional<std::size_t> cyclic_edge_connectivity(const SignedGraph& g);

struct MatchingResult {
  std::vector<EdgeId> edges;  // ascending
  bool perfect = false;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm) on the
/// underlying simple graph. Loops are ignored; a parallel class is
/// represented by its lowest edge id.
MatchingResult maximum_matching(const SignedGraph& g);
std::optional<MatchingResult> perfect_matching(const SignedGraph& g);

struct IntegerFlow {
  Orientation orientation;
  EdgeValuation values;
};

inline constexpr std::size_t kBruteForceEdgeLimit = 20;

/// Exhaustive search for a nowhere-zero k-flow under the canonical
/// orientation. nullopt certifies that none exists. Throws
/// std::length_error above kBruteForceEdgeLimit edges.
std::optional<IntegerFlow> brute_force_k_flow(const SignedGraph& g, int k);

}  // namespace sixflow
