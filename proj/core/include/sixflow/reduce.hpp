#pragma once

// Reduction of a flow-admissible signed graph to a cubic one, with a
// replayable log that pulls flows on the reduced graph back to the input.

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sixflow/analysis.hpp"
#include "sixflow/graph.hpp"

namespace sixflow {

/// A degree-2 vertex and its two edges were replaced by one edge. The edge
/// records are as they were before the step; the merged edge was appended
/// and runs from first's far end to second's far end.
struct SuppressStep {
  VertexId vertex = 0;
  EdgeId first_id = 0;
  Edge first;
  EdgeId second_id = 0;
  Edge second;
  EdgeId merged_id = 0;

  friend bool operator==(const SuppressStep&, const SuppressStep&) = default;
};

/// Two ends at `vertex` were moved to the appended vertex `new_vertex` and a
/// positive edge `new_edge` from `vertex` to `new_vertex` was appended; when
/// `kept` is false that edge was deleted again.
struct UncontractStep {
  VertexId vertex = 0;
  VertexId new_vertex = 0;
  std::array<EdgeEnd, 2> moved{};
  EdgeId new_edge = 0;
  bool kept = true;

  friend bool operator==(const UncontractStep&, const UncontractStep&) = default;
};

struct SwitchStep {
  VertexId vertex = 0;

  friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

using ReductionStep = std::variant<SuppressStep, UncontractStep, SwitchStep>;

struct LiftRecipe {
  std::vector<ReductionStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  friend bool operator==(const LiftRecipe&, const LiftRecipe&) = default;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Reduction {
  SignedGraph graph;
  LiftRecipe recipe;
};

/// Suppresses degree-2 vertices (lowest id first) until none remain. The
/// merged edge is negative iff exactly one of the two edges was. Throws
/// ReductionError for a degree-2 vertex that carries a loop.
Reduction suppress_degree_two(const SignedGraph& g);

/// Moves the two given members of delta(v) to a new vertex v' and joins v, v'
/// by a new positive edge. e1 == e2 names both ends of a loop at v. Requires
/// d(v) >= 4.
SignedGraph uncontract_vertex(const SignedGraph& g, VertexId v, EdgeId e1, EdgeId e2);

/// Repeatedly suppresses degree-2 vertices and uncontracts the lowest
/// vertex of degree >= 4 until the graph is cubic. The new edge is dropped
/// whenever the graph without it stays flow-admissible.
Reduction reduce_to_cubic(const SignedGraph& g);

/// Applies the recipe to the graph it was recorded on.
SignedGraph replay_forward(const LiftRecipe& recipe, const SignedGraph& original);
/// Rebuilds the graph the recipe started from, given its final graph.
SignedGraph replay_inverse(const LiftRecipe& recipe, const SignedGraph& reduced);

/// Pulls a nowhere-zero flow on the reduced graph back to the original.
/// Values keep their magnitude, so a k-flow lifts to a k-flow. Throws
/// ReductionError on recipe mismatch or if the result fails verification.
IntegerFlow lift_flow(const LiftRecipe& recipe, const SignedGraph& original, const Orientation& tau,
                      const EdgeValuation& f);

/// Forward direction of the uncontraction lemma: extends a flow on g to the
/// uncontracted graph, giving the new edge the value that balances v'. The
/// new edge is left out (kept = false) when v' is already balanced.
struct UncontractedFlow {
  SignedGraph graph;
  IntegerFlow flow;
  bool kept = true;
};
UncontractedFlow extend_flow_across_uncontraction(const SignedGraph& g, const Orientation& tau,
                                                  const EdgeValuation& f, VertexId v, EdgeId e1,
                                                  EdgeId e2);

std::string serialize_recipe(const LiftRecipe& recipe);
/// Throws std::runtime_error with a line number on malformed input.
LiftRecipe parse_recipe(const std::string& text);

}  // namespace sixflow
