#pragma once

// Boundary computation and the elementary moves on oriented signed graphs:
// edge reversal, vertex switching and positive-edge contraction. Every
// operation is a pure function returning fresh values.

#include <optional>
#include <utility>
#include <vector>

#include "sixflow/graph.hpp"

namespace sixflow {

enum class Role : std::uint8_t { Source, NearSource, Other };

std::string to_string(Role r);

/// Outgoing minus incoming value at each vertex. A negative loop directed
/// away from its vertex contributes twice its value; a positive loop
/// contributes nothing. Throws GraphError on shape or sign mismatch.
VertexValuation boundary(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f);

bool is_zero(const VertexValuation& b) noexcept;

struct Reversal {
  Orientation orientation;
  std::optional<EdgeValuation> values;
};

/// Reverses e at both ends and negates f(e), so the boundary is unchanged.
/// Positive loops are left untouched.
Reversal reverse_edge(const SignedGraph& g, const Orientation& tau, EdgeId e,
                      std::optional<EdgeValuation> f = std::nullopt);

struct Switched {
  SignedGraph graph;
  Orientation orientation;
};

/// Reverses every end at v and flips the sign of every non-loop edge at v.
Switched switch_vertex(const SignedGraph& g, const Orientation& tau, VertexId v);

/// Source: no incoming ends. NearSource: exactly one (loop ends counted).
Role vertex_role(const SignedGraph& g, const Orientation& tau, VertexId v);

/// Bookkeeping to undo a positive-edge contraction exactly. The merged
/// vertex keeps the smaller of the two endpoint ids; the larger id is
/// removed and later ids shift down by one.
struct ContractionRecord {
  EdgeId edge = 0;                   // id of the contracted edge before contraction
  Edge original;                     // the contracted edge as it was
  Orientation::DirPair dirs{};       // its direction marks
  FlowValue value = 0;               // its value
  VertexId merged = 0;               // id of the merged vertex in the contracted graph
  VertexId removed = 0;              // id that disappeared
  std::vector<EdgeEnd> reassigned;   // ends moved from `removed` to `merged`, contracted-graph ids
};

struct Contraction {
  SignedGraph graph;
  Orientation orientation;
  EdgeValuation values;
  ContractionRecord record;
};

/// Identifies the ends of a positive non-loop edge and deletes it.
/// Throws GraphError for negative edges and loops.
Contraction contract_positive_edge(const SignedGraph& g, const Orientation& tau,
                                   const EdgeValuation& f, EdgeId e);

struct Expansion {
  SignedGraph graph;
  Orientation orientation;
  EdgeValuation values;
};

/// Replays a record on the contracted graph. Edges other than the restored
/// one keep their current directions and values; the restored edge gets the
/// recorded ones.
Expansion expand_contraction(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f,
                             const ContractionRecord& record);

}  // namespace sixflow
