#include "sixflow/flow_algebra.hpp"

#include <algorithm>

namespace sixflow {

std::string to_string(Role r) {
  switch (r) {
    case Role::Source: return "source";
    case Role::NearSource: return "near-source";
    case Role::Other: return "other";
  }
  return "?";
}

VertexValuation boundary(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f) {
  require_sign_consistent(g, tau);
  if (f.size() != g.edge_count()) {
    throw GraphError("valuation does not match the edge count");
  }
  VertexValuation out(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    for (int i = 0; i < 2; ++i) {
      out[edge.end(i)] += tau[e][i] == Dir::Away ? f[e] : -f[e];
    }
  }
  return out;
}

bool is_zero(const VertexValuation& b) noexcept {
  return std::all_of(b.begin(), b.end(), [](FlowValue x) { return x == 0; });
}

Reversal reverse_edge(const SignedGraph& g, const Orientation& tau, EdgeId e,
                      std::optional<EdgeValuation> f) {
  const Edge& edge = g.edge(e);
  Reversal out{tau, std::move(f)};
  if (edge.is_loop() && !edge.is_negative()) {
    return out;
  }
  out.orientation[e] = {flipped(tau[e][0]), flipped(tau[e][1])};
  if (out.values) {
    out.values->at(e) = -out.values->at(e);
  }
  return out;
}

Switched switch_vertex(const SignedGraph& g, const Orientation& tau, VertexId v) {
  if (v >= g.vertex_count()) {
    throw GraphError("unknown vertex " + std::to_string(v));
  }
  Switched out{g, tau};
  for (EdgeEnd end : g.ends_at(v)) {
    out.orientation[end.edge][end.end] = flipped(tau.at(end));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!edge.is_loop() && (edge.end1 == v || edge.end2 == v)) {
      out.graph.set_sign(e, flipped(edge.sign));
    }
  }
  return out;
}

Role vertex_role(const SignedGraph& g, const Orientation& tau, VertexId v) {
  switch (in_degree(g, tau, v)) {
    case 0: return Role::Source;
    case 1: return Role::NearSource;
    default: return Role::Other;
  }
}

Contraction contract_positive_edge(const SignedGraph& g, const Orientation& tau,
                                   const EdgeValuation& f, EdgeId e) {
  const Edge edge = g.edge(e);
  if (edge.is_negative()) {
    throw GraphError("cannot contract negative edge " + std::to_string(e));
  }
  if (edge.is_loop()) {
    throw GraphError("cannot contract loop " + std::to_string(e));
  }
  require_sign_consistent(g, tau);
  if (f.size() != g.edge_count()) {
    throw GraphError("valuation does not match the edge count");
  }

  Contraction out{g, tau, f, {}};
  ContractionRecord& rec = out.record;
  rec.edge = e;
  rec.original = edge;
  rec.dirs = tau[e];
  rec.value = f[e];
  rec.merged = std::min(edge.end1, edge.end2);
  rec.removed = std::max(edge.end1, edge.end2);

  out.graph.erase_edge(e);
  out.orientation.erase(e);
  out.values.erase(out.values.begin() + static_cast<std::ptrdiff_t>(e));

  for (EdgeEnd end : out.graph.ends_at(rec.removed)) {
    out.graph.set_endpoint(end.edge, end.end, rec.merged);
    rec.reassigned.push_back(end);
  }
  out.graph.erase_vertex(rec.removed);
  return out;
}

Expansion expand_contraction(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f,
                             const ContractionRecord& record) {
  if (tau.edge_count() != g.edge_count() || f.size() != g.edge_count()) {
    throw GraphError("orientation or valuation does not match the contracted graph");
  }
  Expansion out{g, tau, f};
  out.graph.insert_vertex(record.removed);
  for (EdgeEnd end : record.reassigned) {
    if (out.graph.edge(end.edge).end(end.end) != record.merged) {
      throw GraphError("contraction record does not match the graph");
    }
    out.graph.set_endpoint(end.edge, end.end, record.removed);
  }
  out.graph.insert_edge(record.edge, record.original);
  out.orientation.insert(record.edge, record.dirs);
  out.values.insert(out.values.begin() + static_cast<std::ptrdiff_t>(record.edge), record.value);
  return out;
}

}  // namespace sixflow
