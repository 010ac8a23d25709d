#include "sixflow/convert.hpp"

#include <algorithm>
#include <sstream>

#include "sixflow/z6.hpp"

namespace sixflow {

std::string to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::HasLoop: return "HasLoop";
    case ErrorCode::NotFlowAdmissible: return "NotFlowAdmissible";
    case ErrorCode::CyclicConnectivityBelow5: return "CyclicConnectivityBelow5";
    case ErrorCode::SearchLimit: return "SearchLimit";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

bool verify_flow(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f, int k) {
  if (!is_sign_consistent(g, tau) || f.size() != g.edge_count()) return false;
  for (FlowValue x : f) {
    if (x == 0 || x >= k || x <= -k) return false;
  }
  return is_zero(boundary(g, tau, f));
}

std::string describe_state(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f) {
  std::ostringstream os;
  os << "state: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    os << "  e" << e << ": " << edge.end1 << ' ' << edge.end2 << ' ' << to_string(edge.sign);
    if (e < tau.edge_count()) os << ' ' << to_string(tau[e][0]) << ' ' << to_string(tau[e][1]);
    if (e < f.size()) os << " value " << f[e];
    os << '\n';
  }
  if (tau.edge_count() == g.edge_count() && f.size() == g.edge_count() && is_sign_consistent(g, tau)) {
    const auto b = boundary(g, tau, f);
    os << "  boundary:";
    for (FlowValue x : b) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

namespace {

class Converter {
 public:
  Converter(const SignedGraph& g, const Orientation& tau, const EdgeValuation& phi, const ConversionOptions& options)
      : g_(g), tau_(tau), phi_(phi), options_(options) {}

  IntegerFlow run() {
    if (!is_sign_consistent(g_, tau_) || phi_.size() != g_.edge_count()) {
      breach("input orientation or valuation does not match the graph");
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (g_.degree(v) < 3) breach("vertex " + std::to_string(v) + " has degree below 3");
    }
    if (already_converted()) return {tau_, phi_};
    check_state();

    for (;;) {
      if (flip_toward_negative()) continue;
      if (contract_positive()) continue;
      break;
    }
    flip_matching();
    unwind();

    if (!already_converted()) breach("result is not a near-source 6-flow");
    return {std::move(tau_), std::move(phi_)};
  }

  const ConversionStats& stats() const noexcept { return stats_; }

 private:
  [[noreturn]] void breach(const std::string& why) const {
    throw FlowError(ErrorCode::InvariantBreach, "invariant breach: " + why + "\n" + describe_state(g_, tau_, phi_));
  }

  bool already_converted() const {
    for (FlowValue x : phi_) {
      if (x < 1 || x > 5) return false;
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (vertex_role(g_, tau_, v) != Role::NearSource) return false;
    }
    return is_zero(boundary(g_, tau_, phi_));
  }

  void check_state() const {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (phi_[e] < 1 || phi_[e] > 5) breach("value of edge " + std::to_string(e) + " outside {1,...,5}");
    }
    const auto b = boundary(g_, tau_, phi_);
    std::size_t sources = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      const Role role = vertex_role(g_, tau_, v);
      if (role == Role::Source && b[v] == 6) {
        ++sources;
      } else if (!(role == Role::NearSource && b[v] == 0)) {
        breach("vertex " + std::to_string(v) + " is a " + to_string(role) + " with boundary " + std::to_string(b[v]));
      }
    }
    if (sources % 2 != 0) breach("odd number of sources");
  }

  void after_mutation() const {
    if (options_.check_invariants) check_state();
  }

  // A negative edge directed toward both ends joins two near-sources of
  // boundary 0; reversing it and taking 6 - value makes both sources of
  // boundary 6.
  bool flip_toward_negative() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& edge = g_.edge(e);
      if (!edge.is_negative() || edge.is_loop() || tau_[e][0] != Dir::Toward) continue;
      tau_ = reverse_edge(g_, tau_, e).orientation;
      phi_[e] = 6 - phi_[e];
      ++stats_.flips;
      after_mutation();
      return true;
    }
    return false;
  }

  // The head of a positive edge is a near-source of boundary 0, so merging
  // it into the tail keeps the tail's role and boundary.
  bool contract_positive() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& edge = g_.edge(e);
      if (edge.is_negative()) continue;
      if (edge.is_loop()) breach("positive loop at vertex " + std::to_string(edge.end1));
      auto c = contract_positive_edge(g_, tau_, phi_, e);
      g_ = std::move(c.graph);
      tau_ = std::move(c.orientation);
      phi_ = std::move(c.values);
      stack_.push_back(std::move(c.record));
      ++stats_.contractions;
      after_mutation();
      return true;
    }
    return false;
  }

  // Every edge is now negative and directed away from both ends, so every
  // vertex is a source of boundary 6. Reversing a perfect matching with
  // value 6 - value turns each into a near-source of boundary 0.
  void flip_matching() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!g_.edge(e).is_negative() || tau_[e][0] != Dir::Away) {
        breach("base state has an edge that is not negative and directed away");
      }
    }
    if (g_.vertex_count() % 2 != 0) breach("base graph has odd order");
    const auto matching = perfect_matching(g_);
    if (!matching) breach("base graph has no perfect matching");
    for (EdgeId e : matching->edges) {
      tau_ = reverse_edge(g_, tau_, e).orientation;
      phi_[e] = 6 - phi_[e];
    }
    stats_.matched = matching->edges.size();
    if (!already_converted()) breach("matching flip did not produce a near-source 6-flow");
  }

  // Re-insert each contracted edge, oriented from the near-source endpoint
  // into the source endpoint and valued with the source's surplus.
  void unwind() {
    while (!stack_.empty()) {
      const ContractionRecord rec = std::move(stack_.back());
      stack_.pop_back();
      auto x = expand_contraction(g_, tau_, phi_, rec);
      g_ = std::move(x.graph);
      tau_ = std::move(x.orientation);
      phi_ = std::move(x.values);

      const EdgeId e = rec.edge;
      phi_[e] = 0;
      const auto b = boundary(g_, tau_, phi_);
      auto in_without_e = [&](VertexId v) {
        std::size_t count = 0;
        for (EdgeEnd end : in_ends(g_, tau_, v)) count += end.edge != e;
        return count;
      };
      const VertexId u = rec.original.end1;
      const VertexId v = rec.original.end2;
      const std::size_t in_u = in_without_e(u);
      const std::size_t in_v = in_without_e(v);
      if (in_u + in_v != 1) breach("split vertices do not share exactly one incoming end");
      const VertexId source = in_u == 0 ? u : v;
      const FlowValue s = b[source];
      if (s < 1 || s > 5) breach("surplus " + std::to_string(s) + " at split vertex outside {1,...,5}");
      const bool source_is_end2 = source == v;
      tau_[e] = source_is_end2 ? Orientation::DirPair{Dir::Away, Dir::Toward}
                               : Orientation::DirPair{Dir::Toward, Dir::Away};
      phi_[e] = s;
      if (options_.check_invariants) {
        const auto after = boundary(g_, tau_, phi_);
        if (after[u] != 0 || after[v] != 0 || vertex_role(g_, tau_, u) != Role::NearSource ||
            vertex_role(g_, tau_, v) != Role::NearSource) {
          breach("expanded endpoints are not balanced near-sources");
        }
      }
    }
  }

  SignedGraph g_;
  Orientation tau_;
  EdgeValuation phi_;
  ConversionOptions options_;
  std::vector<ContractionRecord> stack_;
  ConversionStats stats_;
};

}  // namespace

IntegerFlow z6_to_six_flow(const SignedGraph& g, const Orientation& tau, const EdgeValuation& phi,
                           const ConversionOptions& options, ConversionStats* stats) {
  Converter converter(g, tau, phi, options);
  IntegerFlow out = converter.run();
  if (stats) *stats = converter.stats();
  return out;
}

PipelineResult six_flow_pipeline(const SignedGraph& g, const ConversionOptions& options) {
  if (!g.is_cubic()) throw FlowError(ErrorCode::NotCubic, "graph is not cubic");
  if (g.has_loop()) throw FlowError(ErrorCode::HasLoop, "graph has a loop");
  if (!is_flow_admissible(g)) throw FlowError(ErrorCode::NotFlowAdmissible, "graph is not flow-admissible");
  const auto cyclic = cyclic_edge_connectivity(g);
  if (!cyclic || *cyclic < 5) {
    throw FlowError(ErrorCode::CyclicConnectivityBelow5,
                    "cyclic edge-connectivity is " + (cyclic ? std::to_string(*cyclic) : std::string("0")));
  }

  std::optional<Z2Z3Flow> seed;
  try {
    seed = find_z2z3_flow(g);
  } catch (const SearchLimitError& e) {
    throw FlowError(ErrorCode::SearchLimit, e.what());
  }
  if (!seed) {
    throw FlowError(ErrorCode::InvariantBreach,
                    "invariant breach: no Z2 x Z3 flow with even negative support\n" +
                        describe_state(g, Orientation::canonical(g), EdgeValuation(g.edge_count(), 0)));
  }

  NormalizedValuation normalized;
  try {
    normalized = normalize_cubic(g, seed->orientation, to_z6(seed->values));
  } catch (const NormalizationError& e) {
    throw FlowError(ErrorCode::InvariantBreach, std::string("invariant breach: ") + e.what());
  }

  PipelineResult out;
  out.switched = normalized.switched;
  out.sources = normalized.sources;
  IntegerFlow flow = z6_to_six_flow(normalized.graph, normalized.orientation, normalized.values, options, &out.stats);

  // Switching back restores the input signature; values are unchanged.
  SignedGraph graph = normalized.graph;
  for (VertexId v : normalized.switched) {
    auto s = switch_vertex(graph, flow.orientation, v);
    graph = std::move(s.graph);
    flow.orientation = std::move(s.orientation);
  }
  if (!(graph == g) || !verify_flow(g, flow.orientation, flow.values, 6)) {
    throw FlowError(ErrorCode::InvariantBreach,
                    "invariant breach: final valuation failed verification\n" +
                        describe_state(g, flow.orientation, flow.values));
  }
  out.flow = std::move(flow);
  return out;
}

}  // namespace sixflow
