#pragma once

// Conversion of a normalized Z6-style valuation into a genuine nowhere-zero
// 6-flow, and the end-to-end pipeline for cubic signed graphs.

#include <stdexcept>
#include <string>
#include <vector>

#include "sixflow/analysis.hpp"
#include "sixflow/flow_algebra.hpp"
#include "sixflow/graph.hpp"

namespace sixflow {

enum class ErrorCode : int {
  NotCubic = 2,
  HasLoop = 3,
  NotFlowAdmissible = 4,
  CyclicConnectivityBelow5 = 5,
  SearchLimit = 6,
  InvariantBreach = 10,
};

std::string to_string(ErrorCode code);

class FlowError : public std::runtime_error {
 public:
  FlowError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True iff tau is sign-consistent, the boundary vanishes everywhere and
/// 0 < |f(e)| < k on every edge.
bool verify_flow(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f, int k);

struct ConversionStats {
  std::size_t flips = 0;
  std::size_t contractions = 0;
  std::size_t matched = 0;
};

struct ConversionOptions {
  /// Re-check the state invariants after every mutation.
  bool check_invariants = true;
};

/// Input: minimum degree 3, values in {1,...,5}, every vertex a source with
/// boundary 6 or a near-source with boundary 0, an even number of sources.
/// Output: an orientation in which every vertex is a near-source and values
/// in {1,...,5} with zero boundary. Throws FlowError(InvariantBreach) with a
/// state dump if a hypothesis fails or the construction gets stuck.
IntegerFlow z6_to_six_flow(const SignedGraph& g, const Orientation& tau, const EdgeValuation& phi,
                           const ConversionOptions& options = {}, ConversionStats* stats = nullptr);

struct PipelineResult {
  IntegerFlow flow;                 // on the input signature
  std::vector<VertexId> switched;   // switching set applied during normalization
  std::size_t sources = 0;          // source count of the normalized valuation
  ConversionStats stats;
};

/// Nowhere-zero 6-flow on a flow-admissible, cyclically 5-edge-connected,
/// loopless cubic signed graph. Preconditions are checked in that order and
/// reported with their own ErrorCode.
PipelineResult six_flow_pipeline(const SignedGraph& g, const ConversionOptions& options = {});

/// Text dump of a graph, orientation and valuation for diagnostics.
std::string describe_state(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f);

}  // namespace sixflow
