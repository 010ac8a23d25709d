#pragma once

// Group-valued flows used to seed the 6-flow construction: a nowhere-zero
// Z2 x Z3 flow whose Z2 support meets the negative edges an even number of
// times, its image in Z6, and the normalized integer valuation derived from
// it on cubic graphs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sixflow/graph.hpp"

namespace sixflow {

struct Z2Z3 {
  std::uint8_t a = 0;  // Z2 component
  std::uint8_t b = 0;  // Z3 component

  bool is_zero() const noexcept { return a == 0 && b == 0; }
  friend bool operator==(const Z2Z3&, const Z2Z3&) = default;
};

using Z2Z3Valuation = std::vector<Z2Z3>;
/// Residues in {0,...,5}.
using Z6Valuation = std::vector<std::uint8_t>;

struct Z2Z3Flow {
  Orientation orientation;
  Z2Z3Valuation values;
};

inline constexpr std::size_t kCycleSpaceDimensionLimit = 24;

class SearchLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exhaustive search: enumerates the Z2 cycle space, keeps candidates whose
/// support has an even number of negative edges, and completes each with a
/// Z3 flow (canonical orientation) that is nonzero off the Z2 support.
/// Returns the first candidate in enumeration order that completes; nullopt
/// certifies that no such flow exists. Throws SearchLimitError when the
/// cycle-space dimension exceeds kCycleSpaceDimensionLimit.
std::optional<Z2Z3Flow> find_z2z3_flow(const SignedGraph& g);

/// Z2 x Z3 -> Z6: (0,0)->0 (1,1)->1 (0,2)->2 (1,0)->3 (0,1)->4 (1,2)->5.
std::uint8_t z2z3_to_z6(std::uint8_t a, std::uint8_t b);
Z2Z3 z6_to_z2z3(std::uint8_t x);
Z6Valuation to_z6(const Z2Z3Valuation& values);

/// Boundary residues modulo `modulus` under the orientation.
std::vector<std::int64_t> boundary_mod(const SignedGraph& g, const Orientation& tau,
                                       const std::vector<std::int64_t>& values, std::int64_t modulus);

struct NormalizedValuation {
  SignedGraph graph;                  // signature after switching
  Orientation orientation;
  EdgeValuation values;               // each in {1,2,3}
  std::vector<VertexId> switched;     // ascending
  std::size_t sources = 0;            // even
};

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reverses every edge valued 4 or 5 (value -> 6 - value), then switches at
/// every vertex with two or more incoming ends. Afterwards each vertex is a
/// source with boundary 6 or a near-source with boundary 0, and the number
/// of sources is even. Requires a loopless cubic graph and a nowhere-zero
/// Z6 flow whose odd values meet the negative edges an even number of times.
NormalizedValuation normalize_cubic(const SignedGraph& g, const Orientation& tau, const Z6Valuation& phi6);

struct SourceParity {
  std::size_t sources = 0;
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;
  std::int64_t x3 = 0;
  bool holds = false;  // 6w = 2(x1 + x3) + 4x2 + 4x3 and w even
};

/// x_i counts negative edges of value i directed away from both ends minus
/// those directed toward both ends. Throws NormalizationError unless values
/// lie in {1,2,3} and every vertex is a source with boundary 6 or a
/// near-source with boundary 0.
SourceParity source_parity(const SignedGraph& g, const Orientation& tau, const EdgeValuation& phi);

}  // namespace sixflow
