#pragma once

// Runs the 6-flow pipeline over many signatures of one underlying graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sixflow/convert.hpp"
#include "sixflow/graph.hpp"

namespace sixflow {

struct SweepOptions {
  /// Every signature with at most this many negative edges, by size then
  /// lexicographic order of the negative edge set.
  std::optional<std::size_t> max_negative;
  /// Uniform random signatures drawn after the enumerated ones.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

enum class SweepOutcome : std::uint8_t {
  Verified,           // admissible, flowed, verified
  NotAdmissible,      // pipeline correctly refused
  Failed,             // admissible but no verified flow
};

struct SweepEntry {
  std::size_t index = 0;
  std::vector<EdgeId> negative;   // the signature
  bool admissible = false;
  bool flowed = false;
  bool verified = false;
  SweepOutcome outcome = SweepOutcome::Failed;
  std::optional<ErrorCode> error;
  std::string detail;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  std::size_t admissible = 0;
  std::size_t verified = 0;
  std::size_t not_admissible = 0;
  std::size_t failed = 0;
  std::size_t invariant_breaches = 0;

  bool ok() const noexcept { return failed == 0; }
};

SweepReport run_sweep(const SignedGraph& base, const SweepOptions& options);
SweepEntry evaluate_signature(const SignedGraph& g, std::size_t index);

/// One line per entry followed by a summary table. Deterministic.
std::string format_sweep_report(const SweepReport& report);

}  // namespace sixflow
