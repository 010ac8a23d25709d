#include "sixflow/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "sixflow/analysis.hpp"

namespace sixflow {

namespace {

SignedGraph apply_signature(const SignedGraph& base, const std::vector<EdgeId>& negative) {
  SignedGraph g = base;
  for (EdgeId e = 0; e < g.edge_count(); ++e) g.set_sign(e, Sign::Positive);
  for (EdgeId e : negative) g.set_sign(e, Sign::Negative);
  return g;
}

bool next_combination(std::vector<EdgeId>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SweepEntry evaluate_signature(const SignedGraph& g, std::size_t index) {
  SweepEntry entry;
  entry.index = index;
  entry.negative = g.negative_edges();
  entry.admissible = is_flow_admissible(g);
  try {
    const PipelineResult result = six_flow_pipeline(g);
    entry.flowed = true;
    entry.verified = verify_flow(g, result.flow.orientation, result.flow.values, 6);
  } catch (const FlowError& e) {
    entry.error = e.code();
    entry.detail = e.what();
  }
  if (entry.admissible && entry.verified) {
    entry.outcome = SweepOutcome::Verified;
  } else if (!entry.admissible && entry.error == ErrorCode::NotFlowAdmissible) {
    entry.outcome = SweepOutcome::NotAdmissible;
  } else {
    entry.outcome = SweepOutcome::Failed;
  }
  return entry;
}

SweepReport run_sweep(const SignedGraph& base, const SweepOptions& options) {
  SweepReport report;
  const std::size_t m = base.edge_count();
  auto record = [&](const std::vector<EdgeId>& negative) {
    SweepEntry entry = evaluate_signature(apply_signature(base, negative), report.entries.size());
    report.admissible += entry.admissible;
    report.verified += entry.outcome == SweepOutcome::Verified;
    report.not_admissible += entry.outcome == SweepOutcome::NotAdmissible;
    report.failed += entry.outcome == SweepOutcome::Failed;
    report.invariant_breaches += entry.error == ErrorCode::InvariantBreach;
    report.entries.push_back(std::move(entry));
  };

  if (options.max_negative) {
    for (std::size_t k = 0; k <= std::min(*options.max_negative, m); ++k) {
      std::vector<EdgeId> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        record(idx);
      } while (k > 0 && next_combination(idx, m));
    }
  }
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<EdgeId> negative;
    for (EdgeId e = 0; e < m; ++e) {
      if (coin(rng)) negative.push_back(e);
    }
    record(negative);
  }
  return report;
}

std::string format_sweep_report(const SweepReport& report) {
  std::ostringstream os;
  os << "# index signature admissible flowed verified outcome\n";
  for (const SweepEntry& e : report.entries) {
    os << e.index << ' ';
    if (e.negative.empty()) {
      os << '-';
    } else {
      for (std::size_t i = 0; i < e.negative.size(); ++i) os << (i ? "," : "") << e.negative[i];
    }
    os << ' ' << (e.admissible ? "yes" : "no") << ' ' << (e.flowed ? "yes" : "no") << ' '
       << (e.verified ? "yes" : "no") << ' ';
    switch (e.outcome) {
      case SweepOutcome::Verified: os << "verified"; break;
      case SweepOutcome::NotAdmissible: os << "NotFlowAdmissible"; break;
      case SweepOutcome::Failed: os << "FAILED" << (e.error ? ":" + to_string(*e.error) : std::string()); break;
    }
    os << '\n';
  }
  os << "signatures     " << report.entries.size() << '\n'
     << "admissible     " << report.admissible << '\n'
     << "verified       " << report.verified << '\n'
     << "not-admissible " << report.not_admissible << '\n'
     << "failed         " << report.failed << '\n'
     << "breaches       " << report.invariant_breaches << '\n';
  return os.str();
}

}  // namespace sixflow
