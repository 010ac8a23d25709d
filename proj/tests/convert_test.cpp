#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sixflow/analysis.hpp"
#include "sixflow/convert.hpp"
#include "sixflow/flow_algebra.hpp"
#include "sixflow/generators.hpp"
#include "sixflow/z6.hpp"

namespace sixflow {
namespace {

NormalizedValuation normalized(const SignedGraph& g) {
  const auto z = find_z2z3_flow(g);
  if (!z) throw std::runtime_error("no Z2 x Z3 flow");
  return normalize_cubic(g, z->orientation, to_z6(z->values));
}

ErrorCode pipeline_error(const SignedGraph& g) {
  try {
    six_flow_pipeline(g);
  } catch (const FlowError& e) {
    return e.code();
  }
  ADD_FAILURE() << "pipeline unexpectedly succeeded";
  return ErrorCode::InvariantBreach;
}

TEST(VerifyFlow, DumbbellHandFlow) {
  const SignedGraph g = named::dumbbell();
  const Orientation tau({{Dir::Away, Dir::Away}, {Dir::Away, Dir::Toward}, {Dir::Toward, Dir::Toward}});
  for (int k = 3; k <= 6; ++k) EXPECT_TRUE(verify_flow(g, tau, {1, 2, 1}, k)) << k;
  EXPECT_FALSE(verify_flow(g, tau, {1, 2, 1}, 2));
  EXPECT_FALSE(verify_flow(g, tau, {0, 0, 0}, 6));
  EXPECT_FALSE(verify_flow(g, tau, {3, 6, 3}, 6));
  EXPECT_FALSE(verify_flow(g, tau, {1, 3, 1}, 6));
  EXPECT_FALSE(verify_flow(g, tau, {1, 2}, 6));
  const Orientation inconsistent({{Dir::Away, Dir::Toward}, {Dir::Away, Dir::Toward}, {Dir::Toward, Dir::Toward}});
  EXPECT_FALSE(verify_flow(g, inconsistent, {1, 2, 1}, 6));
}

TEST(VerifyFlow, AgreesWithDefinition) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 300; ++trial) {
    const SignedGraph g = generate_random_multigraph(1 + rng() % 4, rng() % 5, 0.5, 0.2, rng());
    std::vector<Orientation::DirPair> dirs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) dirs.push_back({rng() % 2 ? Dir::Away : Dir::Toward, rng() % 2 ? Dir::Away : Dir::Toward});
    const Orientation tau(dirs);
    EdgeValuation f(g.edge_count());
    for (auto& x : f) x = static_cast<FlowValue>(rng() % 7) - 3;
    EXPECT_EQ(verify_flow(g, tau, f, 3), oracle::is_nowhere_zero_flow(g, tau, f, 3));
  }
}

TEST(Conversion, AllAwayNegativeNeedsOnlyTheMatching) {
  const SignedGraph g = named::petersen(Sign::Negative);
  const Orientation tau = Orientation::canonical(g);
  const EdgeValuation phi(g.edge_count(), 2);
  ConversionStats stats;
  const IntegerFlow f = z6_to_six_flow(g, tau, phi, {}, &stats);
  EXPECT_EQ(stats.flips, 0u);
  EXPECT_EQ(stats.contractions, 0u);
  EXPECT_EQ(stats.matched, 5u);
  EXPECT_TRUE(oracle::is_nowhere_zero_flow(g, f.orientation, f.values, 6));
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(vertex_role(g, f.orientation, v), Role::NearSource);
}

TEST(Conversion, FixedPointIsReturnedUnchanged) {
  const NormalizedValuation n = normalized(named::petersen(Sign::Negative));
  const IntegerFlow once = z6_to_six_flow(n.graph, n.orientation, n.values);
  ConversionStats stats;
  const IntegerFlow twice = z6_to_six_flow(n.graph, once.orientation, once.values, {}, &stats);
  EXPECT_EQ(twice.orientation, once.orientation);
  EXPECT_EQ(twice.values, once.values);
  EXPECT_EQ(stats.flips + stats.contractions + stats.matched, 0u);
}

TEST(Conversion, AllPositivePetersenContractsAndUnwinds) {
  const NormalizedValuation n = normalized(named::petersen());
  ConversionStats stats;
  const IntegerFlow f = z6_to_six_flow(n.graph, n.orientation, n.values, {}, &stats);
  EXPECT_GT(stats.contractions, 0u);
  EXPECT_TRUE(oracle::is_nowhere_zero_flow(n.graph, f.orientation, f.values, 6));
}

TEST(Conversion, OutputIsANearSourceFlowOnPetersenSignatures) {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedGraph g = with_signature(named::petersen(), rng() & 0x7FFF);
    if (!is_flow_admissible(g)) continue;
    const NormalizedValuation n = normalized(g);
    const IntegerFlow f = z6_to_six_flow(n.graph, n.orientation, n.values);
    ASSERT_TRUE(oracle::is_nowhere_zero_flow(n.graph, f.orientation, f.values, 6));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(vertex_role(n.graph, f.orientation, v), Role::NearSource);
    }
    for (FlowValue x : f.values) {
      EXPECT_GE(x, 1);
      EXPECT_LE(x, 5);
    }
  }
}

TEST(Conversion, InvalidStateIsABreachWithStateDump) {
  const SignedGraph g = named::petersen(Sign::Negative);
  const EdgeValuation phi(g.edge_count(), 1);  // boundary 3 at every vertex
  try {
    z6_to_six_flow(g, Orientation::canonical(g), phi);
    FAIL() << "expected a breach";
  } catch (const FlowError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantBreach);
    EXPECT_NE(std::string(e.what()).find("boundary:"), std::string::npos);
  }
}

TEST(Pipeline, PetersenSignatures) {
  for (Sign s : {Sign::Negative, Sign::Positive}) {
    const SignedGraph g = named::petersen(s);
    const PipelineResult r = six_flow_pipeline(g);
    EXPECT_TRUE(oracle::is_nowhere_zero_flow(g, r.flow.orientation, r.flow.values, 6));
    EXPECT_EQ(r.sources % 2, 0u);
  }
}

TEST(Pipeline, AllPositiveResultIsAnOrdinaryFlow) {
  const SignedGraph g = named::petersen();
  const PipelineResult r = six_flow_pipeline(g);
  // Every edge is positive, so each has one tail and one head: an ordinary
  // directed flow with values of absolute value below 6.
  for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_NE(r.flow.orientation[e][0], r.flow.orientation[e][1]);
  EXPECT_TRUE(oracle::is_nowhere_zero_flow(g, r.flow.orientation, r.flow.values, 6));
}

TEST(Pipeline, SwitchSetMovesTheFlowBetweenSignatures) {
  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedGraph g = with_signature(named::petersen(), rng() & 0x7FFF);
    if (!is_flow_admissible(g)) continue;
    const PipelineResult r = six_flow_pipeline(g);
    SignedGraph h = g;
    Orientation tau = r.flow.orientation;
    for (VertexId v : r.switched) {
      Switched s = switch_vertex(h, tau, v);
      h = std::move(s.graph);
      tau = std::move(s.orientation);
    }
    EXPECT_TRUE(oracle::is_nowhere_zero_flow(h, tau, r.flow.values, 6));
  }
}

TEST(Pipeline, DodecahedronSignatures) {
  std::mt19937_64 rng(94);
  for (int trial = 0; trial < 25; ++trial) {
    const SignedGraph g = with_signature(named::dodecahedron(), rng() & ((std::uint64_t{1} << 30) - 1));
    if (!is_flow_admissible(g)) continue;
    const PipelineResult r = six_flow_pipeline(g);
    EXPECT_TRUE(oracle::is_nowhere_zero_flow(g, r.flow.orientation, r.flow.values, 6));
  }
}

TEST(Pipeline, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(95);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedGraph g = with_signature(named::petersen(), rng() & 0x7FFF);
    bool flowed = false;
    try {
      six_flow_pipeline(g);
      flowed = true;
    } catch (const FlowError& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotFlowAdmissible);
    }
    if (flowed) EXPECT_TRUE(brute_force_k_flow(g, 6).has_value());
  }
}

TEST(Pipeline, PreconditionsAreReportedDistinctly) {
  EXPECT_EQ(pipeline_error(named::mixed_digon()), ErrorCode::NotCubic);
  EXPECT_EQ(pipeline_error(named::dumbbell()), ErrorCode::HasLoop);
  EXPECT_EQ(pipeline_error(with_signature(named::petersen(), 1)), ErrorCode::NotFlowAdmissible);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const SignedGraph k4 = with_signature(named::complete4(), mask);
    EXPECT_EQ(pipeline_error(k4),
              is_flow_admissible(k4) ? ErrorCode::CyclicConnectivityBelow5 : ErrorCode::NotFlowAdmissible);
  }
  EXPECT_EQ(pipeline_error(named::complete_bipartite33()), ErrorCode::CyclicConnectivityBelow5);
}

TEST(Pipeline, ErrorCodeNames) {
  EXPECT_EQ(to_string(ErrorCode::NotCubic), "NotCubic");
  EXPECT_EQ(to_string(ErrorCode::CyclicConnectivityBelow5), "CyclicConnectivityBelow5");
  EXPECT_EQ(static_cast<int>(ErrorCode::InvariantBreach), 10);
}

}  // namespace
}  // namespace sixflow
