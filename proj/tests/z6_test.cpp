#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sixflow/analysis.hpp"
#include "sixflow/flow_algebra.hpp"
#include "sixflow/generators.hpp"
#include "sixflow/io.hpp"
#include "sixflow/z6.hpp"

namespace sixflow {
namespace {

// Checks a Z2 x Z3 valuation componentwise: the Z2 part sums to zero mod 2
// at every vertex, the Z3 part has zero boundary mod 3 under its
// orientation, and no edge carries (0, 0).
::testing::AssertionResult is_z2z3_flow(const SignedGraph& g, const Z2Z3Flow& f) {
  if (f.values.size() != g.edge_count()) return ::testing::AssertionFailure() << "size mismatch";
  if (!oracle::orientation_matches_signs(g, f.orientation)) return ::testing::AssertionFailure() << "orientation";
  EdgeValuation a(g.edge_count()), b(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.values[e].is_zero()) return ::testing::AssertionFailure() << "zero on edge " << e;
    a[e] = f.values[e].a;
    b[e] = f.values[e].b;
  }
  const auto ba = oracle::boundary(g, f.orientation, a);
  const auto bb = oracle::boundary(g, f.orientation, b);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (ba[v] % 2 != 0) return ::testing::AssertionFailure() << "Z2 boundary at " << v;
    if (bb[v] % 3 != 0) return ::testing::AssertionFailure() << "Z3 boundary at " << v;
  }
  return ::testing::AssertionSuccess();
}

std::size_t odd_negative_count(const SignedGraph& g, const Z2Z3Valuation& values) {
  std::size_t count = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) count += g.edge(e).is_negative() && values[e].a == 1;
  return count;
}

NormalizedValuation normalize_via_search(const SignedGraph& g) {
  const auto z = find_z2z3_flow(g);
  if (!z) throw std::runtime_error("no Z2 x Z3 flow");
  return normalize_cubic(g, z->orientation, to_z6(z->values));
}

TEST(Isomorphism, TableEntries) {
  EXPECT_EQ(z2z3_to_z6(0, 0), 0);
  EXPECT_EQ(z2z3_to_z6(1, 1), 1);
  EXPECT_EQ(z2z3_to_z6(0, 2), 2);
  EXPECT_EQ(z2z3_to_z6(1, 0), 3);
  EXPECT_EQ(z2z3_to_z6(0, 1), 4);
  EXPECT_EQ(z2z3_to_z6(1, 2), 5);
  EXPECT_THROW(z2z3_to_z6(2, 0), std::out_of_range);
  EXPECT_THROW(z2z3_to_z6(0, 3), std::out_of_range);
}

TEST(Isomorphism, BijectiveHomomorphism) {
  std::set<int> images;
  for (std::uint8_t a = 0; a < 2; ++a) {
    for (std::uint8_t b = 0; b < 3; ++b) {
      images.insert(z2z3_to_z6(a, b));
      EXPECT_EQ(z6_to_z2z3(z2z3_to_z6(a, b)), (Z2Z3{a, b}));
      for (std::uint8_t c = 0; c < 2; ++c) {
        for (std::uint8_t d = 0; d < 3; ++d) {
          const int lhs = z2z3_to_z6((a + c) % 2, (b + d) % 3);
          const int rhs = (z2z3_to_z6(a, b) + z2z3_to_z6(c, d)) % 6;
          EXPECT_EQ(lhs, rhs);
        }
      }
    }
  }
  EXPECT_EQ(images.size(), 6u);
}

TEST(Isomorphism, AgreesWithResidues) {
  for (std::uint8_t x = 0; x < 6; ++x) EXPECT_EQ(z6_to_z2z3(x), (Z2Z3{static_cast<std::uint8_t>(x % 2), static_cast<std::uint8_t>(x % 3)}));
}

TEST(Search, AllNegativePetersen) {
  const SignedGraph g = named::petersen(Sign::Negative);
  const auto f = find_z2z3_flow(g);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_z2z3_flow(g, *f));
  EXPECT_EQ(odd_negative_count(g, f->values) % 2, 0u);
  const Z6Valuation phi6 = to_z6(f->values);
  EXPECT_TRUE(is_zero(boundary_mod(g, f->orientation, EdgeValuation(phi6.begin(), phi6.end()), 6)));
}

TEST(Search, MixedDigonHasNone) { EXPECT_FALSE(find_z2z3_flow(named::mixed_digon()).has_value()); }

TEST(Search, AllPositiveK4AvoidsNegativeEdgesTrivially) {
  const SignedGraph g = named::complete4();
  const auto f = find_z2z3_flow(g);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_z2z3_flow(g, *f));
  EXPECT_EQ(odd_negative_count(g, f->values), 0u);
}

TEST(Search, IntegerSixFlowsImplyASearchHit) {
  for (const SignedGraph& g : fixtures::corpus(14, 8)) {
    if (!brute_force_k_flow(g, 6)) continue;
    const auto f = find_z2z3_flow(g);
    ASSERT_TRUE(f.has_value()) << serialize_sgf(g);
    EXPECT_TRUE(is_z2z3_flow(g, *f));
    EXPECT_EQ(odd_negative_count(g, f->values) % 2, 0u);
  }
}

TEST(Search, HitsAreFlowsOnRandomGraphs) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 150; ++trial) {
    const SignedGraph g = generate_random_multigraph(1 + rng() % 7, rng() % 12, 0.5, 0.15, rng());
    const auto f = find_z2z3_flow(g);
    if (f) {
      EXPECT_TRUE(is_z2z3_flow(g, *f));
      EXPECT_EQ(odd_negative_count(g, f->values) % 2, 0u);
    }
  }
}

TEST(Normalize, FixedPointIsUnchanged) {
  const NormalizedValuation n = normalize_via_search(named::petersen(Sign::Negative));
  const Z6Valuation phi6(n.values.begin(), n.values.end());
  const NormalizedValuation again = normalize_cubic(n.graph, n.orientation, phi6);
  EXPECT_TRUE(again.switched.empty());
  EXPECT_EQ(again.graph, n.graph);
  EXPECT_EQ(again.orientation, n.orientation);
  EXPECT_EQ(again.values, n.values);
}

TEST(Normalize, ValueFiveIsReversedToOne) {
  const NormalizedValuation n = normalize_via_search(named::petersen());
  EdgeId e = 0;
  while (e < n.values.size() && n.values[e] != 1) ++e;
  ASSERT_LT(e, n.values.size());
  Orientation tau = n.orientation;
  tau[e] = {flipped(tau[e][0]), flipped(tau[e][1])};
  Z6Valuation phi6(n.values.begin(), n.values.end());
  phi6[e] = 5;
  const NormalizedValuation again = normalize_cubic(n.graph, tau, phi6);
  EXPECT_EQ(again.values[e], 1);
  EXPECT_EQ(again.orientation[e], n.orientation[e]);
  EXPECT_TRUE(again.switched.empty());
}

TEST(Normalize, ConclusionsHoldOnPetersenSignatures) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph g = with_signature(named::petersen(), rng() & 0x7FFF);
    if (!is_flow_admissible(g)) continue;
    const NormalizedValuation n = normalize_via_search(g);
    const auto b = oracle::boundary(n.graph, n.orientation, n.values);
    std::size_t sources = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::size_t in = 0;
      for (EdgeEnd end : n.graph.ends_at(v)) in += n.orientation.at(end) == Dir::Toward;
      ASSERT_LE(in, 1u);
      if (in == 0) {
        EXPECT_EQ(b[v], 6);
        ++sources;
      } else {
        EXPECT_EQ(b[v], 0);
      }
    }
    for (FlowValue x : n.values) {
      EXPECT_GE(x, 1);
      EXPECT_LE(x, 3);
    }
    EXPECT_EQ(sources, n.sources);
    EXPECT_EQ(sources % 2, 0u);
    // Undoing the recorded switches returns the original signature.
    SignedGraph back = n.graph;
    Orientation tau = n.orientation;
    for (VertexId v : n.switched) {
      Switched s = switch_vertex(back, tau, v);
      back = std::move(s.graph);
      tau = std::move(s.orientation);
    }
    EXPECT_EQ(back, g);
  }
}

TEST(Normalize, RejectsBadInput) {
  const SignedGraph g = named::petersen(Sign::Negative);
  const Orientation tau = Orientation::canonical(g);
  EXPECT_THROW(normalize_cubic(g, tau, Z6Valuation(15, 0)), NormalizationError);
  EXPECT_THROW(normalize_cubic(g, tau, Z6Valuation(15, 1)), NormalizationError);
  EXPECT_THROW(normalize_cubic(named::dumbbell(), Orientation::canonical(named::dumbbell()), {2, 2, 2}),
               NormalizationError);
  EXPECT_THROW(normalize_cubic(named::cycle(4), Orientation::canonical(named::cycle(4)), {1, 1, 1, 1}),
               NormalizationError);
}

TEST(SourceParity, AllPositiveIsTrivial) {
  // A directed positive triangle with unit values: every vertex is a
  // near-source with zero boundary.
  const SignedGraph g = named::triangle();
  const SourceParity p = source_parity(g, Orientation::canonical(g), {1, 1, 1});
  EXPECT_EQ(p.sources, 0u);
  EXPECT_EQ(p.x1, 0);
  EXPECT_EQ(p.x2, 0);
  EXPECT_EQ(p.x3, 0);
  EXPECT_TRUE(p.holds);
}

TEST(SourceParity, HandBuiltNegativeDigon) {
  // Two negative edges, both away from both ends with value 3: each vertex
  // is a source with boundary 6, and each edge counts once towards x3.
  const SignedGraph g(2, {Edge{0, 1, Sign::Negative}, Edge{0, 1, Sign::Negative}});
  const Orientation tau({{Dir::Away, Dir::Away}, {Dir::Away, Dir::Away}});
  const SourceParity p = source_parity(g, tau, {3, 3});
  EXPECT_EQ(p.sources, 2u);
  EXPECT_EQ(p.x1, 0);
  EXPECT_EQ(p.x2, 0);
  EXPECT_EQ(p.x3, 2);
  EXPECT_TRUE(p.holds);
}

TEST(SourceParity, EquationCheckedIndependentlyOnRandomCubicGraphs) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SignedGraph g = generate_random_cubic_signed(10 + 2 * (seed % 4), 0.5, seed);
    if (!is_flow_admissible(g)) continue;
    const NormalizedValuation n = normalize_via_search(g);
    std::int64_t x[4] = {0, 0, 0, 0};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (n.graph.edge(e).is_negative()) x[n.values[e]] += n.orientation[e][0] == Dir::Away ? 1 : -1;
    }
    const auto w = static_cast<std::int64_t>(n.sources);
    EXPECT_EQ(6 * w, 2 * (x[1] + x[3]) + 4 * x[2] + 4 * x[3]);
    EXPECT_EQ(w % 2, 0);
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace sixflow
