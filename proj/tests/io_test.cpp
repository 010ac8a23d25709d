#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "oracles.hpp"
#include "sixflow/convert.hpp"
#include "sixflow/generators.hpp"
#include "sixflow/io.hpp"

namespace sixflow {
namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_sgf(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(Sgf, SingleNegativeEdge) {
  const SignedGraph g = parse_sgf("sgf 1\n2 1\n0 1 -\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, Sign::Negative}));
}

TEST(Sgf, NegativeLoop) {
  const SignedGraph g = parse_sgf("sgf 1\n1 1\n0 0 -");
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.edge(0).is_loop());
  EXPECT_TRUE(g.edge(0).is_negative());
}

TEST(Sgf, CommentsAreSkipped) {
  const SignedGraph g = parse_sgf("# a digon\nsgf 1\n# counts\n2 2\n0 1 +\n# second edge\n1 0 -\n");
  EXPECT_EQ(g, SignedGraph(2, {Edge{0, 1, Sign::Positive}, Edge{1, 0, Sign::Negative}}));
}

TEST(Sgf, RoundTripPreservesEdgeOrder) {
  for (const SignedGraph& g : {named::petersen(Sign::Negative), named::dumbbell(), named::mixed_digon(),
                               generate_random_multigraph(6, 14, 0.5, 0.2, 3)}) {
    const std::string text = serialize_sgf(g);
    EXPECT_EQ(parse_sgf(text), g);
    EXPECT_EQ(serialize_sgf(parse_sgf(text)), text);
  }
}

TEST(Sgf, CorpusFilesRoundTripByteForByte) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SIXFLOW_DATA_DIR)) {
    if (entry.path().extension() != ".sgf") continue;
    std::string text = read_file(entry.path().string());
    // Strip leading comment lines; the serializer does not emit comments.
    while (!text.empty() && text[0] == '#') text.erase(0, text.find('\n') + 1);
    EXPECT_EQ(serialize_sgf(parse_sgf(text)), text) << entry.path();
    ++files;
  }
  EXPECT_GE(files, 4u);
}

TEST(Sgf, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("sgf 2\n1 0\n"), 1u);
  EXPECT_EQ(parse_error_line("# c\nsgf 1\n1\n"), 3u);
  EXPECT_EQ(parse_error_line("sgf 1\n2 1\n0 2 +\n"), 3u);
  EXPECT_EQ(parse_error_line("sgf 1\n2 2\n0 1 +\n"), 4u);
  EXPECT_EQ(parse_error_line("sgf 1\n2 1\n0 1 +\n0 1 +\n"), 4u);
  EXPECT_EQ(parse_error_line("sgf 1\n2 1\n0 1 x\n"), 3u);
  EXPECT_EQ(parse_error_line("sgf 1\n2 1\n0  1 +\n"), 3u);
  EXPECT_EQ(parse_error_line("sgf 1\r\n2 1\n0 1 +\n"), 1u);
  EXPECT_EQ(parse_error_line("sgf 1\n2 1\n-1 1 +\n"), 3u);
  EXPECT_EQ(parse_error_line(""), 1u);
}

TEST(Flw, RoundTrip) {
  const SignedGraph g = named::petersen(Sign::Negative);
  const PipelineResult r = six_flow_pipeline(g);
  const std::string text = serialize_flw(r.flow);
  const IntegerFlow back = parse_flw(text, g);
  EXPECT_EQ(back.orientation, r.flow.orientation);
  EXPECT_EQ(back.values, r.flow.values);
  EXPECT_EQ(serialize_flw(back), text);
  EXPECT_EQ(text.substr(0, 9), "flw 1\n15\n");
}

TEST(Flw, DumbbellHandFlow) {
  const SignedGraph g = named::dumbbell();
  const IntegerFlow f = parse_flw("flw 1\n3\n0 a a 1\n1 a t 2\n2 t t 1\n", g);
  EXPECT_TRUE(oracle::is_nowhere_zero_flow(g, f.orientation, f.values, 3));
}

TEST(Flw, Rejections) {
  const SignedGraph g = named::dumbbell();
  // Positive edge with equal directions.
  EXPECT_THROW(parse_flw("flw 1\n3\n0 a a 1\n1 a a 2\n2 t t 1\n", g), ParseError);
  // Wrong edge id order.
  EXPECT_THROW(parse_flw("flw 1\n3\n0 a a 1\n2 t t 1\n1 a t 2\n", g), ParseError);
  // Edge count mismatch.
  EXPECT_THROW(parse_flw("flw 1\n2\n0 a a 1\n1 a t 2\n", g), ParseError);
  // Bad direction token.
  EXPECT_THROW(parse_flw("flw 1\n3\n0 a a 1\n1 a x 2\n2 t t 1\n", g), ParseError);
  try {
    parse_flw("flw 1\n3\n0 a a 1\n1 a t two\n2 t t 1\n", g);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(Generator, FourVerticesGivesK4) {
  const SignedGraph g = generate_random_cubic_signed(4, 0.0, 17);
  EXPECT_TRUE(g.is_cubic());
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(g.negative_edges().empty());
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) pairs.insert(std::minmax(e.end1, e.end2));
  EXPECT_EQ(pairs.size(), 6u);
}

TEST(Generator, IsDeterministic) {
  EXPECT_EQ(generate_random_cubic_signed(16, 0.3, 99), generate_random_cubic_signed(16, 0.3, 99));
  EXPECT_NE(generate_random_cubic_signed(16, 0.3, 99), generate_random_cubic_signed(16, 0.3, 100));
}

TEST(Generator, OutputsAreSimpleCubic) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const SignedGraph g = generate_random_cubic_signed(10, 0.5, seed);
    ASSERT_TRUE(g.is_cubic()) << seed;
    ASSERT_FALSE(g.has_loop()) << seed;
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : g.edges()) pairs.insert(std::minmax(e.end1, e.end2));
    ASSERT_EQ(pairs.size(), g.edge_count()) << seed;
  }
}

TEST(Generator, RejectsBadParameters) {
  EXPECT_THROW(generate_random_cubic_signed(5, 0.5, 1), GeneratorError);
  EXPECT_THROW(generate_random_cubic_signed(2, 0.5, 1), GeneratorError);
  EXPECT_THROW(generate_random_cubic_signed(6, 1.5, 1), GeneratorError);
}

TEST(Generator, SignatureMask) {
  const SignedGraph g = with_signature(named::petersen(), 0b101);
  EXPECT_EQ(g.negative_edges(), (std::vector<EdgeId>{0, 2}));
}

}  // namespace
}  // namespace sixflow
