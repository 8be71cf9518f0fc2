#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "maxkcut/graph.hpp"
#include "oracles.hpp"

namespace maxkcut {
namespace {

TEST(ParseGraph, CompleteGraphK3) {
  const WeightedGraph g = parse_graph("3 3\n1 2 1\n2 3 1\n1 3 1");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_DOUBLE_EQ(g.total_weight(), 3.0);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 1.0}));
  EXPECT_EQ(g.edges()[2], (Edge{0, 2, 1.0}));
}

TEST(ParseGraph, SingleWeightedEdge) {
  const WeightedGraph g = parse_graph("2 1\n1 2 2.5");
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].w, 2.5);
}

TEST(ParseGraph, CommentsBlankLinesAndCrlf) {
  const WeightedGraph g = parse_graph("# instance\r\n\r\n3 2\r\n# edges\r\n1 2 1\r\n2 3 4\r\n");
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_DOUBLE_EQ(g.total_weight(), 5.0);
}

TEST(ParseGraph, IntegerWeightsBecomeDoubles) {
  const WeightedGraph g = parse_graph("2 1\n2 1 7\n");
  EXPECT_DOUBLE_EQ(g.edges()[0].w, 7.0);
}

struct BadInput {
  const char* text;
  std::size_t line;
};

class ParseGraphErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseGraphErrors, ReportsLine) {
  const BadInput& in = GetParam();
  try {
    parse_graph(in.text);
    FAIL() << "expected a parse error for: " << in.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), in.line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, ParseGraphErrors,
    ::testing::Values(BadInput{"3 1\n1 1 1", 2},           // self-loop
                      BadInput{"3\n1 2 1", 1},              // header
                      BadInput{"x 1\n1 2 1", 1},            // header
                      BadInput{"3 1\n1 4 1", 2},            // out of range
                      BadInput{"3 1\n0 2 1", 2},            // 0 is not a 1-based index
                      BadInput{"3 1\n1 2 -1", 2},           // negative weight
                      BadInput{"3 2\n1 2 1\n2 1 3", 3},     // duplicate
                      BadInput{"3 1\n1 2 abc", 2},          // weight
                      BadInput{"3 1\n1 2", 2},              // field count
                      BadInput{"3 2\n1 2 1\n", 2},          // too few edges (reported at the last line)
                      BadInput{"3 1\n1 2 1\n2 3 1\n", 3},   // too many edges
                      BadInput{"# only a comment\n", 1}));  // missing header

TEST(WeightedGraph, ConstructorValidates) {
  EXPECT_THROW(WeightedGraph(0, {}), GraphError);
  EXPECT_THROW(WeightedGraph(2, {{0, 0, 1.0}}), GraphError);
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), GraphError);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, -0.5}}), GraphError);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 2.0}}), GraphError);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, std::numeric_limits<double>::infinity()}}), GraphError);
}

TEST(CompleteGraph, Sizes) {
  EXPECT_EQ(complete_graph(3).num_edges(), 3u);
  EXPECT_DOUBLE_EQ(complete_graph(3).total_weight(), 3.0);
  EXPECT_EQ(complete_graph(4).num_edges(), 6u);
  EXPECT_DOUBLE_EQ(complete_graph(5, 2.0).total_weight(), 20.0);
  EXPECT_THROW(complete_graph(1), GraphError);
}

TEST(CutValue, Examples) {
  const WeightedGraph k3 = complete_graph(3);
  const std::vector<Label> rainbow{0, 1, 2};
  const std::vector<Label> same{0, 0, 0};
  EXPECT_DOUBLE_EQ(cut_value(k3, rainbow), 3.0);
  EXPECT_DOUBLE_EQ(cut_value(k3, same), 0.0);
  const WeightedGraph edge = parse_graph("2 1\n1 2 2.5");
  const std::vector<Label> split{0, 1};
  EXPECT_DOUBLE_EQ(cut_value(edge, split), 2.5);
  const std::vector<Label> short_labels{0, 1};
  EXPECT_THROW(cut_value(k3, short_labels), std::invalid_argument);
}

TEST(CutValue, RelabelingInvariantAndBounded) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const WeightedGraph g = oracle::random_graph(9, 0.5, rng);
    const int k = 2 + round % 4;
    std::vector<Label> labels(g.num_vertices());
    for (Label& l : labels) l = static_cast<Label>(rng() % k);
    std::vector<Label> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Label> relabeled(labels.size());
    std::transform(labels.begin(), labels.end(), relabeled.begin(), [&](Label l) { return perm[l]; });
    const double value = cut_value(g, labels);
    EXPECT_DOUBLE_EQ(value, cut_value(g, relabeled));
    EXPECT_GE(value, 0.0);
    EXPECT_LE(value, g.total_weight());
  }
}

TEST(SerializeGraph, RoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> weight(0.0, 10.0);
  for (int round = 0; round < 20; ++round) {
    const WeightedGraph base = oracle::random_graph(3 + round, 0.4, rng);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (Edge& e : edges) e.w = weight(rng);
    const WeightedGraph g(base.num_vertices(), edges);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

}  // namespace
}  // namespace maxkcut
