#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "regkit/graph.hpp"
#include "regkit/graph_io.hpp"
#include "support.hpp"

using namespace regkit;

TEST(Graph, BasicStructure) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_EQ(g.num_edges(), 2U);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_THROW(g.add_edge(3, 3), PreconditionError);
  EXPECT_ANY_THROW(g.add_edge(0, 4));
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto g = support::random_graph(rng, 9);
    const auto c = complement(g);
    EXPECT_EQ(g.num_edges() + c.num_edges(), g.order() * (g.order() - 1) / 2);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(Graph, RecognitionMatchesBruteForceOnAllSixVertexGraphs) {
  const int n = 6;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const auto e = support::edges_of_mask(n, mask);
    const auto g = support::to_graph(n, e);
    const auto adj = oracle::adjacency(n, e);
    const auto cadj = oracle::complement(n, adj);
    ASSERT_EQ(is_chordal(g).has_value(), !oracle::has_long_induced_cycle(n, adj)) << mask;
    ASSERT_EQ(is_cochordal(g), !oracle::has_long_induced_cycle(n, cadj)) << mask;
    ASSERT_EQ(is_gap_free(g), !oracle::has_long_induced_cycle(n, cadj, 4, 4)) << mask;
    ASSERT_EQ(has_induced_c4(g), oracle::has_long_induced_cycle(n, adj, 4, 4)) << mask;
    ASSERT_EQ(is_bipartite(g).has_value(), oracle::two_colorable(n, adj)) << mask;
  }
}

TEST(Graph, PerfectEliminationOrderIsReturned) {
  const auto g = support::to_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const auto order = is_chordal(g);
  ASSERT_TRUE(order);
  EXPECT_TRUE(is_perfect_elimination_ordering(g, *order));
  const auto c5 = support::to_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_FALSE(is_chordal(c5));
  EXPECT_FALSE(is_cochordal(c5));
}

TEST(Graph, BipartitionSeparatesEdges) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto g = support::random_graph(rng, 10, true);
    const auto part = is_bipartite(g);
    ASSERT_TRUE(part);
    for (auto [u, v] : g.edges()) EXPECT_NE(part->left.contains(u), part->left.contains(v));
  }
}

TEST(Graph, SuspensionGraphAddsNeighbourEdges) {
  // path 0-1-2-3: N(1) = {0, 2}, N(2) = {1, 3}; the only new edge is 0-3
  const auto g = support::to_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto h = suspension_graph(g, 1, 2);
  EXPECT_TRUE(h.has_edge(0, 3));
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_EQ(h.num_edges(), 4U);
  EXPECT_THROW(suspension_graph(g, 0, 2), PreconditionError);
}

TEST(GraphIO, EdgeListParsing) {
  const auto g = parse_edge_list("# c5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(g.order(), 5U);
  EXPECT_EQ(g.num_edges(), 5U);
  EXPECT_EQ(parse_edge_list("n 7\n0 1\n").order(), 7U);
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("a b\n"), ParseError);
}

TEST(GraphIO, Graph6KnownStrings) {
  // nauty's encodings: K3 = "Bw", P3 (0-1, 1-2) = "Bg", empty graph on 5 = "D??"
  const auto k3 = parse_graph6("Bw");
  EXPECT_EQ(k3.order(), 3U);
  EXPECT_EQ(k3.num_edges(), 3U);
  const auto p3 = parse_graph6("Bg");
  EXPECT_TRUE(p3.has_edge(0, 1));
  EXPECT_TRUE(p3.has_edge(1, 2));
  EXPECT_EQ(p3.num_edges(), 2U);
  EXPECT_EQ(parse_graph6("D??").num_edges(), 0U);
  EXPECT_EQ(encode_graph6(k3), "Bw");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), k3);
  EXPECT_THROW(parse_graph6("B~~"), ParseError);
}

TEST(GraphIO, Graph6RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = support::random_graph(rng, 70);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  }
}

TEST(GraphIO, Corpus) {
  const auto c = parse_graph6_corpus("# two graphs\nBw\n\nD??\n");
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c[1].order(), 5U);
  EXPECT_THROW(parse_graph6_corpus("Bw\n!!\n"), ParseError);
}
