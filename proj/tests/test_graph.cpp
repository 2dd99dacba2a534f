#include <gtest/gtest.h>

#include <random>

#include "kclique/error.hpp"
#include "kclique/graph.hpp"
#include "support.hpp"

using namespace kclique;

TEST(Graph, RejectsSelfLoopDuplicateAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
  EXPECT_THROW(Graph(65, {}), Error);
}

TEST(Graph, EdgesNormalizedAndSorted) {
  const Graph g(4, {{2, 3}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(Graph, InducedEdges) {
  const Graph g = fixture_g4();
  EXPECT_EQ(g.induced_edges(0b0111), 3u);
  EXPECT_EQ(g.induced_edges(0b1111), 4u);
  EXPECT_EQ(g.induced_edges(0b1001), 0u);
}

TEST(EdgeList, ParsesCommentsBlankLinesAndCrlf) {
  const Graph g = parse_edge_list("# triangle plus tail\r\n4 4\r\n\r\n0 1\r\n0 2 # c\r\n1 2\r\n2 3\r\n");
  EXPECT_EQ(g.num_nodes(), 4u);
  EXPECT_EQ(g.edges(), fixture_g4().edges());
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("3 2\n0 1\n1 0\n");
    FAIL() << "duplicate accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("first seen on line 2"), std::string::npos);
  }
  try {
    parse_edge_list("3 1\n0 0\n");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracles::random_graph(2 + i % 8, 0.5, rng);
    const Graph back = parse_edge_list(format_edge_list(g));
    EXPECT_EQ(back.num_nodes(), g.num_nodes());
    EXPECT_EQ(back.edges(), g.edges());
  }
}

TEST(Cliques, FixtureG4HasOneTriangle) {
  const auto c = find_cliques_bruteforce(fixture_g4(), 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members, (std::vector<Node>{0, 1, 2}));
}

TEST(Cliques, FixtureG6) {
  const Graph g = fixture_g6();
  const auto four = find_cliques_bruteforce(g, 4);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].members, (std::vector<Node>{1, 2, 3, 4}));
  EXPECT_EQ(find_cliques_bruteforce(g, 3).size(), 6u);
  EXPECT_TRUE(find_cliques_bruteforce(g, 5).empty());
}

TEST(Cliques, StarIsTriangleFree) {
  EXPECT_TRUE(find_cliques_bruteforce(fixture_star4(), 3).empty());
  EXPECT_EQ(find_cliques_bruteforce(fixture_star4(), 2).size(), 3u);
}

TEST(Cliques, KOutOfRangeThrows) {
  EXPECT_THROW(find_cliques_bruteforce(fixture_g4(), 0), Error);
  EXPECT_THROW(find_cliques_bruteforce(fixture_g4(), 5), Error);
}

TEST(Cliques, MatchesPairwiseOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Graph g = oracles::random_graph(n, 0.6, rng);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::uint64_t> expect;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (oracles::is_k_clique(g, mask, k)) {
          expect.push_back(mask);
        }
      }
      std::vector<std::uint64_t> got;
      for (const auto& s : find_cliques_bruteforce(g, k)) {
        got.push_back(subset_to_bitstring(s, n).index);
      }
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Bitstrings, NodeIsQubitAndLeftmostIsHighest) {
  const auto b = subset_to_bitstring({{1, 2, 3, 4}}, 6);
  EXPECT_EQ(b.index, 30u);
  EXPECT_EQ(b.display, "011110");
  EXPECT_EQ(bitstring_to_subset(30, 6).members, (std::vector<Node>{1, 2, 3, 4}));
  EXPECT_EQ(index_to_bitstring(7, 4), "0111");
}

TEST(Binomial, SmallAndLarge) {
  EXPECT_EQ(binomial(4, 3), 4u);
  EXPECT_EQ(binomial(6, 0), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
  for (std::size_t n = 1; n < 30; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}
