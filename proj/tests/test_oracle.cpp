#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "kclique/decompose.hpp"
#include "kclique/error.hpp"
#include "kclique/oracle.hpp"
#include "kclique/statevector.hpp"
#include "support.hpp"

using namespace kclique;
using oracles::C;

namespace {

// Runs the oracle on |s>|0...0> and checks the output is -|s>|0> for
// k-cliques and +|s>|0> otherwise. Restricted to weight-k inputs when nodes
// are not counted.
void expect_phase_oracle(const Graph& g, std::size_t k, const OracleMode& mode) {
  const Circuit oracle = build_oracle(g, k, mode);
  const std::size_t n = g.num_nodes();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!mode.count_nodes && static_cast<std::size_t>(std::popcount(s)) != k) {
      continue;
    }
    const auto out = oracles::reference_run(oracle, oracles::basis(oracle.num_qubits(), s));
    const double sign = oracles::is_k_clique(g, s, k) ? -1.0 : 1.0;
    for (std::uint64_t i = 0; i < out.size(); ++i) {
      const C expect = i == s ? C(sign) : C(0.0);
      ASSERT_LT(std::abs(out[i] - expect), 1e-12)
          << "s=" << s << " i=" << i << " k=" << k << " style="
          << oracle_name(mode.style) << " count_nodes=" << mode.count_nodes;
    }
  }
}

}  // namespace

TEST(Counter, Widths) {
  EXPECT_EQ(counter_width(0), 0u);
  EXPECT_EQ(counter_width(1), 1u);
  EXPECT_EQ(counter_width(3), 2u);
  EXPECT_EQ(counter_width(4), 3u);
  EXPECT_EQ(counter_width(6), 3u);
  EXPECT_EQ(counter_width(7), 3u);
  EXPECT_EQ(counter_width(8), 4u);
}

TEST(Counter, LayoutForG4) {
  const auto full = counter_layout(4, 3, {OracleStyle::Checking, true});
  EXPECT_EQ(full.edge_counter_width, 2u);
  EXPECT_EQ(full.node_counter_width, 3u);
  EXPECT_EQ(full.total_qubits(), 4u + 2 + 1 + 3 + 1 + 1);
  const auto w = counter_layout(4, 3, {OracleStyle::Checking, false});
  EXPECT_EQ(w.total_qubits(), 7u);
  const auto inc = counter_layout(4, 3, {OracleStyle::Incremental, false});
  EXPECT_EQ(inc.total_qubits(), 8u);
}

TEST(Increment, AddsOneModuloWidth) {
  for (std::size_t w = 1; w <= 5; ++w) {
    const Circuit inc = increment_circuit(w);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << w); ++x) {
      const auto out = oracles::reference_run(inc, oracles::basis(w, x));
      const std::uint64_t y = (x + 1) % (std::uint64_t{1} << w);
      EXPECT_NEAR(std::abs(out[y]), 1.0, 1e-12) << "w=" << w << " x=" << x;
    }
  }
  EXPECT_THROW(increment_circuit(0), Error);
}

TEST(Oracle, RegistersInOrder) {
  const Circuit c = build_oracle(fixture_g4(), 3, {OracleStyle::Incremental, true});
  std::vector<std::string> names;
  for (const auto& r : c.registers()) {
    names.push_back(r.name);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"nodes", "edge_counter", "edge_tmp", "edge_flag",
                                             "node_counter", "node_flag", "clique_flag"}));
  EXPECT_EQ(c.reg("nodes").start, 0u);
}

TEST(Oracle, Errors) {
  EXPECT_THROW(build_oracle(fixture_g4(), 1, {}), Error);
  EXPECT_THROW(build_oracle(fixture_g4(), 5, {}), Error);
  try {
    build_oracle(Graph(3, {}), 2, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "oracle requires at least one edge");
  }
}

TEST(Oracle, MarksTriangleOfG4InEveryMode) {
  for (auto style : {OracleStyle::Checking, OracleStyle::Incremental}) {
    for (bool count : {false, true}) {
      expect_phase_oracle(fixture_g4(), 3, {style, count});
    }
  }
}

TEST(Oracle, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3 + trial % 3;
    Graph g = oracles::random_graph(n, 0.6, rng);
    if (g.num_edges() == 0) {
      g = Graph(n, {{0, 1}});
    }
    for (std::size_t k = 2; k <= std::min<std::size_t>(n, 4); ++k) {
      for (auto style : {OracleStyle::Checking, OracleStyle::Incremental}) {
        for (bool count : {false, true}) {
          expect_phase_oracle(g, k, {style, count});
        }
      }
    }
  }
}

TEST(Oracle, WideNodeCounterDoesNotWrap) {
  // K_6 with k = 2: the full set has weight 6 and 15 edges. Counters of
  // width log2(k+1) and log2(C(k,2)+1) would read 6 mod 4 = 2 and
  // 15 mod 2 = 1 and accept it.
  std::vector<Edge> edges;
  for (Node u = 0; u < 6; ++u) {
    for (Node v = u + 1; v < 6; ++v) {
      edges.push_back({u, v});
    }
  }
  const Graph g(6, edges);
  for (auto style : {OracleStyle::Checking, OracleStyle::Incremental}) {
    const Circuit oracle = build_oracle(g, 2, {style, true});
    const std::uint64_t s = 0b111111;
    StateVector psi(oracle.num_qubits(), s);
    psi.apply(oracle);
    EXPECT_NEAR(psi[s].real(), 1.0, 1e-12);
  }
}

TEST(Oracle, SizeIsAffineInEdgeCount) {
  // Adding an edge adds a fixed number of gates for fixed n and k.
  for (auto style : {OracleStyle::Checking, OracleStyle::Incremental}) {
    std::vector<Edge> edges;
    std::vector<std::size_t> sizes;
    for (Node u = 0; u < 7; ++u) {
      for (Node v = u + 1; v < 7; ++v) {
        edges.push_back({u, v});
        sizes.push_back(build_oracle(Graph(7, edges), 3, {style, false}).size());
      }
    }
    for (std::size_t i = 2; i < sizes.size(); ++i) {
      EXPECT_EQ(sizes[i] - sizes[i - 1], sizes[1] - sizes[0]);
    }
  }
}

TEST(Oracle, WorkQubitsRestoredAfterLowering) {
  const Circuit low = decompose_mc(build_oracle(fixture_g6(), 4, {OracleStyle::Checking, true}));
  const std::size_t n = 6;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    StateVector psi(low.num_qubits(), s);
    psi.apply(low);
    const double sign = oracles::is_k_clique(fixture_g6(), s, 4) ? -1.0 : 1.0;
    EXPECT_NEAR(psi[s].real(), sign, 1e-12) << s;
  }
}
