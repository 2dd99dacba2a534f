#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kclique {

using Node = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over nodes [0, n). Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws kclique::Error on self-loops, duplicate edges or endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_nodes() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edges in lexicographic (u, v) order.
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

  [[nodiscard]] bool has_edge(Node a, Node b) const;

  /// Number of edges with both endpoints in the node set encoded by `mask`.
  [[nodiscard]] std::size_t induced_edges(std::uint64_t mask) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;  // bit j of row i set iff i~j
};

/// Sorted set of node indices describing a candidate clique.
struct NodeSubset {
  std::vector<Node> members;

  friend bool operator==(const NodeSubset&, const NodeSubset&) = default;
};

/// Basis-state encoding of a node subset: bit i of `index` is node i.
/// `display` prints qubit n-1 leftmost, as in |011110>.
struct BasisState {
  std::uint64_t index = 0;
  std::string display;
};

/// Parses "n m" followed by m lines "u v". '#' starts a comment; blank lines
/// are skipped; LF and CRLF are both accepted. Errors carry the line number.
Graph parse_edge_list(std::string_view text);

/// Serializes a graph in the format accepted by parse_edge_list.
std::string format_edge_list(const Graph& g);

/// Every size-k subset inducing C(k,2) edges, lexicographically ordered.
std::vector<NodeSubset> find_cliques_bruteforce(const Graph& g, std::size_t k);

BasisState subset_to_bitstring(const NodeSubset& s, std::size_t n);
NodeSubset bitstring_to_subset(std::uint64_t index, std::size_t n);
std::string index_to_bitstring(std::uint64_t index, std::size_t n);

/// C(n, k) with exact integer arithmetic.
std::uint64_t binomial(std::size_t n, std::size_t k);

// Bundled fixtures.

/// 4 nodes, edges {01, 02, 12, 23}: a single triangle on {0, 1, 2}.
Graph fixture_g4();
/// 6 nodes, 10 edges: a single 4-clique on {1, 2, 3, 4}.
Graph fixture_g6();
/// Star K_{1,3} centred on node 0; triangle-free.
Graph fixture_star4();

}  // namespace kclique
