#include "kclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "kclique/error.hpp"

namespace kclique {

namespace {

constexpr std::size_t kMaxNodes = 64;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
      ++i;
    }
    if (i > start) {
      out.push_back(s.substr(start, i - start));
    }
  }
  return out;
}

bool parse_uint(std::string_view tok, std::size_t& out) {
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n, 0) {
  if (n > kMaxNodes) {
    throw Error("graphs are limited to " + std::to_string(kMaxNodes) + " nodes");
  }
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw Error("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw Error("edge endpoint out of range: " + std::to_string(e.u) + " " +
                  std::to_string(e.v));
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  for (const auto& e : edges) {
    adjacency_[e.u] |= std::uint64_t{1} << e.v;
    adjacency_[e.v] |= std::uint64_t{1} << e.u;
  }
  edges_ = std::move(edges);
}

bool Graph::has_edge(Node a, Node b) const {
  if (a >= n_ || b >= n_) {
    return false;
  }
  return ((adjacency_[a] >> b) & 1U) != 0;
}

std::size_t Graph::induced_edges(std::uint64_t mask) const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if ((mask >> i) & 1U) {
      twice += static_cast<std::size_t>(std::popcount(adjacency_[i] & mask));
    }
  }
  return twice / 2;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      nl = text.size();
    }
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (nl == text.size()) {
        break;
      }
      continue;
    }
    const auto toks = split_ws(line);
    std::size_t a = 0;
    std::size_t b = 0;
    if (toks.size() != 2 || !parse_uint(toks[0], a) || !parse_uint(toks[1], b)) {
      throw ParseError(line_no, "expected two non-negative integers, got '" +
                                    std::string(line) + "'");
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      if (n > kMaxNodes) {
        throw ParseError(line_no, "node count exceeds " + std::to_string(kMaxNodes));
      }
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more edges than the declared " + std::to_string(m));
    }
    if (a >= n || b >= n) {
      throw ParseError(line_no, "endpoint out of range (n = " + std::to_string(n) + ")");
    }
    if (a == b) {
      throw ParseError(line_no, "self-loop on node " + std::to_string(a));
    }
    const Edge e{std::min(a, b), std::max(a, b)};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) {
        throw ParseError(line_no, "duplicate edge (first seen on line " +
                                      std::to_string(edge_lines[i]) + ")");
      }
    }
    edges.push_back(e);
    edge_lines.push_back(line_no);
    if (nl == text.size()) {
      break;
    }
  }
  if (!have_header) {
    throw ParseError(line_no, "missing 'n m' header");
  }
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::vector<NodeSubset> find_cliques_bruteforce(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_nodes();
  if (k < 1 || k > n) {
    throw Error("clique size k = " + std::to_string(k) + " out of range [1, " +
                std::to_string(n) + "]");
  }
  const std::size_t want = k * (k - 1) / 2;
  std::vector<NodeSubset> out;

  // Lexicographic enumeration of k-combinations.
  std::vector<Node> pick(k);
  for (std::size_t i = 0; i < k; ++i) {
    pick[i] = i;
  }
  while (true) {
    std::uint64_t mask = 0;
    for (Node v : pick) {
      mask |= std::uint64_t{1} << v;
    }
    if (g.induced_edges(mask) == want) {
      out.push_back(NodeSubset{pick});
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string index_to_bitstring(std::uint64_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> i) & 1U) {
      s[n - 1 - i] = '1';
    }
  }
  return s;
}

BasisState subset_to_bitstring(const NodeSubset& s, std::size_t n) {
  std::uint64_t index = 0;
  for (Node v : s.members) {
    if (v >= n) {
      throw Error("subset member " + std::to_string(v) + " out of range");
    }
    index |= std::uint64_t{1} << v;
  }
  return {index, index_to_bitstring(index, n)};
}

NodeSubset bitstring_to_subset(std::uint64_t index, std::size_t n) {
  NodeSubset s;
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> i) & 1U) {
      s.members.push_back(i);
    }
  }
  return s;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * (n - k + i) / i);
  }
  return r;
}

Graph fixture_g4() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph fixture_g6() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4},
                   {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

Graph fixture_star4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace kclique
