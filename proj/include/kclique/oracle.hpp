#pragma once

#include <cstddef>
#include <string_view>

#include "kclique/circuit.hpp"
#include "kclique/graph.hpp"

namespace kclique {

enum class OracleStyle { Checking, Incremental };

std::string_view oracle_name(OracleStyle style);

/// count_nodes is true iff the search runs over the full Hilbert space; a
/// weight-k preparation makes node counting redundant.
struct OracleMode {
  OracleStyle style = OracleStyle::Checking;
  bool count_nodes = true;

  friend bool operator==(const OracleMode&, const OracleMode&) = default;
};

/// Work-register widths of an oracle.
///
/// edge_counter_width = ceil(log2(C(k,2) + 1)) so the counter can hold the
/// target value itself. node_counter_width = ceil(log2(n + 1)) when nodes
/// are counted: a narrower counter would wrap for subsets larger than k and
/// accept them.
struct CounterLayout {
  std::size_t num_nodes = 0;
  std::size_t edge_counter_width = 0;
  std::size_t node_counter_width = 0;  // 0 when nodes are not counted
  bool edge_tmp = false;               // per-edge flag of the incremental style
  bool node_flag = false;
  bool clique_flag = false;

  [[nodiscard]] std::size_t total_qubits() const noexcept;
};

/// Bits needed to hold values 0..value.
std::size_t counter_width(std::size_t value);

CounterLayout counter_layout(std::size_t num_nodes, std::size_t k, const OracleMode& mode);

/// |x> -> |x + 1 mod 2^width>: MCX on bits [0, j) targeting bit j for
/// j = width-1 down to 0 (the last step is a plain X on bit 0).
Circuit increment_circuit(std::size_t width);

/// Phase oracle marking the k-cliques of g.
///
/// Registers, in order: nodes, edge_counter, [edge_tmp], edge_flag,
/// [node_counter, node_flag, clique_flag]. The circuit computes the flags,
/// applies Z to the final flag (clique_flag when nodes are counted,
/// edge_flag otherwise) and then runs the computation in reverse, so every
/// work qubit returns to |0>.
///
/// Checking style: for each edge (u,v) in lexicographic order the
/// increment of edge_counter is controlled on u and v. Incremental style:
/// CCX(u, v -> edge_tmp), increment controlled on edge_tmp, CCX again. In
/// both styles the counter is compared to C(k,2) with an X-conjugated MCX
/// onto edge_flag. Node counting adds one increment per node controlled on
/// that node, an equality test onto node_flag and CCX(edge_flag, node_flag
/// -> clique_flag).
///
/// Throws kclique::Error if k < 2, k > n or g has no edges.
Circuit build_oracle(const Graph& g, std::size_t k, const OracleMode& mode);

}  // namespace kclique
