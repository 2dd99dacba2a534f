#include "kclique/oracle.hpp"

#include <vector>

#include "kclique/error.hpp"

namespace kclique {

namespace {

// X, CX, CCX or MCX depending on the number of controls.
Gate controlled_x(std::vector<Qubit> controls, Qubit target) {
  switch (controls.size()) {
    case 0:
      return Gate::x(target);
    case 1:
      return Gate::cx(controls[0], target);
    case 2:
      return Gate::ccx(controls[0], controls[1], target);
    default:
      return Gate::mcx(std::move(controls), target);
  }
}

void append_controlled_increment(Circuit& c, const std::vector<Qubit>& extra,
                                 const Register& counter) {
  for (std::size_t j = counter.size; j-- > 0;) {
    std::vector<Qubit> controls = extra;
    for (std::size_t b = 0; b < j; ++b) {
      controls.push_back(counter[b]);
    }
    c.append(controlled_x(std::move(controls), counter[j]));
  }
}

void append_equality(Circuit& c, const Register& counter, std::size_t value, Qubit flag) {
  for (std::size_t b = 0; b < counter.size; ++b) {
    if (((value >> b) & 1U) == 0) {
      c.append(Gate::x(counter[b]));
    }
  }
  c.append(controlled_x(counter.qubits(), flag));
  for (std::size_t b = 0; b < counter.size; ++b) {
    if (((value >> b) & 1U) == 0) {
      c.append(Gate::x(counter[b]));
    }
  }
}

}  // namespace

std::string_view oracle_name(OracleStyle style) {
  return style == OracleStyle::Checking ? "checking" : "incremental";
}

std::size_t CounterLayout::total_qubits() const noexcept {
  return num_nodes + edge_counter_width + (edge_tmp ? 1 : 0) + 1 + node_counter_width +
         (node_flag ? 1 : 0) + (clique_flag ? 1 : 0);
}

std::size_t counter_width(std::size_t value) {
  std::size_t w = 0;
  while ((std::size_t{1} << w) <= value) {
    ++w;
  }
  return w;
}

CounterLayout counter_layout(std::size_t num_nodes, std::size_t k, const OracleMode& mode) {
  CounterLayout l;
  l.num_nodes = num_nodes;
  l.edge_counter_width = counter_width(k * (k - 1) / 2);
  l.edge_tmp = mode.style == OracleStyle::Incremental;
  if (mode.count_nodes) {
    l.node_counter_width = counter_width(num_nodes);
    l.node_flag = true;
    l.clique_flag = true;
  }
  return l;
}

Circuit increment_circuit(std::size_t width) {
  if (width < 1) {
    throw Error("increment circuit needs width >= 1");
  }
  Circuit c;
  const Register& r = c.add_register("counter", width);
  append_controlled_increment(c, {}, r);
  return c;
}

Circuit build_oracle(const Graph& g, std::size_t k, const OracleMode& mode) {
  const std::size_t n = g.num_nodes();
  if (k < 2 || k > n) {
    throw Error("oracle needs 2 <= k <= n (k = " + std::to_string(k) +
                ", n = " + std::to_string(n) + ")");
  }
  if (g.num_edges() == 0) {
    throw Error("oracle requires at least one edge");
  }
  const CounterLayout layout = counter_layout(n, k, mode);
  const std::size_t target_edges = k * (k - 1) / 2;
  if (target_edges >= (std::size_t{1} << layout.edge_counter_width)) {
    throw Error("edge counter too narrow for C(k,2)");
  }

  Circuit c;
  const Register nodes = c.add_register("nodes", n);
  const Register edge_counter = c.add_register("edge_counter", layout.edge_counter_width);
  Register edge_tmp;
  if (layout.edge_tmp) {
    edge_tmp = c.add_register("edge_tmp", 1);
  }
  const Register edge_flag = c.add_register("edge_flag", 1);
  Register node_counter;
  Register node_flag;
  Register clique_flag;
  if (mode.count_nodes) {
    node_counter = c.add_register("node_counter", layout.node_counter_width);
    node_flag = c.add_register("node_flag", 1);
    clique_flag = c.add_register("clique_flag", 1);
  }

  Circuit compute(c.num_qubits());
  for (const auto& e : g.edges()) {
    if (mode.style == OracleStyle::Checking) {
      append_controlled_increment(compute, {nodes[e.u], nodes[e.v]}, edge_counter);
    } else {
      compute.append(Gate::ccx(nodes[e.u], nodes[e.v], edge_tmp[0]));
      append_controlled_increment(compute, {edge_tmp[0]}, edge_counter);
      compute.append(Gate::ccx(nodes[e.u], nodes[e.v], edge_tmp[0]));
    }
  }
  append_equality(compute, edge_counter, target_edges, edge_flag[0]);

  Qubit phase_qubit = edge_flag[0];
  if (mode.count_nodes) {
    for (std::size_t v = 0; v < n; ++v) {
      append_controlled_increment(compute, {nodes[v]}, node_counter);
    }
    append_equality(compute, node_counter, k, node_flag[0]);
    compute.append(Gate::ccx(edge_flag[0], node_flag[0], clique_flag[0]));
    phase_qubit = clique_flag[0];
  }

  c.append(compute);
  c.append(Gate::z(phase_qubit));
  c.append(compute.adjoint());
  return c;
}

}  // namespace kclique
