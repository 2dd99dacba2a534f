#include "kclique/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace kclique {

namespace {

void lower_mcx(Circuit& out, std::span<const Qubit> controls, Qubit target,
               std::span<const Qubit> anc) {
  const std::size_t c = controls.size();
  if (c == 1) {
    out.append(Gate::cx(controls[0], target));
    return;
  }
  if (c == 2) {
    out.append(Gate::ccx(controls[0], controls[1], target));
    return;
  }
  std::vector<Gate> ladder;
  ladder.push_back(Gate::ccx(controls[0], controls[1], anc[0]));
  for (std::size_t j = 1; j + 2 < c; ++j) {
    ladder.push_back(Gate::ccx(controls[j + 1], anc[j - 1], anc[j]));
  }
  for (const auto& g : ladder) {
    out.append(g);
  }
  out.append(Gate::ccx(controls[c - 1], anc[c - 3], target));
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
    out.append(*it);
  }
}

void lower_mcz(Circuit& out, std::span<const Qubit> qubits, std::span<const Qubit> anc) {
  const std::size_t n = qubits.size();
  if (n == 2) {
    out.append(Gate::cz(qubits[0], qubits[1]));
    return;
  }
  std::vector<Gate> chain;
  chain.push_back(Gate::ccx(qubits[0], qubits[1], anc[0]));
  for (std::size_t j = 1; j + 2 < n; ++j) {
    chain.push_back(Gate::ccx(qubits[j + 1], anc[j - 1], anc[j]));
  }
  for (const auto& g : chain) {
    out.append(g);
  }
  out.append(Gate::cz(anc[n - 3], qubits[n - 1]));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    out.append(*it);
  }
}

}  // namespace

std::size_t mc_ancillas_needed(const Gate& g) {
  const std::size_t n = g.qubits().size();
  switch (g.kind()) {
    case GateKind::MCX:
      return n - 1 >= 3 ? n - 3 : 0;
    case GateKind::MCZ:
      return n >= 3 ? n - 2 : 0;
    default:
      return 0;
  }
}

Circuit decompose_mc(const Circuit& c) {
  std::size_t need = 0;
  for (const auto& g : c.gates()) {
    need = std::max(need, mc_ancillas_needed(g));
  }

  // Same register layout as the input, ancillas appended after it.
  Circuit out;
  for (const auto& r : c.registers()) {
    out.add_qubits(r.start - out.num_qubits());
    out.add_register(r.name, r.size);
  }
  out.add_qubits(c.num_qubits() - out.num_qubits());
  std::vector<Qubit> anc;
  if (need > 0) {
    std::string name = "ancilla";
    for (int i = 1; out.find_register(name) != nullptr; ++i) {
      name = "ancilla_" + std::to_string(i);
    }
    anc = out.add_register(name, need).qubits();
  }

  for (const auto& g : c.gates()) {
    const auto& q = g.qubits();
    const double theta = g.params()[0];
    switch (g.kind()) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::CX:
      case GateKind::CZ:
      case GateKind::CCX:
      case GateKind::U3:
      case GateKind::U2:
        out.append(g);
        break;
      case GateKind::Z:
        out.append(Gate::u3(0.0, 0.0, M_PI, q[0]));
        break;
      case GateKind::RY:
        out.append(Gate::u3(theta, 0.0, 0.0, q[0]));
        break;
      case GateKind::CRY:
        out.append(Gate::u3(theta / 2, 0.0, 0.0, q[1]));
        out.append(Gate::cx(q[0], q[1]));
        out.append(Gate::u3(-theta / 2, 0.0, 0.0, q[1]));
        out.append(Gate::cx(q[0], q[1]));
        break;
      case GateKind::CCRY:
        out.append(Gate::u3(theta / 2, 0.0, 0.0, q[2]));
        out.append(Gate::ccx(q[0], q[1], q[2]));
        out.append(Gate::u3(-theta / 2, 0.0, 0.0, q[2]));
        out.append(Gate::ccx(q[0], q[1], q[2]));
        break;
      case GateKind::MCX:
        lower_mcx(out, g.controls(), g.target(), anc);
        break;
      case GateKind::MCZ:
        lower_mcz(out, q, anc);
        break;
    }
  }
  return out;
}

}  // namespace kclique
