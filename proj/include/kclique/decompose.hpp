#pragma once

#include <cstddef>

#include "kclique/circuit.hpp"

namespace kclique {

/// Clean ancillas a single gate needs when lowered: c-2 for an MCX with
/// c >= 3 controls, n-2 for an MCZ over n >= 3 qubits, 0 otherwise.
std::size_t mc_ancillas_needed(const Gate& g);

/// Lowers a circuit onto {X, CX, CCX, CZ, H, U3, U2}.
///
///  - MCX with c controls: CCX ladder through c-2 clean ancillas, mirrored
///    to uncompute, 2c-3 CCX in total.
///  - MCZ over n qubits: AND-chain of the first n-1 qubits into n-2
///    ancillas, one CZ onto the last qubit, mirrored: 1 CZ + (2n-4) CCX.
///  - CRY(t) / CCRY(t): U3(t/2), CX (CCX), U3(-t/2), CX (CCX).
///  - RY(t) -> U3(t, 0, 0); Z -> U3(0, 0, pi).
///
/// The ancillas are shared across gates (each lowering returns them to
/// |0>) and live in a register named "ancilla" appended after the existing
/// qubits. The result acts as the input circuit on the original qubits when
/// the ancillas start in |0>.
Circuit decompose_mc(const Circuit& c);

}  // namespace kclique
