#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "kclique/circuit.hpp"

namespace kclique {

enum class PrepKind { Full, WComplement, Dicke };

/// Initial-state choice for the search. Full searches all 2^n subsets; the
/// restricted modes prepare a uniform superposition over weight-k subsets.
struct PrepMode {
  PrepKind kind = PrepKind::Full;
  std::size_t k = 0;  // ignored for Full

  static PrepMode full() { return {PrepKind::Full, 0}; }
  static PrepMode w_complement(std::size_t k) { return {PrepKind::WComplement, k}; }
  static PrepMode dicke(std::size_t k) { return {PrepKind::Dicke, k}; }

  [[nodiscard]] bool restricted() const noexcept { return kind != PrepKind::Full; }

  friend bool operator==(const PrepMode&, const PrepMode&) = default;
};

std::string_view prep_name(PrepKind kind);

/// Throws kclique::Error when `mode` is illegal for n nodes: WComplement
/// needs k = n-1, Dicke needs 1 <= k <= n-1.
void validate_prep(const PrepMode& mode, std::size_t n);

/// 2^n for Full, C(n, k) otherwise.
std::uint64_t search_space_size(const PrepMode& mode, std::size_t n);

/// n Hadamards.
Circuit full_superposition(std::size_t n);

/// Uniform real-positive superposition of the n weight-1 states.
///
/// Built as a balanced binary tree: X on qubit 0, then every block of s
/// qubits holding the excitation on its first qubit q hands it to the first
/// qubit r of its right half (size b) with amplitude sqrt(b/s) using
/// RY(beta) r; CX q,r; RY(-beta) r; CX r,q. Size 1 + 4(n-1), depth
/// 1 + 3*ceil(log2 n): each level's first RY overlaps the level before.
Circuit w_state(std::size_t n);

/// w_state(n) followed by X on every qubit: the weight-(n-1) states.
Circuit w_complement(std::size_t n);

/// Dicke state |D^n_k> via split-and-cyclic-shift blocks:
/// SCS(n,k), SCS(n-1,k), ..., SCS(k+1,k), SCS(k,k-1), ..., SCS(2,1)
/// applied after X on the last k qubits. Every amplitude is real and
/// positive.
///
/// Size is k + 3*(k*(n-k) + k*(k-1)/2) gates at this level; after
/// decompose_mc each CRY/CCRY becomes 4 gates, giving
/// 6kn - 3k^2 - 2k <= 6kn gates.
Circuit dicke_prep(std::size_t n, std::size_t k);

/// Preparation circuit for `mode` over n qubits.
Circuit build_prep(const PrepMode& mode, std::size_t n);

/// Decomposed-gate bound constant c in "size <= c*k*n" for dicke_prep.
inline constexpr std::size_t kDickeGateConstant = 6;

}  // namespace kclique
