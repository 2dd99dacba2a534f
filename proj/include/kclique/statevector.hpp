#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kclique/circuit.hpp"

namespace kclique {

using Amplitude = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

/// Single-qubit unitary a gate applies to its target when every control is 1.
Matrix2 gate_matrix(const Gate& g);

/// Dense 2^n amplitude vector; bit i of an index is qubit i.
class StateVector {
 public:
  static constexpr std::size_t kMaxQubits = 30;

  /// Basis state |basis>.
  explicit StateVector(std::size_t num_qubits, std::uint64_t basis = 0);

  /// Takes ownership of a 2^n amplitude array (not renormalized).
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
  [[nodiscard]] Amplitude operator[](std::uint64_t i) const { return amps_[i]; }

  void apply(const Gate& g);
  void apply(const Circuit& c);

  /// Applies `m` to `target` on the subspace where all bits of `control_mask`
  /// are set.
  void apply_controlled(const Matrix2& m, std::uint64_t control_mask, Qubit target);

  [[nodiscard]] double norm_squared() const;
  void normalize();

  /// P(qubit q reads 1).
  [[nodiscard]] double probability_one(Qubit q) const;

  /// Outcome distribution over `qubits`; bit i of the outcome is qubits[i].
  [[nodiscard]] std::vector<double> marginal(std::span<const Qubit> qubits) const;

 private:
  StateVector() = default;

  std::size_t num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// |<a|b>|^2 for equal-width states.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace kclique
