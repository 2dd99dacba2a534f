#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kclique {

using Qubit = std::size_t;

enum class GateKind {
  H,
  X,
  Z,
  CX,
  CZ,
  CCX,
  MCX,
  MCZ,
  RY,
  CRY,
  CCRY,
  U3,
  U2,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Number of rotation parameters carried by a gate kind (0, 1, 2 or 3).
std::size_t gate_param_count(GateKind kind);

/// A single gate. Operands are ordered controls first, target last; every
/// gate in the vocabulary is a (multi-)controlled single-qubit unitary.
///
/// Parameters: RY/CRY/CCRY use params[0] = theta. U3 uses
/// (theta, phi, lambda). U2 uses (phi, lambda) in params[0..1].
class Gate {
 public:
  /// Validates arity, operand distinctness and finite angles.
  Gate(GateKind kind, std::vector<Qubit> qubits, std::array<double, 3> params = {});

  static Gate h(Qubit q) { return Gate(GateKind::H, {q}); }
  static Gate x(Qubit q) { return Gate(GateKind::X, {q}); }
  static Gate z(Qubit q) { return Gate(GateKind::Z, {q}); }
  static Gate cx(Qubit c, Qubit t) { return Gate(GateKind::CX, {c, t}); }
  static Gate cz(Qubit a, Qubit b) { return Gate(GateKind::CZ, {a, b}); }
  static Gate ccx(Qubit c0, Qubit c1, Qubit t) { return Gate(GateKind::CCX, {c0, c1, t}); }
  static Gate mcx(std::vector<Qubit> controls, Qubit target);
  static Gate mcz(std::vector<Qubit> qubits);
  static Gate ry(double theta, Qubit q) { return Gate(GateKind::RY, {q}, {theta, 0, 0}); }
  static Gate cry(double theta, Qubit c, Qubit t) {
    return Gate(GateKind::CRY, {c, t}, {theta, 0, 0});
  }
  static Gate ccry(double theta, Qubit c0, Qubit c1, Qubit t) {
    return Gate(GateKind::CCRY, {c0, c1, t}, {theta, 0, 0});
  }
  static Gate u3(double theta, double phi, double lambda, Qubit q) {
    return Gate(GateKind::U3, {q}, {theta, phi, lambda});
  }
  static Gate u2(double phi, double lambda, Qubit q) {
    return Gate(GateKind::U2, {q}, {phi, lambda, 0});
  }

  [[nodiscard]] GateKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<Qubit>& qubits() const noexcept { return qubits_; }
  [[nodiscard]] std::span<const Qubit> controls() const noexcept {
    return {qubits_.data(), qubits_.size() - 1};
  }
  [[nodiscard]] Qubit target() const noexcept { return qubits_.back(); }
  [[nodiscard]] const std::array<double, 3>& params() const noexcept { return params_; }

  /// Inverse gate. Self-inverse kinds are returned unchanged.
  [[nodiscard]] Gate inverse() const;

  /// Same gate with every operand q replaced by map[q].
  [[nodiscard]] Gate remapped(std::span<const Qubit> map) const;

  /// "KIND q0,q1,... [p0 p1 p2]" as used by the text dump.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  GateKind kind_;
  std::vector<Qubit> qubits_;
  std::array<double, 3> params_;
};

/// Named contiguous qubit range.
struct Register {
  std::string name;
  Qubit start = 0;
  std::size_t size = 0;

  [[nodiscard]] Qubit operator[](std::size_t i) const { return start + i; }
  [[nodiscard]] std::vector<Qubit> qubits() const;

  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered gate list over a fixed-width qubit array with optional named
/// registers. Registers are allocated back to back, so they never overlap.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
  [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
  [[nodiscard]] const std::vector<Register>& registers() const noexcept {
    return registers_;
  }

  /// Widens the circuit by `size` qubits and names them. Zero-size
  /// registers are recorded but occupy no qubits.
  const Register& add_register(std::string name, std::size_t size);
  /// Widens the circuit by `count` unnamed qubits.
  void add_qubits(std::size_t count) { num_qubits_ += count; }
  [[nodiscard]] const Register* find_register(std::string_view name) const;
  /// Throws kclique::Error if absent.
  [[nodiscard]] const Register& reg(std::string_view name) const;

  /// Throws if an operand is outside [0, num_qubits).
  void append(Gate gate);

  /// Appends every gate of `other`; widths must match.
  void append(const Circuit& other);

  /// Appends `other` with its qubit i mapped to `map[i]`.
  void append_mapped(const Circuit& other, std::span<const Qubit> map);

  /// Appends `other` onto the qubits of `target`; other.num_qubits() must
  /// equal target.size.
  void append_on(const Circuit& other, const Register& target);

  [[nodiscard]] Circuit adjoint() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
};

/// a followed by b. Throws on width mismatch.
Circuit compose(const Circuit& a, const Circuit& b);

struct CircuitMetrics {
  std::size_t size = 0;
  std::size_t depth = 0;
  std::map<GateKind, std::size_t> counts;
  std::size_t num_qubits = 0;
};

/// Size, ASAP depth (each gate one step, conflicts on shared qubits) and
/// per-kind counts.
CircuitMetrics metrics(const Circuit& c);

/// One gate per line; header "qubits N" plus one "register NAME START SIZE"
/// line per register. Angles are printed with 17 significant digits.
std::string dump_circuit(const Circuit& c);
Circuit parse_circuit_dump(std::string_view text);

}  // namespace kclique
