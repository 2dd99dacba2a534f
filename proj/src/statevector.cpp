#include "kclique/statevector.hpp"

#include <bit>
#include <cmath>

#include "kclique/error.hpp"

namespace kclique {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {Amplitude(c, 0.0), -std::polar(s, lambda), std::polar(s, phi),
          std::polar(c, phi + lambda)};
}

}  // namespace

Matrix2 gate_matrix(const Gate& g) {
  const auto& p = g.params();
  switch (g.kind()) {
    case GateKind::H:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::MCZ:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::RY:
    case GateKind::CRY:
    case GateKind::CCRY: {
      const double c = std::cos(p[0] / 2);
      const double s = std::sin(p[0] / 2);
      return {c, -s, s, c};
    }
    case GateKind::U3:
      return u3_matrix(p[0], p[1], p[2]);
    case GateKind::U2:
      return u3_matrix(M_PI / 2, p[0], p[1]);
  }
  return {1.0, 0.0, 0.0, 1.0};
}

StateVector::StateVector(std::size_t num_qubits, std::uint64_t basis)
    : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw Error("statevector limited to " + std::to_string(kMaxQubits) + " qubits");
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{});
  if (basis >= amps_.size()) {
    throw Error("basis index out of range");
  }
  amps_[basis] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw Error("amplitude count must be a power of two");
  }
  StateVector s;
  s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  s.amps_ = std::move(amplitudes);
  return s;
}

void StateVector::apply(const Gate& g) {
  std::uint64_t mask = 0;
  for (Qubit q : g.qubits()) {
    if (q >= num_qubits_) {
      throw Error("gate " + g.to_string() + " exceeds statevector width");
    }
  }
  for (Qubit q : g.controls()) {
    mask |= std::uint64_t{1} << q;
  }
  apply_controlled(gate_matrix(g), mask, g.target());
}

void StateVector::apply(const Circuit& c) {
  if (c.num_qubits() > num_qubits_) {
    throw Error("circuit wider than statevector");
  }
  for (const auto& g : c.gates()) {
    apply(g);
  }
}

void StateVector::apply_controlled(const Matrix2& m, std::uint64_t control_mask,
                                   Qubit target) {
  const std::size_t stride = std::size_t{1} << target;
  const std::size_t dim = amps_.size();
  Amplitude* a = amps_.data();

  const bool is_x = m[0] == 0.0 && m[3] == 0.0 && m[1] == 1.0 && m[2] == 1.0;
  const bool diagonal = m[1] == 0.0 && m[2] == 0.0;

  for (std::size_t hi = 0; hi < dim; hi += 2 * stride) {
    for (std::size_t i = hi; i < hi + stride; ++i) {
      if ((i & control_mask) != control_mask) {
        continue;
      }
      Amplitude& a0 = a[i];
      Amplitude& a1 = a[i + stride];
      if (is_x) {
        std::swap(a0, a1);
      } else if (diagonal) {
        a0 *= m[0];
        a1 *= m[3];
      } else {
        const Amplitude v0 = a0;
        const Amplitude v1 = a1;
        a0 = m[0] * v0 + m[1] * v1;
        a1 = m[2] * v0 + m[3] * v1;
      }
    }
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) {
    s += std::norm(a);
  }
  return s;
}

void StateVector::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) {
    throw Error("cannot normalize the zero vector");
  }
  for (auto& a : amps_) {
    a /= n;
  }
}

double StateVector::probability_one(Qubit q) const {
  const std::size_t stride = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t hi = 0; hi < amps_.size(); hi += 2 * stride) {
    for (std::size_t i = hi + stride; i < hi + 2 * stride; ++i) {
      p += std::norm(amps_[i]);
    }
  }
  return p;
}

std::vector<double> StateVector::marginal(std::span<const Qubit> qubits) const {
  if (qubits.size() > 30) {
    throw Error("too many measured qubits");
  }
  std::vector<double> out(std::size_t{1} << qubits.size(), 0.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) {
      continue;
    }
    std::uint64_t outcome = 0;
    for (std::size_t b = 0; b < qubits.size(); ++b) {
      outcome |= ((i >> qubits[b]) & 1U) << b;
    }
    out[outcome] += p;
  }
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error("fidelity of states with different widths");
  }
  Amplitude overlap{};
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::norm(overlap);
}

}  // namespace kclique
