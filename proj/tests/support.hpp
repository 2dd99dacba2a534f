#pragma once

// Reference implementations used as test oracles. They share no code with
// the library beyond the Gate and Graph data types.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "kclique/circuit.hpp"
#include "kclique/graph.hpp"

namespace kclique::oracles {

using C = std::complex<double>;

// 2x2 matrix a gate applies to its target, written out from the textbook
// definitions.
inline std::array<C, 4> reference_matrix(const Gate& g) {
  const auto& p = g.params();
  const C i(0.0, 1.0);
  switch (g.kind()) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {C(s), C(s), C(s), C(-s)};
    }
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
      return {C(0), C(1), C(1), C(0)};
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::MCZ:
      return {C(1), C(0), C(0), C(-1)};
    case GateKind::RY:
    case GateKind::CRY:
    case GateKind::CCRY: {
      const double c = std::cos(p[0] / 2);
      const double s = std::sin(p[0] / 2);
      return {C(c), C(-s), C(s), C(c)};
    }
    case GateKind::U3:
    case GateKind::U2: {
      const double theta = g.kind() == GateKind::U2 ? M_PI / 2 : p[0];
      const double phi = g.kind() == GateKind::U2 ? p[0] : p[1];
      const double lambda = g.kind() == GateKind::U2 ? p[1] : p[2];
      const double c = std::cos(theta / 2);
      const double s = std::sin(theta / 2);
      return {C(c), -std::exp(i * lambda) * s, std::exp(i * phi) * s,
              std::exp(i * (phi + lambda)) * c};
    }
  }
  return {};
}

// Straight loop over basis pairs; controls are all operands but the last.
inline void reference_apply(std::vector<C>& amps, const Gate& g) {
  const auto m = reference_matrix(g);
  const auto& q = g.qubits();
  std::uint64_t cmask = 0;
  for (std::size_t j = 0; j + 1 < q.size(); ++j) {
    cmask |= std::uint64_t{1} << q[j];
  }
  const std::uint64_t t = std::uint64_t{1} << q.back();
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if ((idx & t) != 0 || (idx & cmask) != cmask) {
      continue;
    }
    const C a0 = amps[idx];
    const C a1 = amps[idx | t];
    amps[idx] = m[0] * a0 + m[1] * a1;
    amps[idx | t] = m[2] * a0 + m[3] * a1;
  }
}

inline std::vector<C> reference_run(const Circuit& c, std::vector<C> amps) {
  for (const auto& g : c.gates()) {
    reference_apply(amps, g);
  }
  return amps;
}

inline std::vector<C> basis(std::size_t n, std::uint64_t index) {
  std::vector<C> v(std::size_t{1} << n);
  v[index] = 1.0;
  return v;
}

// Pairwise adjacency check over the members of `mask`.
inline bool is_k_clique(const Graph& g, std::uint64_t mask, std::size_t k) {
  if (static_cast<std::size_t>(std::popcount(mask)) != k) {
    return false;
  }
  for (Node a = 0; a < g.num_nodes(); ++a) {
    for (Node b = a + 1; b < g.num_nodes(); ++b) {
      if (((mask >> a) & 1) && ((mask >> b) & 1) && !g.has_edge(a, b)) {
        return false;
      }
    }
  }
  return true;
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (keep(rng)) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace kclique::oracles
