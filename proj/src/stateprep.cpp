#include "kclique/stateprep.hpp"

#include <cmath>

#include "kclique/error.hpp"
#include "kclique/graph.hpp"

namespace kclique {

namespace {

// Moves the excitation of block [first, first + size) so that every qubit of
// the block carries it with amplitude 1/sqrt(size).
void w_split(Circuit& c, Qubit first, std::size_t size) {
  if (size <= 1) {
    return;
  }
  const std::size_t left = (size + 1) / 2;
  const std::size_t right = size - left;
  const Qubit q = first;
  const Qubit r = first + left;
  const double beta =
      std::acos(std::sqrt(static_cast<double>(right) / static_cast<double>(size)));
  c.append(Gate::ry(beta, r));
  c.append(Gate::cx(q, r));
  c.append(Gate::ry(-beta, r));
  c.append(Gate::cx(r, q));
  w_split(c, q, left);
  w_split(c, r, right);
}

// Split-and-cyclic-shift block acting on qubits [0, m) of which the last
// `weight` + 1 participate.
void scs(Circuit& c, std::size_t m, std::size_t weight) {
  const Qubit last = m - 1;
  {
    const double theta = 2.0 * std::acos(std::sqrt(1.0 / static_cast<double>(m)));
    c.append(Gate::cx(last - 1, last));
    c.append(Gate::cry(theta, last, last - 1));
    c.append(Gate::cx(last - 1, last));
  }
  for (std::size_t l = 2; l <= weight; ++l) {
    const double theta =
        2.0 * std::acos(std::sqrt(static_cast<double>(l) / static_cast<double>(m)));
    const Qubit moved = last - l;
    c.append(Gate::cx(moved, last));
    c.append(Gate::ccry(theta, last, moved + 1, moved));
    c.append(Gate::cx(moved, last));
  }
}

}  // namespace

std::string_view prep_name(PrepKind kind) {
  switch (kind) {
    case PrepKind::Full:
      return "full";
    case PrepKind::WComplement:
      return "w";
    case PrepKind::Dicke:
      return "dicke";
  }
  return "?";
}

void validate_prep(const PrepMode& mode, std::size_t n) {
  switch (mode.kind) {
    case PrepKind::Full:
      if (n < 1) {
        throw Error("full superposition needs at least one qubit");
      }
      return;
    case PrepKind::WComplement:
      if (n < 1 || mode.k + 1 != n) {
        throw Error("W-state preparation works only for k = n-1 (k = " +
                    std::to_string(mode.k) + ", n = " + std::to_string(n) + ")");
      }
      return;
    case PrepKind::Dicke:
      if (mode.k < 1 || mode.k + 1 > n) {
        throw Error("Dicke preparation needs 1 <= k <= n-1 (k = " +
                    std::to_string(mode.k) + ", n = " + std::to_string(n) + ")");
      }
      return;
  }
}

std::uint64_t search_space_size(const PrepMode& mode, std::size_t n) {
  validate_prep(mode, n);
  if (mode.kind == PrepKind::Full) {
    if (n >= 64) {
      throw Error("search space 2^n overflows");
    }
    return std::uint64_t{1} << n;
  }
  return binomial(n, mode.k);
}

Circuit full_superposition(std::size_t n) {
  Circuit c(n);
  for (Qubit q = 0; q < n; ++q) {
    c.append(Gate::h(q));
  }
  return c;
}

Circuit w_state(std::size_t n) {
  if (n < 1) {
    throw Error("W state needs at least one qubit");
  }
  Circuit c(n);
  c.append(Gate::x(0));
  w_split(c, 0, n);
  return c;
}

Circuit w_complement(std::size_t n) {
  Circuit c = w_state(n);
  for (Qubit q = 0; q < n; ++q) {
    c.append(Gate::x(q));
  }
  return c;
}

Circuit dicke_prep(std::size_t n, std::size_t k) {
  validate_prep(PrepMode::dicke(k), n);
  Circuit c(n);
  for (Qubit q = n - k; q < n; ++q) {
    c.append(Gate::x(q));
  }
  for (std::size_t m = n; m > k; --m) {
    scs(c, m, k);
  }
  for (std::size_t m = k; m >= 2; --m) {
    scs(c, m, m - 1);
  }
  return c;
}

Circuit build_prep(const PrepMode& mode, std::size_t n) {
  validate_prep(mode, n);
  switch (mode.kind) {
    case PrepKind::Full:
      return full_superposition(n);
    case PrepKind::WComplement:
      return w_complement(n);
    case PrepKind::Dicke:
      return dicke_prep(n, mode.k);
  }
  return Circuit(n);
}

}  // namespace kclique
