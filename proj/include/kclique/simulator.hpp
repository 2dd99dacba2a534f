#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "kclique/circuit.hpp"
#include "kclique/statevector.hpp"

namespace kclique {

/// Seeded 64-bit generator. Uniform doubles are built from the top 53 bits
/// so sequences are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Seed of trajectory `index` under master seed `seed`:
/// splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Sampled outcome counts plus the distribution they were drawn from.
struct MeasurementHistogram {
  std::size_t num_bits = 0;
  std::size_t shots = 0;
  /// Bitstring (qubit num_bits-1 leftmost) -> count. Counts sum to shots.
  std::map<std::string, std::size_t> counts;
  /// Exact (ideal) or trajectory-averaged outcome probabilities.
  std::vector<double> probabilities;

  /// Fraction of shots that produced `bits`.
  [[nodiscard]] double frequency(const std::string& bits) const;
  /// Distribution mass of the given outcomes.
  [[nodiscard]] double probability_of(std::span<const std::uint64_t> outcomes) const;
  /// Most frequent bitstring (smallest on ties); empty when shots = 0.
  [[nodiscard]] std::string top_outcome() const;
};

/// The "nodes" register when present, otherwise every qubit.
std::vector<Qubit> default_measured_qubits(const Circuit& c);

/// Total probability of `outcomes` over the `measured` qubits.
double success_probability(const StateVector& s, std::span<const Qubit> measured,
                           std::span<const std::uint64_t> outcomes);

/// Draws `shots` outcomes from `distribution` and tallies them.
void sample_counts(std::span<const double> distribution, std::size_t num_bits,
                   std::size_t shots, Rng& rng, std::map<std::string, std::size_t>& counts);

struct IdealRunOptions {
  std::size_t shots = 1024;
  std::uint64_t seed = 1;
  std::vector<Qubit> measured;  // empty: default_measured_qubits
};

struct IdealRunResult {
  MeasurementHistogram histogram;
  StateVector final_state;
};

/// Exact statevector evolution followed by `shots` samples of the measured
/// qubits. Deterministic for a given seed.
IdealRunResult run_ideal(const Circuit& c, const IdealRunOptions& options = {});

}  // namespace kclique
