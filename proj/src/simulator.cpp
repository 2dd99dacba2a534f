#include "kclique/simulator.hpp"

#include <algorithm>

#include "kclique/error.hpp"
#include "kclique/graph.hpp"

namespace kclique {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double MeasurementHistogram::frequency(const std::string& bits) const {
  if (shots == 0) {
    return 0.0;
  }
  const auto it = counts.find(bits);
  return it == counts.end() ? 0.0
                            : static_cast<double>(it->second) / static_cast<double>(shots);
}

double MeasurementHistogram::probability_of(std::span<const std::uint64_t> outcomes) const {
  double p = 0.0;
  for (auto o : outcomes) {
    if (o < probabilities.size()) {
      p += probabilities[o];
    }
  }
  return p;
}

std::string MeasurementHistogram::top_outcome() const {
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [bits, n] : counts) {
    if (n > best_count) {
      best = bits;
      best_count = n;
    }
  }
  return best;
}

std::vector<Qubit> default_measured_qubits(const Circuit& c) {
  if (const auto* nodes = c.find_register("nodes")) {
    return nodes->qubits();
  }
  std::vector<Qubit> all(c.num_qubits());
  for (Qubit q = 0; q < all.size(); ++q) {
    all[q] = q;
  }
  return all;
}

double success_probability(const StateVector& s, std::span<const Qubit> measured,
                           std::span<const std::uint64_t> outcomes) {
  const auto dist = s.marginal(measured);
  double p = 0.0;
  for (auto o : outcomes) {
    if (o < dist.size()) {
      p += dist[o];
    }
  }
  return p;
}

void sample_counts(std::span<const double> distribution, std::size_t num_bits,
                   std::size_t shots, Rng& rng, std::map<std::string, std::size_t>& counts) {
  if (shots == 0) {
    return;
  }
  std::vector<double> cdf(distribution.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    acc += distribution[i];
    cdf[i] = acc;
  }
  std::vector<std::size_t> tally(distribution.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) -
                                        cdf.begin());
    // u can round up to acc; fall back to the last populated bin.
    if (idx == cdf.size()) {
      --idx;
      while (idx > 0 && distribution[idx] == 0.0) {
        --idx;
      }
    }
    ++tally[idx];
  }
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (tally[i] > 0) {
      counts[index_to_bitstring(i, num_bits)] += tally[i];
    }
  }
}

IdealRunResult run_ideal(const Circuit& c, const IdealRunOptions& options) {
  if (options.shots < 1) {
    throw Error("run_ideal needs at least one shot");
  }
  const auto measured =
      options.measured.empty() ? default_measured_qubits(c) : options.measured;
  StateVector state(c.num_qubits());
  state.apply(c);

  MeasurementHistogram h;
  h.num_bits = measured.size();
  h.shots = options.shots;
  h.probabilities = state.marginal(measured);
  Rng rng(options.seed);
  sample_counts(h.probabilities, h.num_bits, h.shots, rng, h.counts);
  return {std::move(h), std::move(state)};
}

}  // namespace kclique
