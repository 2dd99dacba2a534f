#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kclique/circuit.hpp"
#include "kclique/simulator.hpp"
#include "kclique/statevector.hpp"

namespace kclique {

struct GateDurations {
  double u2_ns = 50.0;
  double u3_ns = 100.0;
  double cx_ns = 300.0;
};

/// Thermal-relaxation parameters of a device. Times: T1/T2 in microseconds,
/// gate and readout durations in nanoseconds.
struct NoiseProfile {
  std::string name = "custom";
  double t1_us = 0.0;
  double t2_us = 0.0;
  GateDurations gate_ns;
  double readout_ns = 1000.0;
  bool apply_idle = true;

  /// Throws kclique::Error unless t1 > 0, 0 < t2 <= 2*t1 and every
  /// duration is positive.
  void validate() const;

  static NoiseProfile thermal(std::string name, double t1_us, double t2_us);
};

/// {name, t1_us, t2_us, gate_ns: {u2, u3, cx}, readout_ns, apply_idle}.
/// Only t1_us and t2_us are required; the result is validated.
NoiseProfile parse_noise_profile(std::string_view json_text);
std::string noise_profile_to_json(const NoiseProfile& p);

/// Duration of one gate. H/U2 take u2; X, Z, RY and U3 take u3; CX/CZ take
/// cx. CCX is timed as its textbook lowering, 6 cx + 2 u2; CRY and CCRY as
/// their two-rotation lowerings. MCX/MCZ must be lowered first.
double gate_duration_ns(const Gate& g, const NoiseProfile& p);

/// 2x2 single-qubit density matrix.
struct DensityMatrix2 {
  std::complex<double> r00{1.0, 0.0};
  std::complex<double> r01{};
  std::complex<double> r10{};
  std::complex<double> r11{};
};

/// Which trajectory unraveling to use for the relaxation channel.
enum class ChannelImpl {
  Auto,     ///< Mixture when T2 <= T1, Kraus otherwise
  Mixture,  ///< {identity, Z, reset-to-0}; requires T2 <= T1
  Kraus,    ///< amplitude damping then phase flip; any T2 <= 2*T1
};

/// Thermal relaxation for a duration t: the excited population decays by
/// e^(-t/T1) (the ground population gains the difference) and coherences
/// decay by e^(-t/T2).
struct RelaxationChannel {
  double excited_decay = 1.0;    // e^(-t/T1)
  double coherence_decay = 1.0;  // e^(-t/T2)

  [[nodiscard]] bool is_identity() const noexcept {
    return excited_decay == 1.0 && coherence_decay == 1.0;
  }
  /// The {I, Z, reset} mixture exists iff e^(-t/T2) <= e^(-t/T1).
  [[nodiscard]] bool mixture_valid() const noexcept;
  [[nodiscard]] double mixture_reset_probability() const noexcept;
  [[nodiscard]] double mixture_flip_probability() const noexcept;
  /// Amplitude damping rate 1 - e^(-t/T1).
  [[nodiscard]] double damping() const noexcept { return 1.0 - excited_decay; }
  /// Extra Z probability after damping so coherences reach e^(-t/T2).
  [[nodiscard]] double kraus_flip_probability() const noexcept;

  /// Closed-form channel action.
  [[nodiscard]] DensityMatrix2 apply(const DensityMatrix2& rho) const;
};

/// Throws if the profile is invalid or t_ns < 0.
RelaxationChannel relaxation_channel(double t_ns, const NoiseProfile& p);

/// One stochastic step of `channel` on qubit q; the state stays normalized.
void apply_relaxation(StateVector& state, Qubit q, const RelaxationChannel& channel,
                      ChannelImpl impl, Rng& rng);

struct NoisyRunOptions {
  std::size_t shots = 1024;
  std::size_t trajectories = 1000;
  std::uint64_t seed = 1;
  std::size_t workers = 0;  // 0: hardware concurrency
  ChannelImpl impl = ChannelImpl::Auto;
  std::vector<Qubit> measured;               // empty: default_measured_qubits
  std::vector<std::uint64_t> success_outcomes;  // for success_mean/stderr
};

struct NoisyRunResult {
  MeasurementHistogram histogram;  // probabilities are trajectory averages
  double success_mean = 0.0;
  double success_stderr = 0.0;  // standard error of the trajectory mean
  std::size_t trajectories = 0;
};

/// Monte-Carlo trajectory simulation under thermal relaxation.
///
/// The circuit is lowered with decompose_mc and scheduled ASAP in wall
/// time. After each gate its operands relax for the gate duration; with
/// apply_idle, every qubit also relaxes for each interval it waits between
/// gates and until the circuit ends. All qubits then relax for readout_ns
/// before measurement. Trajectory i draws from
/// substream_seed(options.seed, i); blocks of trajectories are merged in a
/// fixed order, so results do not depend on the worker count.
NoisyRunResult run_noisy(const Circuit& c, const NoiseProfile& profile,
                         const NoisyRunOptions& options);

}  // namespace kclique
