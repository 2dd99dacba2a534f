#include "kclique/noise.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "json.hpp"
#include "kclique/decompose.hpp"
#include "kclique/error.hpp"
#include "kclique/graph.hpp"

namespace kclique {

void NoiseProfile::validate() const {
  if (!(t1_us > 0.0) || !std::isfinite(t1_us)) {
    throw Error("noise profile '" + name + "': t1_us must be positive");
  }
  if (!(t2_us > 0.0) || !(t2_us <= 2.0 * t1_us)) {
    throw Error("noise profile '" + name + "': t2_us must satisfy 0 < t2 <= 2*t1");
  }
  for (double d : {gate_ns.u2_ns, gate_ns.u3_ns, gate_ns.cx_ns, readout_ns}) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw Error("noise profile '" + name + "': durations must be positive");
    }
  }
}

NoiseProfile NoiseProfile::thermal(std::string name, double t1_us, double t2_us) {
  NoiseProfile p;
  p.name = std::move(name);
  p.t1_us = t1_us;
  p.t2_us = t2_us;
  p.validate();
  return p;
}

NoiseProfile parse_noise_profile(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("noise profile: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error("noise profile: expected a JSON object");
  }
  NoiseProfile p;
  try {
    p.name = j.value("name", p.name);
    if (!j.contains("t1_us") || !j.contains("t2_us")) {
      throw Error("noise profile: t1_us and t2_us are required");
    }
    p.t1_us = j.at("t1_us").get<double>();
    p.t2_us = j.at("t2_us").get<double>();
    if (j.contains("gate_ns")) {
      const auto& g = j.at("gate_ns");
      p.gate_ns.u2_ns = g.value("u2", p.gate_ns.u2_ns);
      p.gate_ns.u3_ns = g.value("u3", p.gate_ns.u3_ns);
      p.gate_ns.cx_ns = g.value("cx", p.gate_ns.cx_ns);
    }
    p.readout_ns = j.value("readout_ns", p.readout_ns);
    p.apply_idle = j.value("apply_idle", p.apply_idle);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("noise profile: ") + e.what());
  }
  p.validate();
  return p;
}

std::string noise_profile_to_json(const NoiseProfile& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["t1_us"] = p.t1_us;
  j["t2_us"] = p.t2_us;
  j["gate_ns"] = {{"u2", p.gate_ns.u2_ns}, {"u3", p.gate_ns.u3_ns}, {"cx", p.gate_ns.cx_ns}};
  j["readout_ns"] = p.readout_ns;
  j["apply_idle"] = p.apply_idle;
  return j.dump(2);
}

double gate_duration_ns(const Gate& g, const NoiseProfile& p) {
  const auto& d = p.gate_ns;
  const double ccx = 6.0 * d.cx_ns + 2.0 * d.u2_ns;
  switch (g.kind()) {
    case GateKind::H:
    case GateKind::U2:
      return d.u2_ns;
    case GateKind::X:
    case GateKind::Z:
    case GateKind::RY:
    case GateKind::U3:
      return d.u3_ns;
    case GateKind::CX:
    case GateKind::CZ:
      return d.cx_ns;
    case GateKind::CCX:
      return ccx;
    case GateKind::CRY:
      return 2.0 * d.u3_ns + 2.0 * d.cx_ns;
    case GateKind::CCRY:
      return 2.0 * d.u3_ns + 2.0 * ccx;
    case GateKind::MCX:
    case GateKind::MCZ:
      break;
  }
  throw Error("no duration for " + std::string(gate_name(g.kind())) + "; lower the circuit first");
}

bool RelaxationChannel::mixture_valid() const noexcept {
  return coherence_decay <= excited_decay;
}

double RelaxationChannel::mixture_reset_probability() const noexcept {
  return 1.0 - excited_decay;
}

double RelaxationChannel::mixture_flip_probability() const noexcept {
  return std::max(0.0, (excited_decay - coherence_decay) / 2.0);
}

double RelaxationChannel::kraus_flip_probability() const noexcept {
  if (excited_decay <= 0.0) {
    return 0.0;
  }
  return std::max(0.0, (1.0 - coherence_decay / std::sqrt(excited_decay)) / 2.0);
}

DensityMatrix2 RelaxationChannel::apply(const DensityMatrix2& rho) const {
  DensityMatrix2 out;
  out.r11 = excited_decay * rho.r11;
  out.r00 = rho.r00 + (1.0 - excited_decay) * rho.r11;
  out.r01 = coherence_decay * rho.r01;
  out.r10 = coherence_decay * rho.r10;
  return out;
}

RelaxationChannel relaxation_channel(double t_ns, const NoiseProfile& p) {
  p.validate();
  if (!(t_ns >= 0.0)) {
    throw Error("relaxation time must be non-negative");
  }
  const double t_us = t_ns / 1000.0;
  return {std::exp(-t_us / p.t1_us), std::exp(-t_us / p.t2_us)};
}

namespace {

void apply_z(StateVector& s, Qubit q) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  auto a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (i & bit) {
      a[i] = -a[i];
    }
  }
}

// Projects qubit q onto |1> and moves that branch to |0>, or projects onto
// |0>; `scale` renormalizes the surviving amplitudes.
void collapse(StateVector& s, Qubit q, bool to_one, double scale) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  auto a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (i & bit) {
      continue;
    }
    if (to_one) {
      a[i] = a[i | bit] * scale;
    } else {
      a[i] *= scale;
    }
    a[i | bit] = 0.0;
  }
}

void damp_no_jump(StateVector& s, Qubit q, double keep, double scale) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  auto a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    a[i] *= (i & bit) ? keep * scale : scale;
  }
}

ChannelImpl resolve(ChannelImpl impl, const RelaxationChannel& ch) {
  if (impl == ChannelImpl::Auto) {
    return ch.mixture_valid() ? ChannelImpl::Mixture : ChannelImpl::Kraus;
  }
  if (impl == ChannelImpl::Mixture && !ch.mixture_valid()) {
    throw Error("mixture unraveling requires T2 <= T1");
  }
  return impl;
}

}  // namespace

void apply_relaxation(StateVector& state, Qubit q, const RelaxationChannel& channel,
                      ChannelImpl impl, Rng& rng) {
  if (q >= state.num_qubits()) {
    throw Error("relaxation qubit out of range");
  }
  if (channel.is_identity()) {
    return;
  }
  if (resolve(impl, channel) == ChannelImpl::Mixture) {
    const double p_reset = channel.mixture_reset_probability();
    const double p_flip = channel.mixture_flip_probability();
    const double u = rng.uniform();
    if (u < p_reset) {
      const double p1 = state.probability_one(q);
      if (rng.uniform() < p1) {
        collapse(state, q, true, 1.0 / std::sqrt(p1));
      } else {
        collapse(state, q, false, 1.0 / std::sqrt(1.0 - p1));
      }
    } else if (u < p_reset + p_flip) {
      apply_z(state, q);
    }
    return;
  }

  const double gamma = channel.damping();
  if (gamma > 0.0) {
    const double p1 = state.probability_one(q);
    const double p_jump = gamma * p1;
    if (rng.uniform() < p_jump) {
      collapse(state, q, true, 1.0 / std::sqrt(p1));
    } else {
      damp_no_jump(state, q, std::sqrt(1.0 - gamma), 1.0 / std::sqrt(1.0 - p_jump));
    }
  }
  const double p_flip = channel.kraus_flip_probability();
  if (p_flip > 0.0 && rng.uniform() < p_flip) {
    apply_z(state, q);
  }
}

namespace {

constexpr std::size_t kBlockSize = 64;

struct Step {
  bool is_gate = false;
  std::size_t gate = 0;     // index into the lowered circuit
  Qubit qubit = 0;
  std::size_t channel = 0;  // index into the channel table
};

struct Schedule {
  Circuit lowered;
  std::vector<Step> steps;
  std::vector<RelaxationChannel> channels;
};

Schedule build_schedule(const Circuit& c, const NoiseProfile& p) {
  Schedule s{decompose_mc(c), {}, {}};
  std::map<double, std::size_t> cache;
  auto relax = [&](Qubit q, double t) {
    if (t <= 0.0) {
      return;
    }
    auto [it, inserted] = cache.try_emplace(t, s.channels.size());
    if (inserted) {
      s.channels.push_back(relaxation_channel(t, p));
    }
    s.steps.push_back({false, 0, q, it->second});
  };

  const std::size_t n = s.lowered.num_qubits();
  std::vector<double> clock(n, 0.0);
  const auto& gates = s.lowered.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& qs = gates[i].qubits();
    double start = 0.0;
    for (auto q : qs) {
      start = std::max(start, clock[q]);
    }
    if (p.apply_idle) {
      for (auto q : qs) {
        relax(q, start - clock[q]);
      }
    }
    s.steps.push_back({true, i, 0, 0});
    const double d = gate_duration_ns(gates[i], p);
    for (auto q : qs) {
      relax(q, d);
      clock[q] = start + d;
    }
  }
  const double end = n == 0 ? 0.0 : *std::max_element(clock.begin(), clock.end());
  for (Qubit q = 0; q < n; ++q) {
    if (p.apply_idle) {
      relax(q, end - clock[q]);
    }
    relax(q, p.readout_ns);
  }
  return s;
}

struct BlockResult {
  std::vector<double> prob_sum;
  double success_sum = 0.0;
  double success_sq_sum = 0.0;
  std::map<std::string, std::size_t> counts;
};

}  // namespace

NoisyRunResult run_noisy(const Circuit& c, const NoiseProfile& profile,
                         const NoisyRunOptions& options) {
  profile.validate();
  if (options.trajectories < 1) {
    throw Error("noisy run needs at least one trajectory");
  }
  if (options.shots < 1) {
    throw Error("noisy run needs at least one shot");
  }
  const auto measured =
      options.measured.empty() ? default_measured_qubits(c) : options.measured;
  const Schedule sched = build_schedule(c, profile);
  for (const auto& ch : sched.channels) {
    resolve(options.impl, ch);
  }

  const std::size_t trajectories = options.trajectories;
  const std::size_t num_blocks = (trajectories + kBlockSize - 1) / kBlockSize;
  const std::size_t base_shots = options.shots / trajectories;
  const std::size_t extra_shots = options.shots % trajectories;
  const std::size_t dim = std::size_t{1} << measured.size();
  const auto& gates = sched.lowered.gates();

  std::vector<BlockResult> blocks(num_blocks);
  auto run_block = [&](std::size_t b) {
    BlockResult r;
    r.prob_sum.assign(dim, 0.0);
    const std::size_t lo = b * kBlockSize;
    const std::size_t hi = std::min(trajectories, lo + kBlockSize);
    for (std::size_t t = lo; t < hi; ++t) {
      Rng rng(substream_seed(options.seed, t));
      StateVector state(sched.lowered.num_qubits());
      for (const auto& step : sched.steps) {
        if (step.is_gate) {
          state.apply(gates[step.gate]);
        } else {
          apply_relaxation(state, step.qubit, sched.channels[step.channel], options.impl, rng);
        }
      }
      const auto dist = state.marginal(measured);
      double success = 0.0;
      for (auto o : options.success_outcomes) {
        if (o < dist.size()) {
          success += dist[o];
        }
      }
      for (std::size_t i = 0; i < dim; ++i) {
        r.prob_sum[i] += dist[i];
      }
      r.success_sum += success;
      r.success_sq_sum += success * success;
      sample_counts(dist, measured.size(), base_shots + (t < extra_shots ? 1 : 0), rng,
                    r.counts);
    }
    blocks[b] = std::move(r);
  };

  std::size_t workers = options.workers;
  if (workers == 0) {
    workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  workers = std::min(workers, num_blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < num_blocks; ++b) {
      run_block(b);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < num_blocks; b = next++) {
          run_block(b);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  NoisyRunResult out;
  out.trajectories = trajectories;
  out.histogram.num_bits = measured.size();
  out.histogram.shots = options.shots;
  out.histogram.probabilities.assign(dim, 0.0);
  double sum = 0.0;
  double sq_sum = 0.0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < dim; ++i) {
      out.histogram.probabilities[i] += b.prob_sum[i];
    }
    for (const auto& [bits, n] : b.counts) {
      out.histogram.counts[bits] += n;
    }
    sum += b.success_sum;
    sq_sum += b.success_sq_sum;
  }
  const double nt = static_cast<double>(trajectories);
  for (auto& v : out.histogram.probabilities) {
    v /= nt;
  }
  out.success_mean = sum / nt;
  if (trajectories > 1) {
    const double var = std::max(0.0, (sq_sum - sum * sum / nt) / (nt - 1.0));
    out.success_stderr = std::sqrt(var / nt);
  }
  return out;
}

}  // namespace kclique
