#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kclique/graph.hpp"
#include "kclique/noise.hpp"
#include "kclique/oracle.hpp"
#include "kclique/stateprep.hpp"

namespace kclique {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::string graph = "g4";  // builtin name or edge-list path
  std::size_t k = 3;
  PrepKind prep = PrepKind::Full;
  OracleStyle oracle = OracleStyle::Checking;
  std::optional<std::size_t> iterations;  // empty: opt_iter
  std::size_t shots = 1024;
  std::size_t trajectories = 1000;
  std::string noise;  // builtin profile name or JSON path; empty: ideal only
  std::uint64_t seed = 1;
  std::optional<OutputFormat> format;  // empty: per-command default
  std::size_t workers = 0;
  bool decompose = false;
  bool all_configs = false;
  std::vector<std::string> profiles;               // sweep: names or paths
  std::vector<std::pair<double, double>> grid;     // sweep: (t1_us, t2_us)
  std::string stage = "prep";                      // state: prep | final
};

PrepKind parse_prep(const std::string& s);
OracleStyle parse_oracle(const std::string& s);
OutputFormat parse_format(const std::string& s);
/// "auto" or a non-negative integer.
std::optional<std::size_t> parse_iterations(const std::string& s);
/// "T1:T2[,T1:T2...]" in microseconds.
std::vector<std::pair<double, double>> parse_grid(const std::string& s);

/// g4, g6 and star4 name the bundled fixtures; anything else is read as an
/// edge-list file.
Graph load_graph(const std::string& source);

/// melbourne, poughkeepsie, singapore, paris, cambridge, rochester
/// (T1/T2 device averages, "ibmq_" prefix optional).
const std::vector<NoiseProfile>& device_profiles();

/// A device profile, "thermal_<T1>" (T1 = T2) or "thermal_<T1>_<T2>", or
/// a JSON file path.
NoiseProfile load_noise_profile(const std::string& source);

/// Each command writes its report to `out` and returns the exit code.
int cmd_solve(const RunConfig& config, std::ostream& out);
int cmd_resources(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_state(const RunConfig& config, std::ostream& out);

/// Parses argv and dispatches to a subcommand. Errors go to `err` with a
/// nonzero return.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kclique
