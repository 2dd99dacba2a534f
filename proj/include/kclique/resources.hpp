#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kclique/circuit.hpp"
#include "kclique/graph.hpp"
#include "kclique/oracle.hpp"
#include "kclique/stateprep.hpp"

namespace kclique {

struct ResourceConfig {
  std::string graph;
  std::size_t k = 0;
  PrepKind prep = PrepKind::Full;
  OracleStyle oracle = OracleStyle::Checking;
  std::size_t iterations = 0;

  /// "w-checking", "full-incremental", ...
  [[nodiscard]] std::string label() const;
};

/// NOT = X, CNOT = CX and CZ, CCNOT = CCX; everything else is "other"
/// (single-qubit rotations, H, and unlowered multi-controlled gates).
struct GateCategoryCounts {
  std::size_t not_gates = 0;
  std::size_t cnot = 0;
  std::size_t ccnot = 0;
  std::size_t other = 0;

  [[nodiscard]] std::size_t total() const noexcept { return not_gates + cnot + ccnot + other; }
};

GateCategoryCounts categorize(const CircuitMetrics& m);

struct YearEstimate {
  int year = 2020;
  bool clamped = false;  // qv was below 32
};

struct ResourceReport {
  ResourceConfig config;
  std::size_t size = 0;
  std::size_t depth = 0;
  std::size_t num_qubits = 0;
  GateCategoryCounts counts;
  std::size_t decomposed_size = 0;
  std::size_t decomposed_depth = 0;
  std::size_t decomposed_qubits = 0;
  GateCategoryCounts decomposed_counts;
  std::uint64_t required_qv = 1;  // from the decomposed depth and width
  YearEstimate year;
};

/// 2^min(depth, n). Throws when depth or n is zero or min(depth, n) > 62.
std::uint64_t required_qv(std::size_t depth, std::size_t num_qubits);

/// 2020 + log2(qv / 32). Values below 32 clamp to 2020 with the flag set;
/// a qv that is not a power of two is rejected.
YearEstimate year_estimate(std::uint64_t qv);

/// Metrics of `c` before and after decompose_mc. An empty circuit gives
/// zeros and required_qv 1.
ResourceReport report(const Circuit& c, const ResourceConfig& config);

/// The six prep x oracle configurations at the optimal iteration count,
/// skipping preparations that do not apply to (n, k).
std::vector<ResourceReport> report_all_configs(const Graph& g, std::size_t k,
                                               const std::string& graph_name);

/// Indices of `reports` ordered by (decomposed size, decomposed qubits,
/// decomposed depth); ties keep input order.
std::vector<std::size_t> rank_by_decomposed_size(std::span<const ResourceReport> reports);

/// {"schema": 1, "reports": [...]}.
std::string reports_to_json(std::span<const ResourceReport> reports);
/// Aligned table, one row per report. Size, depth, width and gate counts
/// are the raw circuit's, or the lowered circuit's when `decomposed`.
std::string reports_to_text(std::span<const ResourceReport> reports, bool decomposed = false);
/// Same columns as reports_to_text, RFC-4180 CSV with a header row.
std::string reports_to_csv(std::span<const ResourceReport> reports, bool decomposed = false);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view s);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope*x + intercept. Needs two or more
/// points with distinct x. r_squared is 1 when y is constant.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace kclique
