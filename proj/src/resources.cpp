#include "kclique/resources.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "kclique/decompose.hpp"
#include "kclique/error.hpp"
#include "kclique/grover.hpp"

namespace kclique {

std::string ResourceConfig::label() const {
  return std::string(prep_name(prep)) + "-" + std::string(oracle_name(oracle));
}

GateCategoryCounts categorize(const CircuitMetrics& m) {
  GateCategoryCounts out;
  for (const auto& [kind, n] : m.counts) {
    switch (kind) {
      case GateKind::X:
        out.not_gates += n;
        break;
      case GateKind::CX:
      case GateKind::CZ:
        out.cnot += n;
        break;
      case GateKind::CCX:
        out.ccnot += n;
        break;
      default:
        out.other += n;
        break;
    }
  }
  return out;
}

std::uint64_t required_qv(std::size_t depth, std::size_t num_qubits) {
  if (depth == 0 || num_qubits == 0) {
    throw Error("required_qv needs depth and width of at least 1");
  }
  const std::size_t e = std::min(depth, num_qubits);
  if (e > 62) {
    throw Error("required_qv exponent too large");
  }
  return std::uint64_t{1} << e;
}

YearEstimate year_estimate(std::uint64_t qv) {
  if (!std::has_single_bit(qv)) {
    throw Error("quantum volume must be a power of two");
  }
  if (qv < 32) {
    return {2020, true};
  }
  return {2020 + std::countr_zero(qv) - 5, false};
}

ResourceReport report(const Circuit& c, const ResourceConfig& config) {
  ResourceReport r;
  r.config = config;
  const auto raw = metrics(c);
  r.size = raw.size;
  r.depth = raw.depth;
  r.num_qubits = raw.num_qubits;
  r.counts = categorize(raw);

  const auto low = metrics(decompose_mc(c));
  r.decomposed_size = low.size;
  r.decomposed_depth = low.depth;
  r.decomposed_qubits = low.num_qubits;
  r.decomposed_counts = categorize(low);
  if (low.depth > 0 && low.num_qubits > 0) {
    r.required_qv = required_qv(low.depth, low.num_qubits);
    r.year = year_estimate(r.required_qv);
  } else {
    r.required_qv = 1;
    r.year = {2020, true};
  }
  return r;
}

std::vector<ResourceReport> report_all_configs(const Graph& g, std::size_t k,
                                               const std::string& graph_name) {
  const std::size_t n = g.num_nodes();
  // Cost accounting does not need a solution; without one a single
  // iteration is reported.
  const bool has_solution =
      k >= 1 && k <= n && !find_cliques_bruteforce(g, k).empty();
  std::vector<ResourceReport> out;
  for (auto prep : {PrepKind::Full, PrepKind::WComplement, PrepKind::Dicke}) {
    const PrepMode mode{prep, prep == PrepKind::Full ? 0 : k};
    try {
      validate_prep(mode, n);
    } catch (const Error&) {
      continue;
    }
    for (auto style : {OracleStyle::Checking, OracleStyle::Incremental}) {
      std::optional<std::size_t> iters;
      if (!has_solution) {
        iters = 1;
      }
      const auto gc = assemble(g, k, prep, style, iters);
      out.push_back(report(gc.circuit, {graph_name, k, prep, style, gc.plan.iterations}));
    }
  }
  return out;
}

std::vector<std::size_t> rank_by_decomposed_size(std::span<const ResourceReport> reports) {
  std::vector<std::size_t> idx(reports.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = reports[a];
    const auto& rb = reports[b];
    return std::tie(ra.decomposed_size, ra.decomposed_qubits, ra.decomposed_depth) <
           std::tie(rb.decomposed_size, rb.decomposed_qubits, rb.decomposed_depth);
  });
  return idx;
}

namespace {

nlohmann::ordered_json counts_json(const GateCategoryCounts& c) {
  return {{"NOT", c.not_gates}, {"CNOT", c.cnot}, {"CCNOT", c.ccnot}, {"other", c.other}};
}

}  // namespace

std::string reports_to_json(std::span<const ResourceReport> reports) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json e;
    e["config"] = {{"graph", r.config.graph},
                   {"k", r.config.k},
                   {"prep", prep_name(r.config.prep)},
                   {"oracle", oracle_name(r.config.oracle)},
                   {"iterations", r.config.iterations}};
    e["size"] = r.size;
    e["depth"] = r.depth;
    e["n_qubits"] = r.num_qubits;
    e["counts"] = counts_json(r.counts);
    e["decomposed"] = {{"size", r.decomposed_size},
                       {"depth", r.decomposed_depth},
                       {"n_qubits", r.decomposed_qubits},
                       {"counts", counts_json(r.decomposed_counts)}};
    e["required_qv"] = r.required_qv;
    e["year_estimate"] = r.year.year;
    e["year_clamped"] = r.year.clamped;
    j["reports"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> table_header() {
  return {"config", "graph", "k",    "iterations", "size",        "depth", "qubits",
          "NOT",    "CNOT",  "CCNOT", "other",     "required_qv", "year"};
}

std::vector<std::vector<std::string>> table_rows(std::span<const ResourceReport> reports,
                                                 bool decomposed) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    const auto& c = decomposed ? r.decomposed_counts : r.counts;
    rows.push_back({r.config.label(), r.config.graph, std::to_string(r.config.k),
                    std::to_string(r.config.iterations),
                    std::to_string(decomposed ? r.decomposed_size : r.size),
                    std::to_string(decomposed ? r.decomposed_depth : r.depth),
                    std::to_string(decomposed ? r.decomposed_qubits : r.num_qubits),
                    std::to_string(c.not_gates), std::to_string(c.cnot),
                    std::to_string(c.ccnot), std::to_string(c.other),
                    std::to_string(r.required_qv),
                    std::to_string(r.year.year) + (r.year.clamped ? "*" : "")});
  }
  return rows;
}

}  // namespace

std::string reports_to_text(std::span<const ResourceReport> reports, bool decomposed) {
  const auto head = table_header();
  const auto rows = table_rows(reports, decomposed);
  std::vector<std::size_t> width(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) {
    width[i] = head[i].size();
    for (const auto& row : rows) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i < 2) {
        os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      } else {
        os << "  " << std::right << std::setw(static_cast<int>(width[i])) << row[i];
      }
    }
    os << "\n";
  };
  emit(head);
  for (const auto& row : rows) {
    emit(row);
  }
  return os.str();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  out += '"';
  return out;
}

std::string reports_to_csv(std::span<const ResourceReport> reports, bool decomposed) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_field(row[i]);
    }
    os << "\r\n";
  };
  emit(table_header());
  for (const auto& row : table_rows(reports, decomposed)) {
    emit(row);
  }
  return os.str();
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error("linear fit needs two or more paired points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw Error("linear fit needs distinct x values");
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace kclique
