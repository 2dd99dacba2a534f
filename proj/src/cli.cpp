#include "kclique/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kclique/error.hpp"
#include "kclique/grover.hpp"
#include "kclique/resources.hpp"
#include "kclique/simulator.hpp"

namespace kclique {

namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string subset_text(const NodeSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s.members[i]);
  }
  return out + "}";
}

void write_table(std::ostream& out, const Row& head, const std::vector<Row>& rows,
                 OutputFormat format) {
  if (format == OutputFormat::Csv) {
    auto emit = [&](const Row& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_field(row[i]);
      }
      out << "\r\n";
    };
    emit(head);
    for (const auto& row : rows) {
      emit(row);
    }
    return;
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) {
    width[i] = head[i].size();
    for (const auto& row : rows) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto emit = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << "\n";
  };
  emit(head);
  for (const auto& row : rows) {
    emit(row);
  }
}

struct HistogramEntry {
  std::string bits;
  std::size_t count = 0;
  double probability = 0.0;
};

std::vector<HistogramEntry> histogram_entries(const MeasurementHistogram& h) {
  std::vector<HistogramEntry> out;
  for (std::uint64_t i = 0; i < h.probabilities.size(); ++i) {
    const auto bits = index_to_bitstring(i, h.num_bits);
    const auto it = h.counts.find(bits);
    const std::size_t count = it == h.counts.end() ? 0 : it->second;
    if (count > 0 || h.probabilities[i] > 1e-12) {
      out.push_back({bits, count, h.probabilities[i]});
    }
  }
  return out;
}

Json histogram_json(const MeasurementHistogram& h) {
  Json arr = Json::array();
  for (const auto& e : histogram_entries(h)) {
    arr.push_back({{"bitstring", e.bits}, {"count", e.count}, {"probability", e.probability}});
  }
  return arr;
}

Json graph_json(const RunConfig& config, const Graph& g) {
  return {{"name", config.graph}, {"nodes", g.num_nodes()}, {"edges", g.num_edges()}};
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) {
  return config.format.value_or(fallback);
}

bool is_solution(std::uint64_t outcome, const std::vector<std::uint64_t>& solutions) {
  return std::find(solutions.begin(), solutions.end(), outcome) != solutions.end();
}

std::uint64_t top_index(const MeasurementHistogram& h) {
  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i < h.probabilities.size(); ++i) {
    if (h.probabilities[i] > h.probabilities[best]) {
      best = i;
    }
  }
  return best;
}

NoisyRunOptions noisy_options(const RunConfig& config, const GroverCircuit& gc) {
  NoisyRunOptions o;
  o.shots = config.shots;
  o.trajectories = config.trajectories;
  o.seed = config.seed;
  o.workers = config.workers;
  o.success_outcomes = gc.solution_outcomes;
  return o;
}

std::vector<ResourceConfig> selected_configs(const RunConfig& config, const Graph& g) {
  if (!config.all_configs) {
    return {{config.graph, config.k, config.prep, config.oracle, 0}};
  }
  std::vector<ResourceConfig> out;
  for (auto prep : {PrepKind::Full, PrepKind::WComplement, PrepKind::Dicke}) {
    try {
      validate_prep({prep, prep == PrepKind::Full ? 0 : config.k}, g.num_nodes());
    } catch (const Error&) {
      continue;
    }
    for (auto style : {OracleStyle::Checking, OracleStyle::Incremental}) {
      out.push_back({config.graph, config.k, prep, style, 0});
    }
  }
  return out;
}

}  // namespace

PrepKind parse_prep(const std::string& s) {
  if (s == "full") return PrepKind::Full;
  if (s == "w") return PrepKind::WComplement;
  if (s == "dicke") return PrepKind::Dicke;
  throw Error("unknown prep '" + s + "' (full, w, dicke)");
}

OracleStyle parse_oracle(const std::string& s) {
  if (s == "checking") return OracleStyle::Checking;
  if (s == "incremental") return OracleStyle::Incremental;
  throw Error("unknown oracle '" + s + "' (checking, incremental)");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw Error("unknown format '" + s + "' (json, csv, text)");
}

std::optional<std::size_t> parse_iterations(const std::string& s) {
  if (s == "auto") {
    return std::nullopt;
  }
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("iterations must be 'auto' or a non-negative integer, got '" + s + "'");
  }
  return v;
}

std::vector<std::pair<double, double>> parse_grid(const std::string& s) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    double t1 = 0.0;
    double t2 = 0.0;
    bool ok = colon != std::string::npos;
    if (ok) {
      const char* b = item.data();
      const char* e = b + item.size();
      const auto r1 = std::from_chars(b, b + colon, t1);
      const auto r2 = std::from_chars(b + colon + 1, e, t2);
      ok = r1.ec == std::errc() && r1.ptr == b + colon && r2.ec == std::errc() && r2.ptr == e;
    }
    if (!ok) {
      throw Error("grid entries must look like T1:T2, got '" + item + "'");
    }
    out.emplace_back(t1, t2);
  }
  if (out.empty()) {
    throw Error("grid is empty");
  }
  return out;
}

Graph load_graph(const std::string& source) {
  if (source == "g4") return fixture_g4();
  if (source == "g6") return fixture_g6();
  if (source == "star4") return fixture_star4();
  return parse_edge_list(read_file(source));
}

const std::vector<NoiseProfile>& device_profiles() {
  static const std::vector<NoiseProfile> profiles = {
      NoiseProfile::thermal("melbourne", 55.0, 59.0),
      NoiseProfile::thermal("poughkeepsie", 64.0, 65.0),
      NoiseProfile::thermal("singapore", 83.0, 89.0),
      NoiseProfile::thermal("paris", 76.0, 67.0),
      NoiseProfile::thermal("cambridge", 81.0, 39.0),
      NoiseProfile::thermal("rochester", 55.0, 59.0),
  };
  return profiles;
}

NoiseProfile load_noise_profile(const std::string& source) {
  std::string name = source;
  if (name.rfind("ibmq_", 0) == 0) {
    name = name.substr(5);
  }
  for (const auto& p : device_profiles()) {
    if (p.name == name) {
      return p;
    }
  }
  if (source.rfind("thermal_", 0) == 0) {
    std::string rest = source.substr(8);
    std::replace(rest.begin(), rest.end(), '_', ':');
    if (rest.find(':') == std::string::npos) {
      rest += ":" + rest;
    }
    const auto grid = parse_grid(rest);
    if (grid.size() == 1) {
      return NoiseProfile::thermal(source, grid[0].first, grid[0].second);
    }
  }
  return parse_noise_profile(read_file(source));
}

int cmd_solve(const RunConfig& config, std::ostream& out) {
  const Graph g = load_graph(config.graph);
  const auto format = format_or(config, OutputFormat::Text);
  const auto cliques = find_cliques_bruteforce(g, config.k);
  if (cliques.empty()) {
    if (format == OutputFormat::Json) {
      Json j = {{"schema", 1}, {"command", "solve"}, {"graph", graph_json(config, g)},
                {"k", config.k}, {"solutions", 0}, {"message", "no k-clique exists"}};
      out << j.dump(2) << "\n";
    } else {
      out << "no k-clique exists (k=" << config.k << ")\n";
    }
    return 0;
  }

  const auto gc = assemble(g, config.k, config.prep, config.oracle, config.iterations);
  const std::size_t n = g.num_nodes();
  IdealRunOptions io;
  io.shots = config.shots;
  io.seed = config.seed;
  const auto ideal = run_ideal(gc.circuit, io);
  const double p_ideal = ideal.histogram.probability_of(gc.solution_outcomes);
  const double p_analytic = success_probability_analytic(
      gc.plan.search_space, gc.plan.solutions, gc.plan.iterations);
  const auto top = top_index(ideal.histogram);
  const bool pass = is_solution(top, gc.solution_outcomes);

  std::optional<NoiseProfile> profile;
  std::optional<NoisyRunResult> noisy;
  if (!config.noise.empty()) {
    profile = load_noise_profile(config.noise);
    noisy = run_noisy(gc.circuit, *profile, noisy_options(config, gc));
  }

  if (format == OutputFormat::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "solve";
    j["graph"] = graph_json(config, g);
    j["k"] = config.k;
    j["prep"] = prep_name(config.prep);
    j["oracle"] = oracle_name(config.oracle);
    j["search_space"] = gc.plan.search_space;
    j["solutions"] = gc.plan.solutions;
    j["iterations"] = gc.plan.iterations;
    Json cl = Json::array();
    for (const auto& c : gc.cliques) {
      cl.push_back(c.members);
    }
    j["cliques"] = cl;
    j["ideal"] = {{"success_probability", p_ideal},
                  {"analytic_probability", p_analytic},
                  {"top_outcome", index_to_bitstring(top, n)},
                  {"top_nodes", bitstring_to_subset(top, n).members},
                  {"histogram", histogram_json(ideal.histogram)}};
    if (noisy) {
      j["noisy"] = {{"profile", profile->name},
                    {"t1_us", profile->t1_us},
                    {"t2_us", profile->t2_us},
                    {"trajectories", noisy->trajectories},
                    {"success_probability", noisy->success_mean},
                    {"stderr", noisy->success_stderr},
                    {"histogram", histogram_json(noisy->histogram)}};
    }
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else if (format == OutputFormat::Csv) {
    std::vector<Row> rows;
    for (const auto& e : histogram_entries(ideal.histogram)) {
      rows.push_back({"ideal", e.bits, std::to_string(e.count), num(e.probability)});
    }
    if (noisy) {
      for (const auto& e : histogram_entries(noisy->histogram)) {
        rows.push_back({profile->name, e.bits, std::to_string(e.count), num(e.probability)});
      }
    }
    write_table(out, {"source", "bitstring", "count", "probability"}, rows, format);
  } else {
    out << "graph: " << config.graph << " (" << n << " nodes, " << g.num_edges()
        << " edges)\n";
    out << "k: " << config.k << "  prep: " << prep_name(config.prep)
        << "  oracle: " << oracle_name(config.oracle) << "\n";
    out << "search space N=" << gc.plan.search_space << "  solutions m=" << gc.plan.solutions
        << "  iterations=" << gc.plan.iterations << "\n";
    out << "cliques:";
    for (const auto& c : gc.cliques) {
      out << " " << subset_text(c);
    }
    out << "\n\nideal histogram (" << config.shots << " shots)\n";
    std::vector<Row> rows;
    for (const auto& e : histogram_entries(ideal.histogram)) {
      rows.push_back({e.bits, std::to_string(e.count), num(e.probability)});
    }
    write_table(out, {"bitstring", "count", "probability"}, rows, OutputFormat::Text);
    out << "\ntop outcome: " << index_to_bitstring(top, n) << " -> "
        << subset_text(bitstring_to_subset(top, n))
        << (pass ? " (clique)" : " (not a clique)") << "\n";
    out << "success probability: " << num(p_ideal) << "  analytic: " << num(p_analytic)
        << "\n";
    if (noisy) {
      out << "noisy (" << profile->name << ", T1=" << num(profile->t1_us)
          << "us T2=" << num(profile->t2_us) << "us, " << noisy->trajectories
          << " trajectories): success " << num(noisy->success_mean) << " +- "
          << num(noisy->success_stderr) << "\n";
    }
    out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return 0;
}

int cmd_resources(const RunConfig& config, std::ostream& out) {
  const Graph g = load_graph(config.graph);
  std::vector<ResourceReport> reports;
  if (config.all_configs) {
    reports = report_all_configs(g, config.k, config.graph);
  } else {
    const bool has_solution = config.k >= 1 && config.k <= g.num_nodes() &&
                              !find_cliques_bruteforce(g, config.k).empty();
    auto iters = config.iterations;
    if (!iters && !has_solution) {
      iters = 1;
    }
    const auto gc = assemble(g, config.k, config.prep, config.oracle, iters);
    reports.push_back(report(
        gc.circuit, {config.graph, config.k, config.prep, config.oracle, gc.plan.iterations}));
  }
  switch (format_or(config, OutputFormat::Text)) {
    case OutputFormat::Json:
      out << reports_to_json(reports);
      break;
    case OutputFormat::Csv:
      out << reports_to_csv(reports, config.decompose);
      break;
    case OutputFormat::Text:
      out << reports_to_text(reports, config.decompose);
      if (reports.size() > 1) {
        out << "smallest decomposed size: "
            << reports[rank_by_decomposed_size(reports).front()].config.label() << "\n";
      }
      break;
  }
  return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const Graph g = load_graph(config.graph);
  std::vector<NoiseProfile> profiles;
  for (const auto& source : config.profiles) {
    profiles.push_back(load_noise_profile(source));
  }
  for (const auto& [t1, t2] : config.grid) {
    profiles.push_back(NoiseProfile::thermal("thermal_" + num(t1) + "_" + num(t2), t1, t2));
  }
  if (profiles.empty()) {
    profiles = device_profiles();
    profiles.push_back(NoiseProfile::thermal("thermal_200", 200.0, 200.0));
    profiles.push_back(NoiseProfile::thermal("thermal_500", 500.0, 500.0));
  }
  if (find_cliques_bruteforce(g, config.k).empty()) {
    throw NoSolutionsError();
  }

  const Row head = {"profile", "t1_us", "t2_us", "config", "iterations",
                    "ideal_prob", "success_prob", "stderr"};
  std::vector<Row> rows;
  Json arr = Json::array();
  for (const auto& rc : selected_configs(config, g)) {
    const auto gc = assemble(g, config.k, rc.prep, rc.oracle, config.iterations);
    StateVector ideal(gc.circuit.num_qubits());
    ideal.apply(gc.circuit);
    const auto measured = default_measured_qubits(gc.circuit);
    const double p_ideal = success_probability(ideal, measured, gc.solution_outcomes);
    const auto opts = noisy_options(config, gc);
    for (const auto& p : profiles) {
      const auto r = run_noisy(gc.circuit, p, opts);
      rows.push_back({p.name, num(p.t1_us), num(p.t2_us), rc.label(),
                      std::to_string(gc.plan.iterations), num(p_ideal), num(r.success_mean),
                      num(r.success_stderr)});
      arr.push_back({{"profile", p.name},
                     {"t1_us", p.t1_us},
                     {"t2_us", p.t2_us},
                     {"config", rc.label()},
                     {"iterations", gc.plan.iterations},
                     {"ideal_prob", p_ideal},
                     {"success_prob", r.success_mean},
                     {"stderr", r.success_stderr}});
    }
  }
  const auto format = format_or(config, OutputFormat::Csv);
  if (format == OutputFormat::Json) {
    Json j = {{"schema", 1}, {"command", "sweep"}, {"graph", graph_json(config, g)},
              {"k", config.k}, {"trajectories", config.trajectories}, {"seed", config.seed},
              {"rows", arr}};
    out << j.dump(2) << "\n";
  } else {
    write_table(out, head, rows, format);
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const Graph g = load_graph(config.graph);
  const std::size_t n = g.num_nodes();
  const auto cliques = find_cliques_bruteforce(g, config.k);
  const auto format = format_or(config, OutputFormat::Text);
  if (format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& c : cliques) {
      arr.push_back({{"nodes", c.members}, {"bitstring", subset_to_bitstring(c, n).display}});
    }
    Json j = {{"schema", 1}, {"command", "verify"}, {"graph", graph_json(config, g)},
              {"k", config.k}, {"count", cliques.size()}, {"cliques", arr}};
    out << j.dump(2) << "\n";
  } else if (format == OutputFormat::Csv) {
    std::vector<Row> rows;
    for (const auto& c : cliques) {
      rows.push_back({subset_text(c), subset_to_bitstring(c, n).display});
    }
    write_table(out, {"nodes", "bitstring"}, rows, format);
  } else {
    out << cliques.size() << " clique(s) of size " << config.k << " in " << config.graph
        << "\n";
    for (const auto& c : cliques) {
      out << "  " << subset_text(c) << "  " << subset_to_bitstring(c, n).display << "\n";
    }
  }
  return 0;
}

int cmd_state(const RunConfig& config, std::ostream& out) {
  const Graph g = load_graph(config.graph);
  const std::size_t n = g.num_nodes();
  Circuit c;
  if (config.stage == "prep") {
    const PrepMode mode{config.prep, config.prep == PrepKind::Full ? 0 : config.k};
    validate_prep(mode, n);
    c = build_prep(mode, n);
  } else if (config.stage == "final") {
    c = assemble(g, config.k, config.prep, config.oracle, config.iterations).circuit;
  } else {
    throw Error("stage must be 'prep' or 'final'");
  }
  StateVector s(c.num_qubits());
  s.apply(c);
  const auto amps = s.amplitudes();
  const auto format = format_or(config, OutputFormat::Csv);
  if (format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      arr.push_back({{"index", i},
                     {"bitstring", index_to_bitstring(i, c.num_qubits())},
                     {"re", amps[i].real()},
                     {"im", amps[i].imag()}});
    }
    Json j = {{"schema", 1}, {"command", "state"}, {"stage", config.stage},
              {"qubits", c.num_qubits()}, {"amplitudes", arr}};
    out << j.dump(2) << "\n";
    return 0;
  }
  std::vector<Row> rows;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    rows.push_back({std::to_string(i), index_to_bitstring(i, c.num_qubits()),
                    num(amps[i].real()), num(amps[i].imag())});
  }
  write_table(out, {"index", "bitstring", "re", "im"}, rows, format);
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover search circuits for k-clique: build, simulate, cost"};
  app.require_subcommand(1);

  RunConfig config;
  std::string prep = "full";
  std::string oracle = "checking";
  std::string iters = "auto";
  std::string format;
  std::string grid;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph,-g", config.graph, "g4, g6, star4 or an edge-list file");
    sub->add_option("--k,-k", config.k, "clique size")->check(CLI::PositiveNumber);
    sub->add_option("--prep", prep, "full | w | dicke")
        ->check(CLI::IsMember({"full", "w", "dicke"}));
    sub->add_option("--oracle", oracle, "checking | incremental")
        ->check(CLI::IsMember({"checking", "incremental"}));
    sub->add_option("--iters", iters, "auto or an integer");
    sub->add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", config.seed, "master seed");
  };
  auto simulation = [&](CLI::App* sub) {
    sub->add_option("--shots", config.shots, "measurement shots")->check(CLI::PositiveNumber);
    sub->add_option("--trajectories", config.trajectories, "noisy trajectories")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", config.workers, "trajectory threads (0: all cores)");
  };

  auto* solve = app.add_subcommand("solve", "simulate the search and decode the answer");
  common(solve);
  simulation(solve);
  solve->add_option("--noise", config.noise, "device name, thermal_T1[_T2] or profile JSON");

  auto* resources = app.add_subcommand("resources", "size, depth, qubits, QV estimate");
  common(resources);
  resources->add_flag("--decompose", config.decompose, "report the lowered circuit");
  resources->add_flag("--all-configs", config.all_configs, "every prep x oracle pair");

  auto* sweep = app.add_subcommand("sweep", "success probability across noise profiles");
  common(sweep);
  simulation(sweep);
  sweep->add_option("--profile", config.profiles, "profile names or JSON paths");
  sweep->add_option("--grid", grid, "T1:T2[,T1:T2...] in microseconds");
  sweep->add_flag("--all-configs", config.all_configs, "every prep x oracle pair");

  auto* verify = app.add_subcommand("verify", "brute-force clique listing");
  common(verify);

  auto* state = app.add_subcommand("state", "amplitude dump");
  common(state);
  state->add_option("--stage", config.stage, "prep | final")
      ->check(CLI::IsMember({"prep", "final"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    config.prep = parse_prep(prep);
    config.oracle = parse_oracle(oracle);
    config.iterations = parse_iterations(iters);
    if (!format.empty()) {
      config.format = parse_format(format);
    }
    if (!grid.empty()) {
      config.grid = parse_grid(grid);
    }
    if (solve->parsed()) return cmd_solve(config, out);
    if (resources->parsed()) return cmd_resources(config, out);
    if (sweep->parsed()) return cmd_sweep(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (state->parsed()) return cmd_state(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace kclique
