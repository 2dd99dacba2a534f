#include "kclique/grover.hpp"

#include <cmath>

#include "kclique/error.hpp"

namespace kclique {

std::size_t opt_iter(std::uint64_t search_space, std::uint64_t solutions) {
  if (solutions == 0) {
    throw NoSolutionsError();
  }
  if (search_space == 0 || solutions > search_space) {
    throw Error("opt_iter needs 1 <= m <= N");
  }
  const double ratio = static_cast<double>(search_space) / static_cast<double>(solutions);
  return static_cast<std::size_t>(std::floor(M_PI / 4.0 * std::sqrt(ratio)));
}

double success_probability_analytic(std::uint64_t search_space, std::uint64_t solutions,
                                    std::size_t iterations) {
  if (solutions == 0 || search_space == 0 || solutions > search_space) {
    throw Error("success probability needs 1 <= m <= N");
  }
  const double theta = std::asin(
      std::sqrt(static_cast<double>(solutions) / static_cast<double>(search_space)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

Circuit diffusion(const Circuit& prep) {
  const std::size_t n = prep.num_qubits();
  if (n == 0) {
    throw Error("diffusion over an empty register");
  }
  Circuit d = prep.adjoint();
  for (Qubit q = 0; q < n; ++q) {
    d.append(Gate::x(q));
  }
  if (n == 1) {
    d.append(Gate::z(0));
  } else {
    std::vector<Qubit> all(n);
    for (Qubit q = 0; q < n; ++q) {
      all[q] = q;
    }
    d.append(Gate::mcz(std::move(all)));
  }
  for (Qubit q = 0; q < n; ++q) {
    d.append(Gate::x(q));
  }
  d.append(prep);
  return d;
}

GroverCircuit assemble(const Graph& g, std::size_t k, PrepKind prep, OracleStyle style,
                       std::optional<std::size_t> iterations) {
  const std::size_t n = g.num_nodes();
  GroverCircuit out;
  out.plan.prep = PrepMode{prep, prep == PrepKind::Full ? 0 : k};
  out.plan.oracle = OracleMode{style, prep == PrepKind::Full};
  validate_prep(out.plan.prep, n);

  const Circuit oracle = build_oracle(g, k, out.plan.oracle);
  out.cliques = find_cliques_bruteforce(g, k);
  for (const auto& s : out.cliques) {
    out.solution_outcomes.push_back(subset_to_bitstring(s, n).index);
  }
  out.plan.search_space = search_space_size(out.plan.prep, n);
  out.plan.solutions = out.cliques.size();
  out.plan.iterations =
      iterations ? *iterations : opt_iter(out.plan.search_space, out.plan.solutions);

  const Circuit state_prep = build_prep(out.plan.prep, n);
  const Circuit diff = diffusion(state_prep);

  Circuit c;
  for (const auto& r : oracle.registers()) {
    c.add_register(r.name, r.size);
  }
  const Register& nodes = c.reg("nodes");
  c.append_on(state_prep, nodes);
  for (std::size_t i = 0; i < out.plan.iterations; ++i) {
    c.append(oracle);
    c.append_on(diff, nodes);
  }
  out.circuit = std::move(c);
  return out;
}

}  // namespace kclique
