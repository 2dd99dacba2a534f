#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kclique/circuit.hpp"
#include "kclique/graph.hpp"
#include "kclique/oracle.hpp"
#include "kclique/stateprep.hpp"

namespace kclique {

/// floor(pi/4 * sqrt(N/m)). Throws NoSolutionsError when m = 0 and
/// kclique::Error when N = 0 or m > N.
std::size_t opt_iter(std::uint64_t search_space, std::uint64_t solutions);

/// sin^2((2j+1) * asin(sqrt(m/N))): probability of measuring a solution
/// after j ideal iterations.
double success_probability_analytic(std::uint64_t search_space, std::uint64_t solutions,
                                    std::size_t iterations);

/// prep . (X^n MCZ X^n) . prep^dagger over the qubits of `prep`: a
/// reflection about prep|0>, up to a global phase of -1.
Circuit diffusion(const Circuit& prep);

struct GroverPlan {
  std::uint64_t search_space = 0;
  std::uint64_t solutions = 0;
  std::size_t iterations = 0;
  PrepMode prep;
  OracleMode oracle;
};

struct GroverCircuit {
  Circuit circuit;
  GroverPlan plan;
  std::vector<NodeSubset> cliques;               // brute-force solution set
  std::vector<std::uint64_t> solution_outcomes;  // node-register indices
};

/// Full algorithm: preparation on the node register, then `iterations`
/// rounds of (oracle, diffusion). Nodes are counted iff prep is Full.
/// With no override the iteration count is opt_iter(N, m), N = 2^n or
/// C(n,k) and m the brute-force clique count; m = 0 then raises
/// NoSolutionsError.
GroverCircuit assemble(const Graph& g, std::size_t k, PrepKind prep, OracleStyle style,
                       std::optional<std::size_t> iterations = std::nullopt);

}  // namespace kclique
