#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spectra_chi/graph.hpp"

namespace spectra_chi {

/// Vertex -> color map. A negative entry marks an unassigned vertex.
struct Coloring {
  std::vector<int> assignment;
  int colors = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// First-fit coloring along `order`, which must be a permutation of the
/// vertices (std::invalid_argument otherwise).
Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order);

/// True iff every vertex has a color in [0, colors) and no edge is monochromatic.
bool verify_coloring(const Graph& g, const Coloring& col);

struct CliqueResult {
  int size = 0;          // best clique found; exact when `exact`
  std::vector<Vertex> clique;
  bool exact = false;    // false when the node budget ran out
  std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with greedy-coloring pruning.
CliqueResult clique_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

struct ChromaticResult {
  int lower = 0;     // clique bound, raised to chi when exact
  int upper = 0;     // colors used by `coloring`
  bool exact = false;
  Coloring coloring;  // always proper
  std::uint64_t nodes = 0;

  int value() const { return upper; }
};

/// Exact chromatic number by DSATUR branch and bound. The search picks the
/// uncolored vertex of highest saturation, then highest degree, then lowest
/// index. If the budget runs out the result is the bracket [lower, upper].
ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace spectra_chi
