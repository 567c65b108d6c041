#pragma once

// Exact maximum clique and chromatic number with certificates.
//
// Every solver is deterministic: vertex orders are fixed (degree
// descending, id ascending) and no result depends on timing except the
// point at which a BudgetError is raised.

#include <cstddef>
#include <vector>

#include "beckring/graph.hpp"

namespace beckring {

struct SolverOptions {
  /// Wall-clock budget per top-level solver call, in seconds.
  double budget_seconds = 60.0;
  /// Beck-graph solvers switch to the zero-divisor core above this order.
  std::size_t core_threshold = 24;
  /// min_s_optimal_coloring is unconditionally exact up to this many
  /// (reduced) core vertices; above it the search is node-limited.
  std::size_t exhaustive_s_cap = 20;
  /// Node limit per decision when above exhaustive_s_cap.
  std::size_t s_search_node_limit = 200000;

  /// Default options with budget_seconds taken from BECKRING_BUDGET when
  /// set to a positive number.
  static SolverOptions from_env();
};

struct Clique {
  std::vector<Vertex> vertices; // sorted ascending
  std::size_t size() const noexcept { return vertices.size(); }
};

struct Coloring {
  std::vector<std::size_t> class_of; // vertex -> class in [0, k)
  std::size_t k = 0;

  /// Classes as sorted vertex lists, indexed by class.
  std::vector<std::vector<Vertex>> classes() const;
};

/// A maximum clique split into square-zero members (b) and the rest (c).
struct CliqueSplit {
  Clique clique;
  std::vector<Vertex> b;
  std::vector<Vertex> c;
};

struct ChromaticResult {
  std::size_t chi = 0;
  Coloring witness;
};

struct MinSColoring {
  Coloring coloring;
  std::size_t s = 0;
  /// True when s is proven minimal over all chi-colorings; otherwise s is
  /// only an achieved value.
  bool exact = false;
};

bool is_clique(const Graph &g, const std::vector<Vertex> &vertices);
/// Class indices in range, every class non-empty and independent.
bool is_proper(const Graph &g, const Coloring &c);

/// Number of classes holding at least one vertex in `marked`.
std::size_t marked_class_count(const Coloring &c, const Bitset &marked);

// Generic graph solvers.

Clique max_clique(const Graph &g, const SolverOptions &opts = {});

/// Among maximum cliques, one with the most vertices in `marked`.
Clique max_clique_most_marked(const Graph &g, const Bitset &marked,
                              const SolverOptions &opts = {});

/// Deterministic DSATUR heuristic.
Coloring dsatur(const Graph &g);

ChromaticResult chromatic_number(const Graph &g,
                                 const SolverOptions &opts = {});

/// Among proper colorings with exactly chi classes, one minimising the
/// number of classes that hold a marked vertex.
MinSColoring min_marked_coloring(const Graph &g, const Bitset &marked,
                                 const SolverOptions &opts = {});

// Beck-graph solvers. These work on the zero-divisor core when the ring is
// larger than opts.core_threshold and lift witnesses back to element ids.

Clique max_clique(const BeckGraph &g, const SolverOptions &opts = {});
ChromaticResult chromatic_number(const BeckGraph &g,
                                 const SolverOptions &opts = {});

/// A maximum clique maximising its square-zero part.
CliqueSplit best_clique_split(const BeckGraph &g,
                              const SolverOptions &opts = {});

/// Classes of `c` containing a square-zero element. Throws ContractError
/// if `c` is not a proper coloring of `g`.
std::size_t s_of(const BeckGraph &g, const Coloring &c);

/// Among proper colorings with exactly chi classes, one minimising s.
MinSColoring min_s_optimal_coloring(const BeckGraph &g,
                                    const SolverOptions &opts = {});

} // namespace beckring
