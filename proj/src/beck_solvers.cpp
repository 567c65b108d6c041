#include <algorithm>

#include "beckring/solvers.hpp"

namespace beckring {

namespace {

bool use_core(const BeckGraph &g, const SolverOptions &opts) {
  return g.order() > opts.core_threshold;
}

// Lowest nonzero element; in a ring without zero-divisors this is a
// non-zero-divisor pendant on 0.
constexpr Vertex kFirstNonzero = 1;

Clique lift_clique(const CoreGraph &c, const Clique &core_clique,
                   std::size_t full_order) {
  Clique out;
  for (const Vertex v : core_clique.vertices)
    out.vertices.push_back(c.to_ring[v]);
  if (out.size() == 1 && full_order >= 2)
    out.vertices.push_back(kFirstNonzero);
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

// Extends a coloring of the core to every element: non-zero-divisors only
// see 0, so they join the lowest class other than 0's.
Coloring lift_coloring(const CoreGraph &c, const Coloring &core_coloring,
                       std::size_t full_order) {
  Coloring out;
  out.k = core_coloring.k;
  const std::size_t zero_class = core_coloring.class_of[0];
  std::size_t pendant_class = zero_class == 0 ? 1 : 0;
  if (pendant_class >= out.k && full_order > c.to_ring.size())
    out.k = pendant_class + 1;
  out.class_of.assign(full_order, pendant_class);
  for (std::size_t i = 0; i < c.to_ring.size(); ++i)
    out.class_of[c.to_ring[i]] = core_coloring.class_of[i];
  return out;
}

CliqueSplit split_of(const BeckGraph &g, Clique clique) {
  CliqueSplit s;
  for (const Vertex v : clique.vertices)
    (g.square_zero().test(v) ? s.b : s.c).push_back(v);
  s.clique = std::move(clique);
  return s;
}

} // namespace

Clique max_clique(const BeckGraph &g, const SolverOptions &opts) {
  if (!use_core(g, opts))
    return max_clique(g.graph(), opts);
  const CoreGraph c = core(g);
  return lift_clique(c, max_clique(c.graph, opts), g.order());
}

ChromaticResult chromatic_number(const BeckGraph &g,
                                 const SolverOptions &opts) {
  if (!use_core(g, opts))
    return chromatic_number(g.graph(), opts);
  const CoreGraph c = core(g);
  const auto core_result = chromatic_number(c.graph, opts);
  auto witness = lift_coloring(c, core_result.witness, g.order());
  return ChromaticResult{witness.k, std::move(witness)};
}

CliqueSplit best_clique_split(const BeckGraph &g, const SolverOptions &opts) {
  if (!use_core(g, opts))
    return split_of(g, max_clique_most_marked(g.graph(), g.square_zero(), opts));
  const CoreGraph c = core(g);
  const Clique found = max_clique_most_marked(c.graph, c.square_zero, opts);
  return split_of(g, lift_clique(c, found, g.order()));
}

std::size_t s_of(const BeckGraph &g, const Coloring &c) {
  if (!is_proper(g.graph(), c))
    throw ContractError("s_of requires a proper coloring of " +
                        g.ring().label());
  return marked_class_count(c, g.square_zero());
}

MinSColoring min_s_optimal_coloring(const BeckGraph &g,
                                    const SolverOptions &opts) {
  // Non-zero-divisors are never square-zero and only meet 0, so the
  // minimum is decided on the core.
  const CoreGraph c = core(g);
  auto core_result = min_marked_coloring(c.graph, c.square_zero, opts);
  MinSColoring out;
  out.coloring = lift_coloring(c, core_result.coloring, g.order());
  out.s = marked_class_count(out.coloring, g.square_zero());
  out.exact = core_result.exact;
  return out;
}

} // namespace beckring
