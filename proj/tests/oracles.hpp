#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's solvers; adjacency comes straight from ring multiplication.

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "beckring/ring.hpp"

namespace oracle {

using Adj = std::vector<std::vector<bool>>;

inline Adj beck_adjacency(const beckring::FiniteRing &r) {
  const std::size_t n = r.size();
  Adj adj(n, std::vector<bool>(n, false));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      adj[x][y] =
          x != y && r.mul(beckring::Element{x}, beckring::Element{y}).index == 0;
  return adj;
}

/// Z_N with plain modular arithmetic.
inline Adj zn_adjacency(std::uint64_t n) {
  Adj adj(n, std::vector<bool>(n, false));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      adj[x][y] = x != y && (x * y) % n == 0;
  return adj;
}

inline std::vector<bool> square_zero(const beckring::FiniteRing &r) {
  std::vector<bool> out(r.size());
  for (std::uint32_t x = 0; x < r.size(); ++x)
    out[x] = r.mul(beckring::Element{x}, beckring::Element{x}).index == 0;
  return out;
}

inline bool is_clique(const Adj &adj, const std::vector<std::uint32_t> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adj[vs[i]][vs[j]])
        return false;
  return true;
}

inline bool is_proper(const Adj &adj, const std::vector<std::size_t> &color) {
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t v = u + 1; v < adj.size(); ++v)
      if (adj[u][v] && color[u] == color[v])
        return false;
  return true;
}

/// Every vertex subset, as bitmasks; n <= 20.
struct SubsetCliques {
  std::size_t omega = 0;
  std::size_t best_marked = 0; // max marked members over maximum cliques
};

inline SubsetCliques clique_by_subsets(const Adj &adj,
                                       const std::vector<bool> &marked = {}) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (adj[u][v])
        nbr[u] |= 1u << v;
  SubsetCliques out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if (mask >> v & 1)
        ok = (mask & ~(1u << v) & ~nbr[v]) == 0;
    if (!ok)
      continue;
    const std::size_t size = std::popcount(mask);
    std::size_t m = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v & 1) && !marked.empty() && marked[v])
        ++m;
    if (size > out.omega) {
      out.omega = size;
      out.best_marked = m;
    } else if (size == out.omega) {
      out.best_marked = std::max(out.best_marked, m);
    }
  }
  return out;
}

/// Every set partition as a restricted growth string; n <= 11.
inline std::size_t chromatic_by_partitions(const Adj &adj) {
  const std::size_t n = adj.size();
  if (n == 0)
    return 0;
  std::vector<std::size_t> rgs(n, 0);
  std::size_t best = n;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t blocks) {
    if (i == n) {
      if (is_proper(adj, rgs))
        best = std::min(best, blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return best;
}

/// Bron-Kerbosch with pivoting on std::bitset rows; n <= 4096.
inline std::size_t clique_bron_kerbosch(const Adj &adj) {
  using Row = std::bitset<4096>;
  const std::size_t n = adj.size();
  std::vector<Row> rows(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (adj[u][v])
        rows[u].set(v);
  std::size_t best = 0;
  std::function<void(std::size_t, Row, Row)> rec = [&](std::size_t r, Row p,
                                                       Row x) {
    if (p.none() && x.none()) {
      best = std::max(best, r);
      return;
    }
    if (r + p.count() <= best)
      return;
    std::size_t pivot = 0, pivot_deg = 0;
    const Row px = p | x;
    for (std::size_t u = px._Find_first(); u < n; u = px._Find_next(u)) {
      const std::size_t d = (p & rows[u]).count();
      if (d >= pivot_deg) {
        pivot = u;
        pivot_deg = d;
      }
    }
    const Row cand = p & ~rows[pivot];
    for (std::size_t v = cand._Find_first(); v < n; v = cand._Find_next(v)) {
      rec(r + 1, p & rows[v], x & rows[v]);
      p.reset(v);
      x.set(v);
    }
  };
  Row all;
  for (std::size_t v = 0; v < n; ++v)
    all.set(v);
  rec(0, all, Row{});
  return best;
}

/// Number of classes of `color` that contain a marked vertex.
inline std::size_t marked_classes(const std::vector<std::size_t> &color,
                                  const std::vector<bool> &marked) {
  std::vector<std::size_t> hit;
  for (std::size_t v = 0; v < color.size(); ++v)
    if (marked[v])
      hit.push_back(color[v]);
  std::sort(hit.begin(), hit.end());
  return static_cast<std::size_t>(
      std::unique(hit.begin(), hit.end()) - hit.begin());
}

/// Minimum s over all optimal colorings, by partition enumeration; n <= 11.
inline std::size_t min_s_by_partitions(const Adj &adj,
                                       const std::vector<bool> &marked) {
  const std::size_t n = adj.size();
  const std::size_t chi = chromatic_by_partitions(adj);
  std::vector<std::size_t> rgs(n, 0);
  std::size_t best = n + 1;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t blocks) {
    if (blocks > chi)
      return;
    if (i == n) {
      if (blocks == chi && is_proper(adj, rgs))
        best = std::min(best, marked_classes(rgs, marked));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(1, 1);
  return best;
}

/// Induced adjacency on 0 and every vertex with a nonzero neighbour. The
/// dropped vertices only see 0, so chi and omega survive via max(., 2).
inline Adj core_adjacency(const Adj &adj) {
  std::vector<std::size_t> keep{0};
  for (std::size_t v = 1; v < adj.size(); ++v)
    for (std::size_t u = 1; u < adj.size(); ++u)
      if (adj[v][u]) {
        keep.push_back(v);
        break;
      }
  Adj out(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out[i][j] = adj[keep[i]][keep[j]];
  return out;
}

/// Plain backtracking: is the graph k-colorable? Vertices in descending
/// degree order; a new color is only ever the lowest unused one.
inline bool colorable(const Adj &adj, std::size_t k) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      deg[u] += adj[u][v];
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(n, kNone);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == n)
      return true;
    const std::size_t v = order[i];
    for (std::size_t c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u)
        ok = !(adj[v][u] && color[u] == c);
      if (!ok)
        continue;
      color[v] = c;
      if (rec(i + 1, std::max(used, c + 1)))
        return true;
      color[v] = kNone;
    }
    return false;
  };
  return rec(0, 0);
}

} // namespace oracle
