#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beckring/bitset.hpp"
#include "beckring/ring.hpp"

namespace beckring {

using Vertex = std::uint32_t;

/// Simple undirected graph with one packed adjacency row per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return rows_.size(); }

  /// Self-loops are ignored.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset &neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  std::size_t edge_count() const;
  /// Every edge once as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Induced subgraph; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<Bitset> rows_;
};

/// Beck's graph of a ring: all elements, x ~ y iff x != y and xy = 0.
/// Vertex ids are element indices.
class BeckGraph {
public:
  const FiniteRing &ring() const noexcept { return *ring_; }
  const RingPtr &ring_ptr() const noexcept { return ring_; }
  const Graph &graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }

  /// Elements with x^2 = 0 (always includes 0).
  const Bitset &square_zero() const noexcept { return square_zero_; }
  /// Nonzero x with xy = 0 for some nonzero y (y = x allowed).
  const Bitset &zero_divisors() const noexcept { return zero_divisors_; }

private:
  friend BeckGraph build_graph(RingPtr r, std::size_t size_cap);

  RingPtr ring_;
  Graph graph_;
  Bitset square_zero_;
  Bitset zero_divisors_;
};

BeckGraph build_graph(RingPtr r, std::size_t size_cap = kDefaultSizeCap);

/// Induced subgraph on {0} together with the zero-divisors.
/// For |R| >= 2, omega(full) = max(omega(core), 2) and likewise for chi.
struct CoreGraph {
  Graph graph;
  std::vector<Vertex> to_ring; // core vertex -> element index
  Bitset square_zero;          // in core numbering
};

CoreGraph core(const BeckGraph &g);

enum class ExportFormat { dimacs, json };

std::string export_dimacs(const Graph &g);
std::string export_json(const Graph &g);
std::string export_graph(const BeckGraph &g, ExportFormat format);

} // namespace beckring
