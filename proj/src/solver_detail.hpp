#pragma once

// Internals shared by the clique and coloring solvers.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "beckring/solvers.hpp"

namespace beckring::detail {

/// Thrown by search engines when the deadline passes; translated into a
/// BudgetError with the caller's certified bounds.
struct Timeout {};

class Deadline {
public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}

  /// Polls the clock every 1024 calls.
  void poll() {
    if ((++ticks_ & 1023U) == 0 && std::chrono::steady_clock::now() > end_)
      throw Timeout{};
  }

private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

/// Quotient of a graph by its false-twin classes (equal open
/// neighbourhoods). Clique number and chromatic number are unchanged.
/// With marks, a class is marked if any member is, and its representative
/// is the lowest marked member; otherwise the lowest member.
struct TwinQuotient {
  Graph graph;
  std::vector<Vertex> rep;      // quotient vertex -> original vertex
  std::vector<Vertex> class_of; // original vertex -> quotient vertex
  Bitset marked;                // quotient marks
};

TwinQuotient false_twin_quotient(const Graph &g, const Bitset *marked);

/// Clique search without twin reduction. Weights must be positive.
std::vector<Vertex> max_weight_clique(const Graph &g,
                                      const std::vector<std::uint64_t> &w,
                                      Deadline &deadline,
                                      std::size_t *upper_bound = nullptr);

/// Backtracking search for a proper coloring with colors in [0, k) in which
/// marked vertices (if any) use colors < s. `precolor[i]` is given color i.
/// Returns nullopt on proven infeasibility, or when `node_limit` (0 =
/// unlimited) runs out, which sets *exhausted.
std::optional<std::vector<std::size_t>>
color_search(const Graph &g, std::size_t k, const Bitset *marked,
             std::size_t s, const std::vector<Vertex> &precolor,
             Deadline &deadline, std::size_t node_limit = 0,
             bool *exhausted = nullptr);

} // namespace beckring::detail
