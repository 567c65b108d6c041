#pragma once

// Product formulas and constructions for clique and chromatic numbers of
// Beck graphs of finite rings, each evaluated and checked against the
// exact solvers.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "beckring/ideal.hpp"
#include "beckring/solvers.hpp"

namespace beckring {

// ---------------------------------------------------------------------------
// Clique number of a direct product.

struct FactorSplit {
  std::size_t omega = 0;
  std::vector<Element> b; // square-zero part of the chosen maximum clique
  std::vector<Element> c; // the rest
};

struct OmegaPrediction {
  std::vector<FactorSplit> factors;
  /// prod |B_i| + sum |C_i|
  std::size_t predicted = 0;
  /// The same value written as prod (omega_i - |C_i|) + sum (omega_i - |B_i|).
  std::size_t predicted_by_omega = 0;
  /// B_1 x ... x B_n together with each C_i embedded on its own axis, as
  /// per-factor component tuples. Verified pairwise-annihilating.
  std::vector<std::vector<Element>> witness;
};

OmegaPrediction omega_product_formula(const std::vector<RingPtr> &factors,
                                      const SolverOptions &opts = {});

// ---------------------------------------------------------------------------
// Chromatic number of a direct product.

enum class SMode { any_optimal, min_s };

struct FactorColoring {
  std::size_t chi = 0;
  std::size_t s = 0;
  bool s_exact = true; // false only for min_s above the exhaustive cap
  Coloring coloring;   // chi classes, square-zero-bearing classes first
};

struct ChiBounds {
  std::vector<FactorColoring> factors;
  std::size_t lower = 0; // sum chi_i - (n - 1)
  std::size_t upper = 0; // sum (chi_i - s_i) + prod s_i
};

/// An optimal coloring of one ring, chosen by `mode`, with its classes
/// reordered so that square-zero-bearing classes come first (stable).
FactorColoring factor_coloring(const RingPtr &r, SMode mode,
                               const SolverOptions &opts = {});

ChiBounds chi_bounds(const std::vector<RingPtr> &factors, SMode mode,
                     const SolverOptions &opts = {});

/// Square-zero-bearing classes first, stably by original index.
Coloring order_square_zero_first(const FiniteRing &r, const Coloring &c);

/// The explicit coloring of r1 x r2 built from colorings of the factors.
/// Uses s1*s2 + (k1 - s1) + (k2 - s2) colors and is verified proper before
/// returning. Element ids of the result follow make_product({r1, r2}).
Coloring product_coloring(const FiniteRing &r1, const Coloring &c1,
                          const FiniteRing &r2, const Coloring &c2);

/// Square-zero-bearing class count of a coloring of `r`, without checking
/// properness. Used to thread s through iterated products.
std::size_t square_zero_classes(const FiniteRing &r, const Coloring &c);

// ---------------------------------------------------------------------------
// Z_N.

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
};

struct ZnFormula {
  std::uint64_t value = 0;
  std::vector<PrimePower> factorization;
  std::size_t odd_exponent_primes = 0; // r
};

std::vector<PrimePower> factorize(std::uint64_t n);
ZnFormula zn_formula(std::uint64_t n);

// ---------------------------------------------------------------------------
// Nilradical bounds.

struct NilFactor {
  std::size_t index = 0;  // index of nilpotency
  bool even = false;      // index = 2n (even) or 2m - 1 (odd)
  std::size_t param = 0;  // n or m
  std::size_t power_size = 0; // |J^n| or |J^m|
};

struct NilBound {
  std::vector<NilFactor> factors;
  std::size_t odd_count = 0; // r
  std::size_t bound = 0;     // prod power_size + r
  std::optional<std::size_t> direct_omega; // when the product fits
  bool holds = true;                       // bound <= direct_omega
};

NilFactor classify_nilpotency(const RingPtr &r);

/// Products larger than `direct_cap` elements skip the direct solve.
NilBound nilradical_bound(const std::vector<RingPtr> &factors,
                          std::size_t direct_cap = 256,
                          const SolverOptions &opts = {});

enum class NilType { even_n, odd_m };

struct AnCondition {
  bool membership = true; // xy = 0 => x in J^p or y in J^p
  bool even_clause = true; // even type: x not in J^{n+1} => y in J^n
  bool holds = true;
  std::size_t bound = 0;  // |J^p| + (odd ? 1 : 0)
  /// Exact invariants of the ring itself, computed when `holds`.
  std::optional<std::size_t> omega;
  std::optional<std::size_t> chi;
  bool equality = false; // chi == omega == bound
};

/// Exhaustive scan of every ordered pair with xy = 0. `param` must match the
/// ring's index of nilpotency (2n for even_n, 2m - 1 for odd_m), else
/// PreconditionError.
AnCondition check_an_condition(const RingPtr &r, NilType type,
                               std::size_t param,
                               const SolverOptions &opts = {});
/// Derives type and parameter from the ring's nilpotency profile.
AnCondition check_an_condition(const RingPtr &r,
                               const SolverOptions &opts = {});

// ---------------------------------------------------------------------------
// Reduced rings.

struct ReducedCheck {
  std::size_t field_count = 0;
  std::size_t omega = 0;
  std::size_t chi = 0;
  bool consistent = false; // omega == chi == field_count + 1
};

ReducedCheck reduced_theorem_check(const RingPtr &r,
                                   const SolverOptions &opts = {});

// ---------------------------------------------------------------------------
// Counterexample family: the canonical AN ring times reduced rings.

struct CounterexampleReport {
  std::size_t product_size = 0;
  std::size_t omega = 0;        // by the product clique formula
  std::optional<std::size_t> direct_omega;
  std::size_t chi_lower = 0;    // sum chi_i - (n - 1)
  std::size_t coloring_size = 0; // constructed proper coloring
  bool chi_certified = false;   // chi_lower == coloring_size
  std::size_t chi = 0;
  std::ptrdiff_t gap = 0;       // chi - omega
};

/// Products larger than `direct_cap` elements skip the direct omega solve.
CounterexampleReport
counterexample_family(const std::vector<RingPtr> &reduced_factors,
                      std::size_t direct_cap = 128,
                      const SolverOptions &opts = {});

/// The coloring of r_1 x ... x r_n obtained by folding product_coloring
/// left to right over the given factor colorings.
Coloring iterated_product_coloring(const std::vector<RingPtr> &factors,
                                   const std::vector<Coloring> &colorings);

} // namespace beckring
