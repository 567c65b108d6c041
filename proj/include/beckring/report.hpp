#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "beckring/theorems.hpp"

namespace beckring {

using Json = nlohmann::ordered_json;

struct ReportCheck {
  std::string name;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool pass = false;
  friend bool operator==(const ReportCheck &, const ReportCheck &) = default;
};

/// Everything `beckring analyze` prints about one ring. Witness elements
/// are in tuple form (FiniteRing::format).
struct AnalysisReport {
  std::string ring;
  std::size_t size = 0;
  bool local = false;
  bool reduced = false;
  std::size_t units = 0;
  std::size_t zero_divisors = 0;
  std::size_t nilradical_size = 0;
  std::size_t nilradical_index = 0;
  std::vector<std::size_t> nilradical_power_sizes;
  std::size_t omega = 0;
  std::vector<std::string> omega_witness;
  std::size_t chi = 0;
  std::vector<std::vector<std::string>> chi_classes;
  std::size_t split_b = 0; // square-zero members of the split clique
  std::size_t split_c = 0;
  std::size_t s = 0;
  std::vector<ReportCheck> checks;

  friend bool operator==(const AnalysisReport &,
                         const AnalysisReport &) = default;
};

struct AnalyzeOptions {
  SMode s_mode = SMode::min_s;
  /// Products above this many elements skip direct solves in checks.
  std::size_t max_size = 1024;
  SolverOptions solver;
};

AnalysisReport analyze(const RingPtr &r, const AnalyzeOptions &opts = {});

/// Re-verifies the clique and coloring witnesses of `rep` against `r`.
/// Throws InternalError describing the first failure.
void verify_witnesses(const AnalysisReport &rep, const FiniteRing &r);

Json to_json(const AnalysisReport &rep);
AnalysisReport report_from_json(const Json &j);
std::string to_text(const AnalysisReport &rep);

// ---------------------------------------------------------------------------
// Catalog-wide verification.

/// The rings the verification suite and acceptance tests range over.
std::vector<std::string> default_catalog();
/// Finite fields used for the reduced-ring checks.
std::vector<std::string> field_catalog();

struct SuiteOptions {
  std::size_t max_size = 256;
  /// Additional structure-constant rings, validated like catalog rings.
  std::vector<std::pair<std::string, StructureDescriptor>> extra_rings;
  SolverOptions solver;
};

struct SuiteTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SuiteResult {
  std::vector<SuiteTally> tallies;
  std::vector<std::string> failures; // one line per failing instance
  bool ok() const { return failures.empty(); }
};

SuiteResult run_verify_suite(const SuiteOptions &opts = {});

/// Reads extra structure rings from JSON:
/// [{"name": ..., "orders": [...], "unity": [...],
///   "products": [[i, j, [c...]], ...]}, ...]
std::vector<std::pair<std::string, StructureDescriptor>>
structure_rings_from_json(const Json &j);

// ---------------------------------------------------------------------------

/// Entry point of the `beckring` tool. Returns the process exit code:
/// 0 ok, 1 usage, 2 parse, 3 capacity, 4 budget, 5 verification failure.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace beckring
