#pragma once

// Closed-form results on graph families, replayed against the exact solvers,
// plus the instance corpora used by the reduction and oracle sweeps.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isopath/generators.hpp"
#include "isopath/reduction.hpp"
#include "isopath/solver.hpp"

namespace isopath {

/// Accepted values lo..hi inclusive.
struct Claim {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool accepts(std::size_t value) const { return lo <= value && value <= hi; }
  std::string text() const;
};

struct VerifySuiteEntry {
  std::string suite;
  FamilySpec family;
  std::optional<Claim> cover;      ///< checked when set
  std::optional<Claim> partition;  ///< checked when set
  std::string claim_source;
  bool extended = false;
};

enum class Verdict { Pass, Mismatch, Inconclusive };

std::string_view to_string(Verdict verdict);

struct VerifyResult {
  VerifySuiteEntry entry;
  Verdict verdict = Verdict::Inconclusive;
  std::size_t vertices = 0;
  std::size_t lower_bound = 0;
  std::optional<SolveReport> cover;
  std::optional<SolveReport> partition;
  /// lower_bound <= cover <= partition on whatever was solved.
  bool bound_chain_ok = true;
  bool certificates_ok = true;
  std::string detail;
};

/// Suite names accepted by suite_entries: grids, cylinders, tori, benes,
/// hypercubes, stars, trees, products, and "all". The reduction sweep is
/// separate (run_reduction_sweep).
std::vector<std::string> suite_names();

/// Throws InputError for unknown suites. Extended entries are included only
/// when `extended` is set.
std::vector<VerifySuiteEntry> suite_entries(std::string_view suite, bool extended = false);

/// Solves the entry with the exact solvers. Never passes a claim from a
/// non-optimal solve.
VerifyResult run_entry(const VerifySuiteEntry& entry, const Limits& limits);

/// Every connected bipartite labeled graph on n vertices (raw enumeration of
/// edge subsets, n <= 8).
void for_each_connected_bipartite(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Connected bipartite graph on 1..max_n vertices drawn from `seed`.
Graph random_connected_bipartite(std::size_t max_n, std::uint64_t seed);

/// Connected graph on 1..max_n vertices drawn from `seed`.
Graph random_connected_graph(std::size_t max_n, std::uint64_t seed);

struct ReductionSweepRow {
  std::string corpus;
  std::size_t graphs = 0;
  std::size_t confirmed = 0;
  std::size_t mismatches = 0;
  std::size_t inconclusive = 0;
  double seconds = 0.0;
  /// First failing graph, serialized, for diagnostics.
  std::string first_failure;
};

/// Checks the reduction equivalence on every connected bipartite graph with
/// at most `exhaustive_max_n` vertices (one row per n) and on `random_count`
/// seeded random connected bipartite graphs with at most `random_max_n`
/// vertices.
std::vector<ReductionSweepRow> run_reduction_sweep(std::size_t exhaustive_max_n,
                                                   std::size_t random_count,
                                                   std::size_t random_max_n, const Limits& limits);

}  // namespace isopath
