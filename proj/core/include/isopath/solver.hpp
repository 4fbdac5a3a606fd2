#pragma once

// Exact minimum isometric path cover / partition, exact minimum k-path
// partition, the diameter lower bound, a greedy cover heuristic, and an
// independent certificate validator.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isopath/graph.hpp"
#include "isopath/isometric.hpp"

namespace isopath {

enum class ProblemKind { Cover, Partition, KPathPartition };

std::string_view to_string(ProblemKind kind);

/// A set of paths claimed to solve `kind` on some graph.
///   Cover: isometric paths whose union is V.
///   Partition: pairwise disjoint isometric paths whose union is V.
///   KPathPartition: pairwise disjoint simple paths whose union is V.
/// `max_vertices` caps vertices per path (required for KPathPartition,
/// optional for Partition, 0 = no cap).
struct Solution {
  ProblemKind kind = ProblemKind::Cover;
  std::vector<Path> paths;
  std::size_t max_vertices = 0;
  std::string graph_id;
};

enum class SolveStatus { Optimal, TimeLimit, NodeLimit };

std::string_view to_string(SolveStatus status);

struct Limits {
  double time_limit_seconds = 60.0;
  std::uint64_t node_limit = 100'000'000;
  /// The search is sequential, so every run is schedule independent; the
  /// flag is kept for interface stability.
  bool deterministic = true;
};

struct SolveReport {
  std::size_t value = 0;
  Solution certificate;
  std::size_t lower_bound = 0;
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

/// ceil(|V| / (diam + 1)). Throws DomainError when g is disconnected.
std::size_t lower_bound(const Graph& g);

/// Minimum isometric path cover. Branch and bound over maximal isometric
/// paths: branch on the uncovered vertex lying on the fewest candidates,
/// trying candidates by newly covered vertices (descending) then
/// lexicographically. Disconnected graphs are solved per component.
SolveReport min_cover(const Graph& g, const Limits& limits = {});

/// Minimum isometric path partition. Exact-cover search: branch on the
/// lowest-index unassigned vertex over the isometric paths through it that
/// avoid assigned vertices, longest first then lexicographically.
/// `max_path_vertices` > 0 restricts paths to that many vertices.
SolveReport min_partition(const Graph& g, const Limits& limits = {},
                          std::size_t max_path_vertices = 0);

/// Minimum partition into simple paths of at most k vertices (no isometry
/// requirement). Throws InputError when k == 0.
SolveReport min_kpath_partition(const Graph& g, std::size_t k, const Limits& limits = {});

/// Repeatedly takes the isometric path covering the most uncovered vertices,
/// ties to the lexicographically smallest canonical path.
Solution greedy_cover(const Graph& g);

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Checks every Solution invariant from scratch, reporting the first
/// violation.
Validation validate(const Graph& g, const Solution& s);

}  // namespace isopath
