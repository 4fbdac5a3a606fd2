#pragma once

// Reduction from 3-path partition on bipartite graphs to isometric path
// partition: add vertices x, y, z with z adjacent to x, y and every original
// vertex. For bipartite G the reduced graph has diameter 2 and G has a
// 3-path partition of size k iff the reduced graph has an isometric path
// partition of size k + 1.

#include <vector>

#include "isopath/graph.hpp"
#include "isopath/solver.hpp"

namespace isopath {

/// Thrown by reduce() for non-bipartite input; carries an odd cycle.
class NotBipartiteError : public InputError {
 public:
  NotBipartiteError(std::vector<Vertex> odd_cycle);
  const std::vector<Vertex>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<Vertex> odd_cycle_;
};

struct ReducedInstance {
  Graph original;
  Graph reduced;
  /// Fixed convention: x = n, y = n + 1, z = n + 2.
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
};

/// Builds the reduced graph. Original labels are kept (vertex indices are
/// used as names when the input is unlabeled); x, y, z are labeled "x", "y",
/// "z". Throws NotBipartiteError unless `force` is set.
ReducedInstance reduce(const Graph& g, bool force = false);

/// Adds x-z-y to a 3-path partition of the original graph. Throws InputError
/// with the validator's diagnostic when `partition` is not a valid 3-path
/// partition.
Solution lift_partition(const ReducedInstance& inst, const Solution& partition);

enum class DiametralForm { XZY, IZX, IZY, IKJ, IZJ, Other };

/// Shape of a length-2 path of the reduced graph, either orientation;
/// i, j, k stand for original vertices.
DiametralForm classify_diametral(const ReducedInstance& inst, std::span<const Vertex> p);

enum class EquivalenceStatus { Confirmed, Mismatch, Inconclusive };

std::string_view to_string(EquivalenceStatus status);

struct EquivalenceReport {
  EquivalenceStatus status = EquivalenceStatus::Inconclusive;
  std::size_t k = 0;        ///< minimum 3-path partition of the original
  std::size_t k_prime = 0;  ///< minimum isometric path partition of the reduced graph
  Hops reduced_diameter = 0;
  bool partition_matches = false;  ///< k_prime == k + 1
  bool diameter_is_two = false;
  bool diametral_forms_ok = false;
  bool lift_valid = false;  ///< lifted optimal 3-path partition validates
  /// Diametral paths matching none of the five listed forms.
  std::vector<Path> unexpected_diametral;
  SolveReport kpath;
  SolveReport partition;
};

/// Solves both sides exactly. Limit exhaustion on either side yields
/// Inconclusive. Throws NotBipartiteError for non-bipartite input.
EquivalenceReport check_equivalence(const Graph& g, const Limits& limits = {});

}  // namespace isopath
