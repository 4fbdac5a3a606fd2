#pragma once

// Isometric (geodesic) paths: membership test, lazy enumeration, maximality,
// and per-factor edge counts in Cartesian products.
//
// A path v0..vk is isometric iff d(v0, vi) = i for every i, so enumeration
// extends a prefix v0..vk only by neighbors u of vk with d(v0, u) = k + 1.
// Paths are reported in canonical orientation: the endpoint with the smaller
// index first. Single vertices are isometric paths of length 0.

#include <span>
#include <vector>

#include "isopath/graph.hpp"

namespace isopath {

using Path = std::vector<Vertex>;

/// True iff `p` is a simple path of g whose length equals d(front, back).
/// Throws InputError on an empty sequence or out-of-range vertices.
bool is_isometric(const Graph& g, const DistMatrix& dist, std::span<const Vertex> p);

/// Reverses p when its last vertex is smaller than its first.
Path canonical(Path p);

/// True iff no isometric path of g properly contains p as a subpath. Assumes
/// p is isometric.
bool is_maximal_isometric(const Graph& g, const DistMatrix& dist, std::span<const Vertex> p);

struct EnumerationOptions {
  /// Vertices a path may use; empty means all. Isometry is always measured in
  /// the full graph.
  std::vector<bool> allowed;
  /// Upper bound on vertices per path; 0 means unbounded.
  std::size_t max_vertices = 0;
  /// Emit only paths that are maximal in the full graph.
  bool maximal_only = false;
};

/// Lazy depth-first enumeration of isometric paths. Starts are visited in
/// increasing order and neighbors in increasing order, so the stream order is
/// deterministic. Holds references to g and dist.
class IsometricPathEnumerator {
 public:
  IsometricPathEnumerator(const Graph& g, const DistMatrix& dist, EnumerationOptions options = {});

  /// Advances to the next path. Returns false once the stream is exhausted.
  bool next();

  /// Current path in canonical orientation; valid after next() returned true.
  std::span<const Vertex> path() const { return path_; }

 private:
  bool allowed(Vertex v) const { return options_.allowed.empty() || options_.allowed[v]; }
  bool advance();

  const Graph& g_;
  const DistMatrix& dist_;
  EnumerationOptions options_;
  Vertex start_ = 0;
  Path path_;
  std::vector<std::size_t> cursor_;
};

std::vector<Path> isometric_paths(const Graph& g, const DistMatrix& dist,
                                  EnumerationOptions options = {});

std::vector<Path> maximal_isometric_paths(const Graph& g, const DistMatrix& dist);

struct FactorEdgeCounts {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const FactorEdgeCounts&, const FactorEdgeCounts&) = default;
};

/// Edges of p moving in each factor of a graph built by cartesian_product.
/// Throws InputError when the graph lacks product labels.
FactorEdgeCounts factor_edge_count(const Graph& product, std::span<const Vertex> p);

}  // namespace isopath
