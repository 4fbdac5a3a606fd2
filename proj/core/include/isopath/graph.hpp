#pragma once

// Undirected simple graphs on dense vertex ids, plus the unweighted distance
// machinery (BFS, all-pairs matrix, diameter, bipartiteness) the rest of the
// library builds on.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace isopath {

using Vertex = std::uint32_t;
using Hops = std::uint32_t;

/// Distance value of a vertex pair in different components.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

/// Malformed input: bad parameters, out-of-range vertices, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside an operation's domain (e.g. the diameter of a
/// disconnected graph).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Vertex labels are metadata recorded by the generators; no algorithm reads
// them except factor_edge_count.

/// Coordinate tuple, printed "(c0,c1,...)".
struct CoordLabel {
  std::vector<int> coords;
  friend bool operator==(const CoordLabel&, const CoordLabel&) = default;
};

/// Butterfly/Benes vertex <w, level>; bit i of `word` is position i of the
/// bit string. Printed "<x0x1...x{r-1},level>".
struct LevelLabel {
  std::uint64_t word = 0;
  unsigned bits = 0;
  unsigned level = 0;
  friend bool operator==(const LevelLabel&, const LevelLabel&) = default;
};

/// Vertex (a, b) of a Cartesian product, indices into the two factors.
/// Printed "[a|b]".
struct FactorLabel {
  Vertex first = 0;
  Vertex second = 0;
  friend bool operator==(const FactorLabel&, const FactorLabel&) = default;
};

/// Free-form name; must not start with '(', '<' or '[' and must not contain
/// whitespace.
struct NameLabel {
  std::string name;
  friend bool operator==(const NameLabel&, const NameLabel&) = default;
};

using Label = std::variant<CoordLabel, LevelLabel, FactorLabel, NameLabel>;

std::string to_string(const Label& label);

/// Inverse of to_string. Throws InputError on malformed structured labels.
Label parse_label(std::string_view text);

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Edges may be given in either orientation and any order. Throws
  /// InputError on self-loops, duplicates, out-of-range endpoints, or a label
  /// vector that is neither empty nor one distinct label per vertex.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<Label> labels = {});

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(Vertex v) const { return labels_.at(v); }
  void set_labels(std::vector<Label> labels);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<Label> labels_;
};

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
/// Labels are carried over when present.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// All-pairs hop counts, row-major. Immutable once built.
class DistMatrix {
 public:
  DistMatrix() = default;

  std::size_t order() const { return n_; }

  /// Raw hop count; kUnreachable across components.
  Hops operator()(Vertex u, Vertex v) const { return d_[std::size_t{u} * n_ + v]; }

  std::optional<Hops> distance(Vertex u, Vertex v) const;
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }

  std::span<const Hops> row(Vertex u) const {
    return {d_.data() + std::size_t{u} * n_, n_};
  }

  /// Largest finite entry (0 for the empty graph).
  Hops max_finite() const;

  bool connected() const;

 private:
  friend DistMatrix all_pairs_distances(const Graph& g);

  std::size_t n_ = 0;
  std::vector<Hops> d_;
};

/// Hop distance from s to every vertex. Throws InputError if s >= n.
std::vector<Hops> bfs_distances(const Graph& g, Vertex s);

DistMatrix all_pairs_distances(const Graph& g);

/// Throws DomainError when g is disconnected.
Hops diameter(const Graph& g);
Hops diameter(const DistMatrix& dist);

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

struct BipartiteCheck {
  bool bipartite = false;
  /// 0/1 color per vertex when bipartite.
  std::vector<std::uint8_t> coloring;
  /// Simple cycle of odd length when not bipartite; the last vertex is
  /// adjacent to the first.
  std::vector<Vertex> odd_cycle;
};

BipartiteCheck check_bipartite(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace isopath
