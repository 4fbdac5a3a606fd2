#pragma once

// Graph families: paths, cycles, stars, complete bipartite graphs, grids,
// cylinders, tori, hypercubes, butterflies, Benes networks, Cartesian
// products, and seeded random trees / bipartite graphs.
//
// Vertex numbering conventions:
//   lattice families (grid, cylinder, torus, hypercube): row-major over the
//     coordinate tuple, last coordinate fastest; label "(c0,...,c{r-1})".
//   butterfly / Benes: <w, level> has index level * 2^r + w; label "<w,level>".
//   cartesian_product(g, h): (a, b) has index a * |V(h)| + b; label "[a|b]".
//   star(l): center 0, leaves 1..l.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isopath/graph.hpp"

namespace isopath {

enum class Family {
  Path,
  Cycle,
  Star,
  CompleteBipartite,
  TreeRandom,
  BipartiteRandom,
  Grid,
  Cylinder,
  Torus,
  Hypercube,
  Butterfly,
  Benes,
  Product,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Parameters per family:
///   path n | cycle n (n >= 3) | star l | complete_bipartite a b
///   tree_random n | bipartite_random a b (edge probability in `probability`)
///   grid d1..dr | cylinder r s (P_r x C_s) | torus d1..dr (each >= 3)
///   hypercube r | butterfly r | benes r
///   product: no params, exactly two `factors`.
/// Random families require `seed`.
struct FamilySpec {
  Family family = Family::Path;
  std::vector<std::int64_t> params;
  std::optional<std::uint64_t> seed;
  double probability = 0.5;
  std::vector<FamilySpec> factors;
};

/// Throws InputError when `spec` violates the per-family constraints.
void check_spec(const FamilySpec& spec);

/// Short human-readable name, e.g. "grid(3,3)" or "product(path(4),cycle(3))".
std::string describe(const FamilySpec& spec);

/// Throws InputError on invalid specs.
Graph generate(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Product of paths (wrap = false) or cycles (wrap = true) per dimension.
Graph lattice_graph(const std::vector<std::size_t>& dims, const std::vector<bool>& wrap);
Graph grid_graph(const std::vector<std::size_t>& dims);
Graph cylinder_graph(std::size_t r, std::size_t s);
Graph torus_graph(const std::vector<std::size_t>& dims);
Graph hypercube_graph(std::size_t r);

/// BF(r): levels 0..r; <w,i> ~ <w',i+1> iff w' == w or w' == w with bit i flipped.
Graph butterfly_graph(std::size_t r);

/// BN(r): two copies of BF(r) with their level-r vertices identified; the
/// second copy's levels are renumbered 2r..r, so levels run 0..2r.
Graph benes_graph(std::size_t r);

Graph cartesian_product(const Graph& g, const Graph& h);

enum class ProductFactor { First, Second };

/// Which factor the product edge {u, v} moves in. Throws InputError when the
/// graph lacks product labels or {u, v} is not a product edge.
ProductFactor edge_factor(const Graph& product, Vertex u, Vertex v);

/// Parts 0..a-1 and a..a+b-1. Pairs (i, j) are visited with i ascending then
/// j ascending; each draws one mt19937_64 output x and the edge is kept iff
/// (x >> 11) * 2^-53 < p.
Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);

/// Decodes a Pruefer sequence of n - 2 entries, entry k being the k-th
/// mt19937_64(seed) output modulo n. Leaves are consumed smallest first.
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace isopath
