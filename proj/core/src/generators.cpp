#include "isopath/generators.hpp"

#include <array>
#include <functional>
#include <queue>
#include <random>
#include <utility>

namespace isopath {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 13> kFamilyNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::TreeRandom, "tree_random"},
    {Family::BipartiteRandom, "bipartite_random"},
    {Family::Grid, "grid"},
    {Family::Cylinder, "cylinder"},
    {Family::Torus, "torus"},
    {Family::Hypercube, "hypercube"},
    {Family::Butterfly, "butterfly"},
    {Family::Benes, "benes"},
    {Family::Product, "product"},
}};

// BN(16) already has 2^16 * 33 vertices.
constexpr std::int64_t kMaxLevelDimension = 16;

void require(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) throw InputError(std::string(family_name(spec.family)) + ": " + what);
}

std::vector<std::size_t> as_sizes(const std::vector<std::int64_t>& params) {
  return {params.begin(), params.end()};
}

std::vector<Label> level_labels(std::size_t r, std::size_t levels) {
  std::vector<Label> labels;
  const std::size_t width = std::size_t{1} << r;
  labels.reserve(width * levels);
  for (std::size_t level = 0; level < levels; ++level) {
    for (std::size_t w = 0; w < width; ++w) {
      labels.emplace_back(LevelLabel{w, static_cast<unsigned>(r), static_cast<unsigned>(level)});
    }
  }
  return labels;
}

// Edges of BF(r) between levels i and i+1, with level i mapped through
// `level_of` and vertices indexed level * 2^r + w.
void add_butterfly_edges(std::size_t r, const std::function<std::size_t(std::size_t)>& level_of,
                         std::vector<Edge>& edges) {
  const std::size_t width = std::size_t{1} << r;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t w = 0; w < width; ++w) {
      auto at = [&](std::size_t word, std::size_t level) {
        return static_cast<Vertex>(level_of(level) * width + word);
      };
      edges.push_back({at(w, i), at(w, i + 1)});
      edges.push_back({at(w, i), at(w ^ (std::size_t{1} << i), i + 1)});
    }
  }
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

void check_spec(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto count_is = [&](std::size_t k) {
    require(p.size() == k, spec, "expected " + std::to_string(k) + " parameter(s)");
  };
  auto all_at_least = [&](std::int64_t lo) {
    for (auto v : p) require(v >= lo, spec, "parameters must be >= " + std::to_string(lo));
  };
  switch (spec.family) {
    case Family::Path:
    case Family::Star:
    case Family::TreeRandom:
      count_is(1);
      all_at_least(1);
      break;
    case Family::Cycle:
      count_is(1);
      all_at_least(3);
      break;
    case Family::CompleteBipartite:
      count_is(2);
      all_at_least(1);
      break;
    case Family::BipartiteRandom:
      count_is(2);
      all_at_least(1);
      require(spec.probability >= 0.0 && spec.probability <= 1.0, spec,
              "edge probability must lie in [0, 1]");
      break;
    case Family::Grid:
      require(!p.empty(), spec, "at least one dimension required");
      all_at_least(1);
      break;
    case Family::Cylinder:
      count_is(2);
      require(p[0] >= 1, spec, "path length must be >= 1");
      require(p[1] >= 3, spec, "cycle length must be >= 3");
      break;
    case Family::Torus:
      require(!p.empty(), spec, "at least one dimension required");
      all_at_least(3);
      break;
    case Family::Hypercube:
    case Family::Butterfly:
    case Family::Benes:
      count_is(1);
      all_at_least(1);
      require(p[0] <= kMaxLevelDimension, spec, "dimension too large");
      break;
    case Family::Product:
      require(p.empty(), spec, "product takes no parameters");
      require(spec.factors.size() == 2, spec, "exactly two factors required");
      for (const auto& f : spec.factors) check_spec(f);
      break;
  }
  if (spec.family == Family::TreeRandom || spec.family == Family::BipartiteRandom) {
    require(spec.seed.has_value(), spec, "random families require a seed");
  }
}

std::string describe(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += '(';
  if (spec.family == Family::Product) {
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      if (i > 0) out += ',';
      out += describe(spec.factors[i]);
    }
  } else {
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(spec.params[i]);
    }
  }
  out += ')';
  if (spec.seed) out += "#" + std::to_string(*spec.seed);
  return out;
}

Graph generate(const FamilySpec& spec) {
  check_spec(spec);
  const auto& p = spec.params;
  auto at = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
  switch (spec.family) {
    case Family::Path:
      return path_graph(at(0));
    case Family::Cycle:
      return cycle_graph(at(0));
    case Family::Star:
      return star_graph(at(0));
    case Family::CompleteBipartite:
      return complete_bipartite_graph(at(0), at(1));
    case Family::TreeRandom:
      return random_tree(at(0), *spec.seed);
    case Family::BipartiteRandom:
      return random_bipartite(at(0), at(1), spec.probability, *spec.seed);
    case Family::Grid:
      return grid_graph(as_sizes(p));
    case Family::Cylinder:
      return cylinder_graph(at(0), at(1));
    case Family::Torus:
      return torus_graph(as_sizes(p));
    case Family::Hypercube:
      return hypercube_graph(at(0));
    case Family::Butterfly:
      return butterfly_graph(at(0));
    case Family::Benes:
      return benes_graph(at(0));
    case Family::Product:
      return cartesian_product(generate(spec.factors[0]), generate(spec.factors[1]));
  }
  throw InputError("unknown family");
}

Graph path_graph(std::size_t n) { return lattice_graph({n}, {false}); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle: length must be >= 3");
  return lattice_graph({n}, {true});
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    }
  }
  return Graph(a + b, std::move(edges));
}

Graph lattice_graph(const std::vector<std::size_t>& dims, const std::vector<bool>& wrap) {
  if (dims.empty() || dims.size() != wrap.size()) {
    throw InputError("lattice: one wrap flag per dimension required");
  }
  std::size_t n = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] == 0) throw InputError("lattice: dimensions must be >= 1");
    if (wrap[k] && dims[k] < 3) throw InputError("lattice: cyclic dimensions must be >= 3");
    n *= dims[k];
  }
  // stride[k] = product of dims after k (row-major, last coordinate fastest)
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t k = dims.size() - 1; k > 0; --k) stride[k - 1] = stride[k] * dims[k];

  std::vector<Edge> edges;
  std::vector<Label> labels;
  labels.reserve(n);
  std::vector<int> coord(dims.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < dims.size(); ++k) {
      coord[k] = static_cast<int>((v / stride[k]) % dims[k]);
    }
    labels.emplace_back(CoordLabel{coord});
    for (std::size_t k = 0; k < dims.size(); ++k) {
      auto c = static_cast<std::size_t>(coord[k]);
      if (c + 1 < dims[k]) {
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + stride[k])});
      } else if (wrap[k]) {
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v - c * stride[k])});
      }
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Graph grid_graph(const std::vector<std::size_t>& dims) {
  return lattice_graph(dims, std::vector<bool>(dims.size(), false));
}

Graph cylinder_graph(std::size_t r, std::size_t s) { return lattice_graph({r, s}, {false, true}); }

Graph torus_graph(const std::vector<std::size_t>& dims) {
  return lattice_graph(dims, std::vector<bool>(dims.size(), true));
}

Graph hypercube_graph(std::size_t r) {
  if (r == 0) throw InputError("hypercube: dimension must be >= 1");
  return grid_graph(std::vector<std::size_t>(r, 2));
}

Graph butterfly_graph(std::size_t r) {
  if (r == 0) throw InputError("butterfly: dimension must be >= 1");
  std::vector<Edge> edges;
  add_butterfly_edges(r, [](std::size_t level) { return level; }, edges);
  const std::size_t levels = r + 1;
  return Graph((std::size_t{1} << r) * levels, std::move(edges), level_labels(r, levels));
}

Graph benes_graph(std::size_t r) {
  if (r == 0) throw InputError("benes: dimension must be >= 1");
  std::vector<Edge> edges;
  // First butterfly keeps its levels; the second is mirrored so that its
  // level r lands on (and is identified with) the first one's level r.
  add_butterfly_edges(r, [](std::size_t level) { return level; }, edges);
  add_butterfly_edges(r, [r](std::size_t level) { return 2 * r - level; }, edges);
  const std::size_t levels = 2 * r + 1;
  return Graph((std::size_t{1} << r) * levels, std::move(edges), level_labels(r, levels));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw InputError("cartesian_product: empty factor");
  const std::size_t nh = h.order();
  const std::size_t n = g.order() * nh;
  auto id = [nh](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * nh + b); };
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.size() + nh * g.size());
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (const auto& e : h.edges()) edges.push_back({id(a, e.u), id(a, e.v)});
  }
  for (std::size_t b = 0; b < nh; ++b) {
    for (const auto& e : g.edges()) edges.push_back({id(e.u, b), id(e.v, b)});
  }
  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < nh; ++b) {
      labels.emplace_back(FactorLabel{static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

ProductFactor edge_factor(const Graph& product, Vertex u, Vertex v) {
  if (!product.has_labels()) throw InputError("graph carries no product labels");
  const auto* a = std::get_if<FactorLabel>(&product.label(u));
  const auto* b = std::get_if<FactorLabel>(&product.label(v));
  if (a == nullptr || b == nullptr) throw InputError("graph carries no product labels");
  if (!product.adjacent(u, v)) {
    throw InputError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  if (a->first == b->first) return ProductFactor::Second;
  if (a->second == b->second) return ProductFactor::First;
  throw InputError("edge moves in both factors; labels are not product labels");
}

Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_bipartite: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    }
  }
  return Graph(a + b, std::move(edges));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_tree: n must be >= 1");
  if (n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);

  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (auto c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex u = leaves.top();
  leaves.pop();
  edges.push_back({u, leaves.top()});
  return Graph(n, std::move(edges));
}

}  // namespace isopath
