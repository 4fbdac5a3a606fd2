#include "isopath/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>

#include "isopath/io.hpp"

namespace isopath {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxExhaustiveOrder = 7;
constexpr std::size_t kTreeCount = 50;
constexpr std::uint64_t kTreeSeedBase = 1000;

FamilySpec spec(Family family, std::vector<std::int64_t> params) {
  FamilySpec s;
  s.family = family;
  s.params = std::move(params);
  return s;
}

FamilySpec product(FamilySpec a, FamilySpec b) {
  FamilySpec s;
  s.family = Family::Product;
  s.factors = {std::move(a), std::move(b)};
  return s;
}

Claim exactly(std::size_t v) { return {v, v}; }

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void add_grids(std::vector<VerifySuiteEntry>& out) {
  for (std::int64_t r : {2, 3, 4}) {
    out.push_back({"grids", spec(Family::Grid, {r, r}), exactly(ceil_div(2 * r, 3)), std::nullopt,
                   "isometric path cover number of the r x r grid is ceil(2r/3)"});
  }
  const std::string corollary = "r x s grid: cover = partition = s when r >= s(s-1)";
  for (std::int64_t r = 2; r <= 6; ++r) {
    out.push_back({"grids", spec(Family::Grid, {r, 2}), exactly(2), exactly(2), corollary});
  }
  out.push_back({"grids", spec(Family::Grid, {6, 3}), exactly(3), exactly(3), corollary});
}

void add_cylinders(std::vector<VerifySuiteEntry>& out, bool extended) {
  const std::string theorem = "cylinder P_r x C_s: cover = partition = s when r >= floor(s/2) s";
  for (std::int64_t r = 3; r <= 5; ++r) {
    out.push_back({"cylinders", spec(Family::Cylinder, {r, 3}), exactly(3), exactly(3), theorem});
  }
  if (extended) {
    out.push_back({"cylinders", spec(Family::Cylinder, {8, 4}), exactly(4), exactly(4), theorem, true});
  }
}

void add_tori(std::vector<VerifySuiteEntry>& out, bool extended) {
  const std::string theorem = "r x r torus: cover = partition = r for even r, r or r+1 for odd r";
  out.push_back({"tori", spec(Family::Torus, {4, 4}), exactly(4), exactly(4), theorem});
  out.push_back({"tori", spec(Family::Torus, {3, 3}), Claim{3, 4}, Claim{3, 4}, theorem});
  if (extended) {
    out.push_back({"tori", spec(Family::Torus, {5, 5}), Claim{5, 6}, Claim{5, 6}, theorem, true});
  }
}

void add_benes(std::vector<VerifySuiteEntry>& out, bool extended) {
  const std::string theorem = "r-dimensional Benes network: cover = partition = 2^r";
  out.push_back({"benes", spec(Family::Benes, {1}), exactly(2), exactly(2), theorem});
  out.push_back({"benes", spec(Family::Benes, {2}), exactly(4), exactly(4), theorem});
  if (extended) {
    out.push_back({"benes", spec(Family::Benes, {3}), exactly(8), exactly(8), theorem, true});
  }
}

void add_hypercubes(std::vector<VerifySuiteEntry>& out) {
  const std::string theorem = "hypercube Q_r: cover = 2^(r - log2(r+1)) when r+1 is a power of 2";
  out.push_back({"hypercubes", spec(Family::Hypercube, {1}), exactly(1), std::nullopt, theorem});
  out.push_back({"hypercubes", spec(Family::Hypercube, {3}), exactly(2), std::nullopt, theorem});
}

void add_stars(std::vector<VerifySuiteEntry>& out) {
  for (std::int64_t l = 2; l <= 6; ++l) {
    out.push_back({"stars", spec(Family::Star, {l}), exactly(ceil_div(l, 2)), exactly(l - 1),
                   "star K_{1,l}: cover = ceil(l/2), partition = l - 1"});
  }
}

void add_trees(std::vector<VerifySuiteEntry>& out) {
  for (std::size_t i = 0; i < kTreeCount; ++i) {
    FamilySpec s = spec(Family::TreeRandom, {static_cast<std::int64_t>(3 + i % 10)});
    s.seed = kTreeSeedBase + i;
    Graph tree = generate(s);
    std::size_t leaves = 0;
    for (Vertex v = 0; v < tree.order(); ++v) leaves += tree.degree(v) == 1 ? 1 : 0;
    out.push_back({"trees", s, exactly(ceil_div(leaves, 2)), std::nullopt,
                   "tree with l leaves: cover = ceil(l/2)"});
  }
}

void add_products(std::vector<VerifySuiteEntry>& out) {
  for (std::int64_t r : {2, 4, 6}) {
    out.push_back({"products", product(spec(Family::Path, {r}), spec(Family::Path, {2})), exactly(2),
                   exactly(2), "P_r x G: cover = partition = |V(G)| when r >= diam(G) |V(G)|"});
  }
  const std::vector<std::pair<FamilySpec, std::size_t>> factors = {
      {spec(Family::Path, {2}), 2},
      {spec(Family::Path, {3}), 3},
      {spec(Family::Cycle, {3}), 3},
      {spec(Family::Cycle, {4}), 4},
  };
  for (const auto& [factor, order] : factors) {
    for (std::int64_t r = 1; r <= 8; ++r) {
      out.push_back({"products", product(spec(Family::Path, {r}), factor), Claim{1, order},
                     Claim{1, order}, "P_r x G: cover <= partition <= |V(G)|"});
    }
  }
}

void check_report(const Graph& g, const SolveReport& report, const char* what, VerifyResult& result) {
  if (auto v = validate(g, report.certificate); !v) {
    result.certificates_ok = false;
    result.detail += std::string(what) + " certificate invalid: " + v.message + "; ";
  }
  if (report.lower_bound > report.value || result.lower_bound > report.value) {
    result.bound_chain_ok = false;
    result.detail += std::string(what) + " below the lower bound; ";
  }
}

}  // namespace

std::string Claim::text() const {
  if (lo == hi) return std::to_string(lo);
  if (lo <= 1) return "<=" + std::to_string(hi);
  return "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Mismatch:
      return "MISMATCH";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "unknown";
}

std::vector<std::string> suite_names() {
  return {"grids", "cylinders", "tori", "benes", "hypercubes", "stars", "trees", "products", "all"};
}

std::vector<VerifySuiteEntry> suite_entries(std::string_view suite, bool extended) {
  std::vector<VerifySuiteEntry> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("grids")) add_grids(out);
  if (want("cylinders")) add_cylinders(out, extended);
  if (want("tori")) add_tori(out, extended);
  if (want("benes")) add_benes(out, extended);
  if (want("hypercubes")) add_hypercubes(out);
  if (want("stars")) add_stars(out);
  if (want("trees")) add_trees(out);
  if (want("products")) add_products(out);
  if (!known) throw InputError("unknown verification suite '" + std::string(suite) + "'");
  return out;
}

VerifyResult run_entry(const VerifySuiteEntry& entry, const Limits& limits) {
  VerifyResult result;
  result.entry = entry;
  const Graph g = generate(entry.family);
  result.vertices = g.order();
  result.lower_bound = lower_bound(g);

  bool optimal = true;
  bool claims_hold = true;
  if (entry.cover) {
    result.cover = min_cover(g, limits);
    check_report(g, *result.cover, "cover", result);
    optimal = optimal && result.cover->status == SolveStatus::Optimal;
    claims_hold = claims_hold && entry.cover->accepts(result.cover->value);
  }
  if (entry.partition) {
    result.partition = min_partition(g, limits);
    check_report(g, *result.partition, "partition", result);
    optimal = optimal && result.partition->status == SolveStatus::Optimal;
    claims_hold = claims_hold && entry.partition->accepts(result.partition->value);
  }
  if (result.cover && result.partition && optimal &&
      result.cover->value > result.partition->value) {
    result.bound_chain_ok = false;
    result.detail += "cover exceeds partition; ";
  }
  if (!optimal) {
    result.verdict = Verdict::Inconclusive;
    result.detail += "solver limit reached; ";
  } else if (claims_hold && result.bound_chain_ok && result.certificates_ok) {
    result.verdict = Verdict::Pass;
  } else {
    result.verdict = Verdict::Mismatch;
  }
  return result;
}

void for_each_connected_bipartite(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0 || n > kMaxExhaustiveOrder) {
    throw InputError("exhaustive bipartite enumeration supports 1..7 vertices");
  }
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> adj(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::fill(adj.begin(), adj.end(), 0U);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        adj[pairs[i].u] |= 1U << pairs[i].v;
        adj[pairs[i].v] |= 1U << pairs[i].u;
      }
    }
    // Breadth-first layers from vertex 0: connected iff every vertex is
    // reached, bipartite iff no edge joins two vertices of one layer.
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    bool odd = false;
    while (frontier != 0 && !odd) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        auto v = static_cast<unsigned>(std::countr_zero(f));
        if (adj[v] & frontier) odd = true;
        next |= adj[v];
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (odd || seen != full) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    visit(Graph(n, std::move(edges)));
  }
}

Graph random_connected_bipartite(std::size_t max_n, std::uint64_t seed) {
  if (max_n == 0) throw InputError("random_connected_bipartite: max_n must be >= 1");
  if (max_n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  while (true) {
    const std::size_t n = 2 + rng() % (max_n - 1);
    const std::size_t a = 1 + rng() % (n - 1);
    const double p = 0.25 + 0.5 * unit_interval(rng);
    Graph g = random_bipartite(a, n - a, p, rng());
    if (is_connected(g)) return g;
  }
}

Graph random_connected_graph(std::size_t max_n, std::uint64_t seed) {
  if (max_n == 0) throw InputError("random_connected_graph: max_n must be >= 1");
  std::mt19937_64 rng(seed);
  while (true) {
    const std::size_t n = 1 + rng() % max_n;
    const double p = 0.2 + 0.6 * unit_interval(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (unit_interval(rng) < p) edges.push_back({u, v});
      }
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

std::vector<ReductionSweepRow> run_reduction_sweep(std::size_t exhaustive_max_n,
                                                   std::size_t random_count,
                                                   std::size_t random_max_n, const Limits& limits) {
  std::vector<ReductionSweepRow> rows;
  auto check = [&](ReductionSweepRow& row, const Graph& g) {
    ++row.graphs;
    auto report = check_equivalence(g, limits);
    switch (report.status) {
      case EquivalenceStatus::Confirmed:
        ++row.confirmed;
        return;
      case EquivalenceStatus::Mismatch:
        ++row.mismatches;
        break;
      case EquivalenceStatus::Inconclusive:
        ++row.inconclusive;
        break;
    }
    if (row.first_failure.empty()) row.first_failure = format_graph(g);
  };
  for (std::size_t n = 1; n <= exhaustive_max_n; ++n) {
    ReductionSweepRow row;
    row.corpus = "all connected bipartite, n=" + std::to_string(n);
    auto start = Clock::now();
    for_each_connected_bipartite(n, [&](const Graph& g) { check(row, g); });
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  if (random_count > 0) {
    ReductionSweepRow row;
    row.corpus = std::to_string(random_count) + " random connected bipartite, n<=" +
                 std::to_string(random_max_n);
    auto start = Clock::now();
    for (std::size_t i = 0; i < random_count; ++i) {
      check(row, random_connected_bipartite(random_max_n, i + 1));
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace isopath
