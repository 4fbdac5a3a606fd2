// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every solve goes through `solve_checked`, which also feeds the
// bound-chain and certificate criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isopath/generators.hpp"
#include "isopath/isometric.hpp"
#include "isopath/reduction.hpp"
#include "isopath/solver.hpp"
#include "isopath/verify.hpp"
#include "oracle.hpp"

using namespace isopath;

namespace {

struct Ledger {
  std::size_t solves = 0;
  std::size_t chain_violations = 0;
  std::size_t invalid_certificates = 0;
  std::string first_problem;

  void note(const std::string& what) {
    if (first_problem.empty()) first_problem = what;
  }
};

Ledger ledger;

struct Pair {
  SolveReport cover;
  SolveReport partition;
  bool optimal() const {
    return cover.status == SolveStatus::Optimal && partition.status == SolveStatus::Optimal;
  }
};

void record(const Graph& g, const SolveReport& r, const std::string& name) {
  ++ledger.solves;
  if (r.lower_bound > r.value) {
    ++ledger.chain_violations;
    ledger.note(name + ": lower bound above value");
  }
  if (auto v = validate(g, r.certificate); !v) {
    ++ledger.invalid_certificates;
    ledger.note(name + ": " + v.message);
  }
}

Pair solve_both(const Graph& g, double seconds, const std::string& name) {
  Limits limits;
  limits.time_limit_seconds = seconds;
  Pair p{min_cover(g, limits), min_partition(g, limits)};
  record(g, p.cover, name + " cover");
  record(g, p.partition, name + " partition");
  if (p.cover.value > p.partition.value) {
    ++ledger.chain_violations;
    ledger.note(name + ": cover above partition");
  }
  if (is_connected(g) && lower_bound(g) > p.cover.value) {
    ++ledger.chain_violations;
    ledger.note(name + ": diameter bound above cover");
  }
  return p;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Checks cover and partition against expected values, solved optimally
// within `seconds`.
void expect(Outcome& o, const std::string& name, const Graph& g, double seconds,
            std::optional<std::size_t> cover, std::optional<std::size_t> partition) {
  Pair p = solve_both(g, seconds, name);
  if (!p.optimal()) {
    o.fail(name + " not solved within " + std::to_string(static_cast<int>(seconds)) + " s");
    return;
  }
  if (cover && p.cover.value != *cover) {
    o.fail(name + " cover " + std::to_string(p.cover.value) + " != " + std::to_string(*cover));
  }
  if (partition && p.partition.value != *partition) {
    o.fail(name + " partition " + std::to_string(p.partition.value) +
           " != " + std::to_string(*partition));
  }
}

std::string name_of(const char* family, std::initializer_list<std::size_t> params) {
  std::string s = std::string(family) + "(";
  bool first = true;
  for (auto p : params) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + ")";
}

Outcome grid_covers() {
  Outcome o;
  expect(o, "grid(2,2)", grid_graph({2, 2}), 60, 2, std::nullopt);
  expect(o, "grid(3,3)", grid_graph({3, 3}), 60, 2, std::nullopt);
  expect(o, "grid(4,4)", grid_graph({4, 4}), 60, 3, std::nullopt);
  return o;
}

Outcome grid_corollary() {
  Outcome o;
  for (std::size_t r = 2; r <= 6; ++r) expect(o, name_of("grid", {r, 2}), grid_graph({r, 2}), 120, 2, 2);
  expect(o, "grid(6,3)", grid_graph({6, 3}), 120, 3, 3);
  return o;
}

Outcome cylinders() {
  Outcome o;
  for (std::size_t r = 3; r <= 5; ++r) {
    expect(o, name_of("cylinder", {r, 3}), cylinder_graph(r, 3), 120, 3, 3);
  }
  return o;
}

Outcome tori() {
  Outcome o;
  expect(o, "torus(4,4)", torus_graph({4, 4}), 120, 4, 4);
  Graph t33 = torus_graph({3, 3});
  Pair p = solve_both(t33, 120, "torus(3,3)");
  if (!p.optimal()) {
    o.fail("torus(3,3) not solved within 120 s");
    return o;
  }
  const auto paths = oracle::isometric_paths(t33);
  const std::size_t cover = oracle::min_cover(9, paths);
  const std::size_t partition = oracle::min_partition(9, paths);
  if (p.cover.value != cover || p.partition.value != partition) o.fail("torus(3,3) disagrees with the oracle");
  for (std::size_t v : {p.cover.value, p.partition.value}) {
    if (v < 3 || v > 4) o.fail("torus(3,3) value outside {3,4}");
  }
  if (o.pass) {
    o.detail = "torus(3,3) cover " + std::to_string(p.cover.value) + ", partition " +
               std::to_string(p.partition.value);
  }
  return o;
}

Outcome benes() {
  Outcome o;
  expect(o, "benes(1)", benes_graph(1), 300, 2, 2);
  expect(o, "benes(2)", benes_graph(2), 300, 4, 4);
  return o;
}

Outcome stars_and_trees() {
  Outcome o;
  for (std::size_t l = 2; l <= 6; ++l) {
    expect(o, name_of("star", {l}), star_graph(l), 60, (l + 1) / 2, l - 1);
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 3 + i % 10;
    Graph t = random_tree(n, 1000 + i);
    std::size_t leaves = 0;
    for (Vertex v = 0; v < n; ++v) leaves += t.degree(v) == 1;
    expect(o, "tree_random(" + std::to_string(n) + ")#" + std::to_string(1000 + i), t, 60,
           (leaves + 1) / 2, std::nullopt);
  }
  return o;
}

Outcome hypercube() {
  Outcome o;
  expect(o, "Q3", hypercube_graph(3), 60, 2, std::nullopt);
  return o;
}

Outcome products() {
  Outcome o;
  for (std::size_t r : {2, 4, 6}) {
    expect(o, "P" + std::to_string(r) + "xK2", cartesian_product(path_graph(r), path_graph(2)), 120, 2, 2);
  }
  const std::vector<std::pair<std::string, Graph>> factors{
      {"K2", path_graph(2)}, {"P3", path_graph(3)}, {"C3", cycle_graph(3)}, {"C4", cycle_graph(4)}};
  for (const auto& [fname, h] : factors) {
    for (std::size_t r = 1; r <= 8; ++r) {
      const std::string name = "P" + std::to_string(r) + "x" + fname;
      Pair p = solve_both(cartesian_product(path_graph(r), h), 120, name);
      if (!p.optimal()) {
        o.fail(name + " not solved within 120 s");
      } else if (p.partition.value > h.order()) {
        o.fail(name + " partition " + std::to_string(p.partition.value) + " exceeds |V(G)|");
      }
    }
  }
  return o;
}

Outcome g_edges() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [r, h] : {std::pair{std::size_t{7}, cycle_graph(3)}, std::pair{std::size_t{6}, path_graph(3)}}) {
    Graph prod = cartesian_product(path_graph(r), h);
    const std::size_t limit = diameter(h);
    IsometricPathEnumerator it(prod, all_pairs_distances(prod));
    while (it.next()) {
      ++checked;
      std::size_t g_edges = 0;
      auto p = it.path();
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        g_edges += edge_factor(prod, p[i], p[i + 1]) == ProductFactor::Second;
      }
      if (g_edges > limit) o.fail("path with " + std::to_string(g_edges) + " G-edges");
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " isometric paths, zero violations";
  return o;
}

Outcome reduction() {
  Outcome o;
  Limits limits;
  limits.time_limit_seconds = 120;
  const auto start = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  auto check = [&](const Graph& g, const std::string& name) {
    ++graphs;
    EquivalenceReport r = check_equivalence(g, limits);
    const Graph reduced = reduce(g).reduced;
    record(g, r.kpath, name + " 3-path partition");
    record(reduced, r.partition, name + " reduced partition");
    if (r.status != EquivalenceStatus::Confirmed) {
      o.fail(name + ": " + std::string(to_string(r.status)) + " (k=" + std::to_string(r.k) +
             ", k'=" + std::to_string(r.k_prime) + ", diam=" + std::to_string(r.reduced_diameter) + ")");
    }
    if (r.reduced_diameter != 2 || r.k_prime != r.k + 1) o.fail(name + ": equivalence fails");
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t index = 0;
    for_each_connected_bipartite(n, [&](const Graph& g) {
      check(g, "bipartite n=" + std::to_string(n) + " #" + std::to_string(index++));
    });
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    check(random_connected_bipartite(10, seed), "random bipartite #" + std::to_string(seed));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > 1800) o.fail("sweep took " + std::to_string(seconds) + " s");
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs confirmed in " +
               std::to_string(static_cast<int>(seconds + 0.5)) + " s";
  }
  return o;
}

// Every generated-family instance on at most 8 vertices.
std::vector<std::pair<std::string, Graph>> small_family_instances() {
  std::vector<std::pair<std::string, Graph>> out;
  auto spec_of = [](Family f, std::vector<std::int64_t> params, std::optional<std::uint64_t> seed = {}) {
    FamilySpec spec;
    spec.family = f;
    spec.params = std::move(params);
    spec.seed = seed;
    return spec;
  };
  auto add = [&](const FamilySpec& spec) {
    Graph g = generate(spec);
    if (g.order() <= 8) out.emplace_back(describe(spec), std::move(g));
  };
  for (std::int64_t n = 1; n <= 8; ++n) add(spec_of(Family::Path, {n}));
  for (std::int64_t n = 3; n <= 8; ++n) add(spec_of(Family::Cycle, {n}));
  for (std::int64_t l = 1; l <= 7; ++l) add(spec_of(Family::Star, {l}));
  for (std::int64_t a = 1; a <= 7; ++a) {
    for (std::int64_t b = a; a + b <= 8; ++b) add(spec_of(Family::CompleteBipartite, {a, b}));
  }
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) add(spec_of(Family::TreeRandom, {n}, seed));
  }
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = a; a + b <= 8; ++b) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) add(spec_of(Family::BipartiteRandom, {a, b}, seed));
    }
  }
  for (std::int64_t a = 2; a <= 4; ++a) {
    for (std::int64_t b = 2; a * b <= 8; ++b) add(spec_of(Family::Grid, {a, b}));
  }
  add(spec_of(Family::Grid, {2, 2, 2}));
  for (std::int64_t r = 1; r <= 2; ++r) {
    for (std::int64_t s = 3; r * s <= 8; ++s) add(spec_of(Family::Cylinder, {r, s}));
  }
  for (std::int64_t n = 3; n <= 8; ++n) add(spec_of(Family::Torus, {n}));
  for (std::int64_t r = 1; r <= 3; ++r) add(spec_of(Family::Hypercube, {r}));
  add(spec_of(Family::Butterfly, {1}));
  add(spec_of(Family::Benes, {1}));
  const std::vector<FamilySpec> small{spec_of(Family::Path, {2}),  spec_of(Family::Path, {3}),
                                      spec_of(Family::Path, {4}),  spec_of(Family::Cycle, {3}),
                                      spec_of(Family::Cycle, {4}), spec_of(Family::Star, {2})};
  for (const auto& a : small) {
    for (const auto& b : small) {
      FamilySpec prod = spec_of(Family::Product, {});
      prod.factors = {a, b};
      add(prod);
    }
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto corpus = small_family_instances();
  const std::size_t families = corpus.size();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    corpus.emplace_back("random#" + std::to_string(seed), random_connected_graph(8, seed));
  }
  for (const auto& [name, g] : corpus) {
    Pair p = solve_both(g, 60, name);
    if (!p.optimal()) {
      o.fail(name + " not solved");
      continue;
    }
    const auto paths = oracle::isometric_paths(g);
    const std::size_t cover = g.order() == 0 ? 0 : oracle::min_cover(g.order(), paths);
    const std::size_t partition = g.order() == 0 ? 0 : oracle::min_partition(g.order(), paths);
    if (p.cover.value != cover) o.fail(name + ": cover disagrees with brute force");
    if (p.partition.value != partition) o.fail(name + ": partition disagrees with brute force");
  }
  if (o.pass) {
    o.detail = std::to_string(families) + " family instances + 200 random graphs, zero mismatches";
  }
  return o;
}

Outcome bound_chain() {
  Outcome o;
  if (ledger.chain_violations > 0) o.fail(std::to_string(ledger.chain_violations) + " bound-chain violations");
  if (ledger.invalid_certificates > 0) {
    o.fail(std::to_string(ledger.invalid_certificates) + " invalid certificates");
  }
  if (!o.pass) o.detail += "; first: " + ledger.first_problem;
  if (ledger.solves == 0) o.fail("no solves recorded");
  if (o.pass) o.detail = std::to_string(ledger.solves) + " solves checked";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"grid cover values", grid_covers},
      {"grid corollary", grid_corollary},
      {"cylinder values", cylinders},
      {"torus values", tori},
      {"Benes values", benes},
      {"star and tree values", stars_and_trees},
      {"hypercube Q3", hypercube},
      {"product values and upper bound", products},
      {"G-edge bound in products", g_edges},
      {"reduction correctness", reduction},
      {"oracle equivalence", oracle_equivalence},
      {"bound chain and certificates", bound_chain},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].second();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    if (o.pass && o.detail.empty()) o.detail = "exact match";
    std::printf("%s  %2zu  %-32s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds, o.detail.c_str());
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "OK", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
