#include <doctest.h>

#include "isopath/generators.hpp"
#include "isopath/graph.hpp"
#include "isopath/reduction.hpp"
#include "isopath/verify.hpp"
#include "oracle.hpp"

using namespace isopath;

namespace {

std::vector<Hops> row_of(const DistMatrix& d, Vertex u) {
  auto r = d.row(u);
  return {r.begin(), r.end()};
}

// All generated graphs with at most 64 vertices used by the invariant checks.
std::vector<Graph> small_family_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 9; ++n) out.push_back(path_graph(n));
  for (std::size_t n = 3; n <= 9; ++n) out.push_back(cycle_graph(n));
  for (std::size_t l = 1; l <= 6; ++l) out.push_back(star_graph(l));
  out.push_back(grid_graph({3, 3}));
  out.push_back(grid_graph({2, 3, 4}));
  out.push_back(cylinder_graph(4, 5));
  out.push_back(torus_graph({4, 4}));
  out.push_back(torus_graph({3, 5}));
  out.push_back(hypercube_graph(4));
  out.push_back(butterfly_graph(2));
  out.push_back(benes_graph(2));
  out.push_back(cartesian_product(path_graph(4), cycle_graph(3)));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    out.push_back(random_tree(12, seed));
    out.push_back(random_connected_graph(10, seed));
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction rejects malformed edge sets") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {NameLabel{"a"}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {NameLabel{"a"}, NameLabel{"a"}}), InputError);

  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("labels print and parse back") {
  for (const Label& l : {Label{CoordLabel{{0, 12, 3}}}, Label{LevelLabel{0b0110, 4, 3}},
                         Label{FactorLabel{7, 2}}, Label{NameLabel{"z"}}}) {
    CHECK(parse_label(to_string(l)) == l);
  }
  CHECK(to_string(LevelLabel{0b0110, 4, 3}) == "<0110,3>");
  CHECK_THROWS_AS(parse_label("(1,x)"), InputError);
  CHECK_THROWS_AS(parse_label("<012,1>"), InputError);
}

TEST_CASE("bfs_distances") {
  CHECK(bfs_distances(path_graph(3), 0) == std::vector<Hops>{0, 1, 2});
  CHECK(bfs_distances(cycle_graph(5), 0) == std::vector<Hops>{0, 1, 2, 2, 1});
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(bfs_distances(two_edges, 0) == std::vector<Hops>{0, 1, kUnreachable, kUnreachable});
  CHECK_THROWS_AS(bfs_distances(two_edges, 4), InputError);
}

TEST_CASE("all_pairs_distances spot values") {
  auto grid = all_pairs_distances(grid_graph({3, 3}));
  CHECK(grid(0, 8) == 4);
  auto torus = all_pairs_distances(torus_graph({4, 4}));
  CHECK(torus(0, 2 * 4 + 2) == 4);
  auto star = all_pairs_distances(star_graph(4));
  CHECK(star(1, 3) == 2);
  Graph two_edges(4, {{0, 1}, {2, 3}});
  auto d = all_pairs_distances(two_edges);
  CHECK_FALSE(d.distance(0, 2).has_value());
  CHECK(d.distance(2, 3) == 1U);
}

TEST_CASE("diameter") {
  CHECK(diameter(path_graph(5)) == 4);
  CHECK(diameter(cycle_graph(6)) == 3);
  // Floyd-Warshall over the 20-vertex BN(2) gives 4.
  CHECK(oracle::floyd_warshall(benes_graph(2))[0].size() == 20);
  CHECK(diameter(benes_graph(2)) == 4);
  CHECK_THROWS_AS(diameter(Graph(4, {{0, 1}, {2, 3}})), DomainError);
  CHECK_THROWS_AS(diameter(all_pairs_distances(Graph(2))), DomainError);
}

TEST_CASE("diameter closed forms") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(diameter(path_graph(n)) == n - 1);
  for (std::size_t n = 3; n <= 12; ++n) CHECK(diameter(cycle_graph(n)) == n / 2);
  for (std::vector<std::size_t> dims : {std::vector<std::size_t>{2, 3}, {4, 4}, {1, 5}, {2, 2, 3},
                                        {3, 2, 2, 2}}) {
    std::size_t expected = 0;
    for (auto d : dims) expected += d - 1;
    CHECK(diameter(grid_graph(dims)) == expected);
  }
}

TEST_CASE("bipartiteness with witnesses") {
  CHECK(is_bipartite(grid_graph({3, 4})));
  CHECK(is_bipartite(grid_graph({2, 2, 3})));

  auto c5 = check_bipartite(cycle_graph(5));
  REQUIRE_FALSE(c5.bipartite);
  CHECK(c5.odd_cycle.size() == 5);

  const Graph p4 = path_graph(4);
  auto ok = check_bipartite(p4);
  REQUIRE(ok.bipartite);
  for (const auto& e : p4.edges()) CHECK(ok.coloring[e.u] != ok.coloring[e.v]);

  // The reduced graph of P2 contains the triangle 0-1-z.
  auto reduced = reduce(path_graph(2)).reduced;
  CHECK_FALSE(is_bipartite(reduced));
}

TEST_CASE("odd-cycle witnesses are genuine odd cycles") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_connected_graph(9, seed);
    auto check = check_bipartite(g);
    if (check.bipartite) {
      for (const auto& e : g.edges()) CHECK(check.coloring[e.u] != check.coloring[e.v]);
      continue;
    }
    const auto& c = check.odd_cycle;
    REQUIRE(c.size() % 2 == 1);
    std::set<Vertex> distinct(c.begin(), c.end());
    CHECK(distinct.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
  }
}

TEST_CASE("distance matrix invariants on generated graphs") {
  for (const auto& g : small_family_corpus()) {
    REQUIRE(g.order() <= 64);
    const auto d = all_pairs_distances(g);
    const auto ref = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK(d(u, u) == 0);
      CHECK(row_of(d, u) == bfs_distances(g, u));
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.adjacent(u, v));
        CHECK(d(u, v) == ref[u][v]);
        for (Vertex w = 0; w < g.order(); ++w) {
          if (d.reachable(u, v) && d.reachable(v, w)) CHECK(d(u, w) <= d(u, v) + d(v, w));
        }
      }
    }
  }
}

TEST_CASE("connected components") {
  Graph g(5, {{0, 3}, {1, 4}});
  auto comps = connected_components(g);
  CHECK(comps == std::vector<std::vector<Vertex>>{{0, 3}, {1, 4}, {2}});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("induced subgraph keeps labels") {
  Graph g = grid_graph({2, 2});
  Vertex keep[] = {1, 3};
  Graph sub = induced_subgraph(g, keep);
  CHECK(sub.order() == 2);
  CHECK(sub.size() == 1);
  CHECK(sub.label(0) == g.label(1));
}
