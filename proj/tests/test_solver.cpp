#include <doctest.h>

#include "isopath/generators.hpp"
#include "isopath/solver.hpp"
#include "isopath/verify.hpp"
#include "oracle.hpp"

using namespace isopath;

namespace {

struct Frozen {
  std::string name;
  Graph g;
  std::size_t cover;
  std::size_t partition;
};

// Optima from the exhaustive oracle in oracle.hpp.
std::vector<Frozen> frozen_values() {
  return {
      {"P1", path_graph(1), 1, 1},
      {"P6", path_graph(6), 1, 1},
      {"C4", cycle_graph(4), 2, 2},
      {"C7", cycle_graph(7), 2, 2},
      {"K1,3", star_graph(3), 2, 2},
      {"K1,5", star_graph(5), 3, 4},
      {"K3,3", complete_bipartite_graph(3, 3), 2, 2},
      {"grid(3,3)", grid_graph({3, 3}), 2, 3},
      {"grid(4,4)", grid_graph({4, 4}), 3, 4},
      {"torus(3,3)", torus_graph({3, 3}), 3, 3},
      {"torus(4,4)", torus_graph({4, 4}), 4, 4},
      {"Q3", hypercube_graph(3), 2, 2},
  };
}

Solution make(ProblemKind kind, std::vector<Path> paths, std::size_t cap = 0) {
  Solution s;
  s.kind = kind;
  s.paths = std::move(paths);
  s.max_vertices = cap;
  return s;
}

void check_report(const Graph& g, const SolveReport& r) {
  CHECK(r.status == SolveStatus::Optimal);
  CHECK(r.value == r.certificate.paths.size());
  CHECK(r.lower_bound <= r.value);
  auto v = validate(g, r.certificate);
  CHECK_MESSAGE(v.ok, v.message);
}

}  // namespace

TEST_CASE("lower bound") {
  CHECK(lower_bound(path_graph(5)) == 1);
  CHECK(lower_bound(cycle_graph(6)) == 2);
  CHECK(lower_bound(grid_graph({3, 3})) == 2);
  CHECK(lower_bound(star_graph(3)) == 2);
  CHECK(lower_bound(benes_graph(3)) == 8);
  CHECK_THROWS_AS(lower_bound(Graph(2)), DomainError);
}

TEST_CASE("frozen optima") {
  for (const auto& f : frozen_values()) {
    CAPTURE(f.name);
    auto cover = min_cover(f.g);
    auto part = min_partition(f.g);
    check_report(f.g, cover);
    check_report(f.g, part);
    CHECK(cover.value == f.cover);
    CHECK(part.value == f.partition);
    CHECK(cover.certificate.kind == ProblemKind::Cover);
    CHECK(part.certificate.kind == ProblemKind::Partition);
  }
}

TEST_CASE("frozen optima agree with the oracle") {
  for (const auto& f : frozen_values()) {
    CAPTURE(f.name);
    const auto paths = oracle::isometric_paths(f.g);
    CHECK(oracle::min_cover(f.g.order(), paths) == f.cover);
    CHECK(oracle::min_partition(f.g.order(), paths) == f.partition);
  }
}

TEST_CASE("k-path partition") {
  auto c4 = min_kpath_partition(cycle_graph(4), 3);
  check_report(cycle_graph(4), c4);
  CHECK(c4.value == 2);
  CHECK(min_kpath_partition(cycle_graph(4), 4).value == 1);
  CHECK(min_kpath_partition(path_graph(7), 3).value == 3);
  CHECK(min_kpath_partition(star_graph(4), 3).value == 3);
  CHECK(min_kpath_partition(Graph(3), 1).value == 3);
  CHECK_THROWS_AS(min_kpath_partition(path_graph(3), 0), InputError);
}

TEST_CASE("capped isometric partition") {
  auto r = min_partition(path_graph(7), {}, 2);
  check_report(path_graph(7), r);
  CHECK(r.value == 4);
  for (const auto& p : r.certificate.paths) CHECK(p.size() <= 2);
  CHECK(min_partition(grid_graph({3, 3}), {}, 3).value == 3);
}

TEST_CASE("greedy cover") {
  Graph p5 = path_graph(5);
  CHECK(greedy_cover(p5).paths == std::vector<Path>{{0, 1, 2, 3, 4}});
  Graph star = star_graph(3);
  CHECK(greedy_cover(star).paths == std::vector<Path>{{1, 0, 2}, {0, 3}});
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_connected_graph(9, seed);
    auto s = greedy_cover(g);
    CHECK(validate(g, s).ok);
    CHECK(s.paths.size() >= min_cover(g).value);
  }
}

TEST_CASE("validator diagnostics") {
  Graph c4 = cycle_graph(4);
  CHECK(validate(c4, make(ProblemKind::Cover, {{0, 1, 2}, {2, 3, 0}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Cover, {{0, 1, 2}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Cover, {{0, 1, 2}, {}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Cover, {{0, 1, 2}, {3, 9}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Cover, {{0, 1, 2, 3}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Cover, {{0, 2}, {1, 3}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Cover, {{0, 1, 0}, {2, 3}})).ok);

  CHECK(validate(c4, make(ProblemKind::Partition, {{0, 1}, {2, 3}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Partition, {{0, 1, 2}, {2, 3}})).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::Partition, {{0, 1, 2}, {3}}, 2)).ok);

  CHECK(validate(c4, make(ProblemKind::KPathPartition, {{0, 1, 2, 3}}, 4)).ok);
  CHECK_FALSE(validate(c4, make(ProblemKind::KPathPartition, {{0, 1, 2, 3}}, 3)).ok);

  auto bad = validate(c4, make(ProblemKind::Partition, {{0, 1}}));
  CHECK_FALSE(bad.message.empty());
}

TEST_CASE("exact solvers agree with the oracle on random graphs") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Graph g = seed % 2 ? random_connected_graph(8, seed) : random_connected_bipartite(8, seed);
    CAPTURE(seed);
    const auto paths = oracle::isometric_paths(g);
    auto cover = min_cover(g);
    auto part = min_partition(g);
    check_report(g, cover);
    check_report(g, part);
    CHECK(cover.value == oracle::min_cover(g.order(), paths));
    CHECK(part.value == oracle::min_partition(g.order(), paths));
    CHECK(lower_bound(g) <= cover.value);
    CHECK(cover.value <= part.value);
    for (std::size_t k : {2, 3}) {
      auto kp = min_kpath_partition(g, k);
      check_report(g, kp);
      CHECK(kp.value == oracle::min_partition(g.order(), oracle::bounded_paths(g, k)));
    }
  }
}

TEST_CASE("disconnected graphs are solved per component") {
  // P3 on {0,1,2}, C4 on {3..6}, isolated 7.
  Graph g(8, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
  auto cover = min_cover(g);
  auto part = min_partition(g);
  check_report(g, cover);
  check_report(g, part);
  CHECK(cover.value == 4);
  CHECK(part.value == 4);
  CHECK(cover.lower_bound == 1 + 2 + 1);
  CHECK(min_kpath_partition(g, 3).value == 1 + 2 + 1);
  CHECK(min_cover(Graph(0)).value == 0);
}

TEST_CASE("repeated solves are identical") {
  Graph g = benes_graph(2);
  auto a = min_partition(g);
  auto b = min_partition(g);
  CHECK(a.certificate.paths == b.certificate.paths);
  CHECK(a.nodes_explored == b.nodes_explored);
  auto c = min_cover(g);
  auto d = min_cover(g);
  CHECK(c.certificate.paths == d.certificate.paths);
}

TEST_CASE("limits stop the search with a valid incumbent") {
  Limits tiny;
  tiny.node_limit = 1;
  Graph g = grid_graph({5, 5});
  auto part = min_partition(g, tiny);
  CHECK(part.status == SolveStatus::NodeLimit);
  CHECK(validate(g, part.certificate).ok);
  CHECK(part.value >= part.lower_bound);

  Graph t = torus_graph({5, 6});
  auto cover = min_cover(t, tiny);
  CHECK(cover.status == SolveStatus::NodeLimit);
  CHECK(validate(t, cover.certificate).ok);

  Limits no_time;
  no_time.time_limit_seconds = 0.0;
  Graph hard = grid_graph({5, 6});
  auto timed = min_partition(hard, no_time);
  CHECK(timed.status == SolveStatus::TimeLimit);
  CHECK(timed.nodes_explored < 1000);
  CHECK(validate(hard, timed.certificate).ok);
}
