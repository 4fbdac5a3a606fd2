#include "isopath/reduction.hpp"

#include <algorithm>
#include <span>

namespace isopath {

namespace {

std::string cycle_text(const std::vector<Vertex>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(cycle[i]);
  }
  return out;
}

}  // namespace

NotBipartiteError::NotBipartiteError(std::vector<Vertex> odd_cycle)
    : InputError("graph is not bipartite; odd cycle " + cycle_text(odd_cycle)),
      odd_cycle_(std::move(odd_cycle)) {}

ReducedInstance reduce(const Graph& g, bool force) {
  if (!force) {
    auto check = check_bipartite(g);
    if (!check.bipartite) throw NotBipartiteError(std::move(check.odd_cycle));
  }
  const auto n = static_cast<Vertex>(g.order());
  ReducedInstance inst;
  inst.original = g;
  inst.x = n;
  inst.y = n + 1;
  inst.z = n + 2;

  std::vector<Edge> edges = g.edges();
  edges.push_back({inst.x, inst.z});
  edges.push_back({inst.y, inst.z});
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, inst.z});

  std::vector<Label> labels;
  labels.reserve(n + 3);
  for (Vertex i = 0; i < n; ++i) {
    labels.push_back(g.has_labels() ? g.label(i) : Label{NameLabel{std::to_string(i)}});
  }
  labels.emplace_back(NameLabel{"x"});
  labels.emplace_back(NameLabel{"y"});
  labels.emplace_back(NameLabel{"z"});
  inst.reduced = Graph(n + 3, std::move(edges), std::move(labels));
  return inst;
}

Solution lift_partition(const ReducedInstance& inst, const Solution& partition) {
  Solution three_paths = partition;
  three_paths.kind = ProblemKind::KPathPartition;
  three_paths.max_vertices = 3;
  if (auto check = validate(inst.original, three_paths); !check) {
    throw InputError("not a 3-path partition: " + check.message);
  }
  Solution lifted;
  lifted.kind = ProblemKind::Partition;
  lifted.paths = partition.paths;
  lifted.paths.push_back({inst.x, inst.z, inst.y});
  return lifted;
}

DiametralForm classify_diametral(const ReducedInstance& inst, std::span<const Vertex> p) {
  if (p.size() != 3) return DiametralForm::Other;
  const Vertex a = std::min(p[0], p[2]);
  const Vertex b = std::max(p[0], p[2]);
  const Vertex mid = p[1];
  auto original = [&](Vertex v) { return v < inst.original.order(); };
  if (mid == inst.z) {
    if (a == inst.x && b == inst.y) return DiametralForm::XZY;
    if (original(a) && b == inst.x) return DiametralForm::IZX;
    if (original(a) && b == inst.y) return DiametralForm::IZY;
    if (original(a) && original(b) && !inst.original.adjacent(a, b)) return DiametralForm::IZJ;
  } else if (original(mid) && original(a) && original(b)) {
    return DiametralForm::IKJ;
  }
  return DiametralForm::Other;
}

std::string_view to_string(EquivalenceStatus status) {
  switch (status) {
    case EquivalenceStatus::Confirmed:
      return "Confirmed";
    case EquivalenceStatus::Mismatch:
      return "Mismatch";
    case EquivalenceStatus::Inconclusive:
      return "Inconclusive";
  }
  return "unknown";
}

EquivalenceReport check_equivalence(const Graph& g, const Limits& limits) {
  const ReducedInstance inst = reduce(g);
  EquivalenceReport report;

  const DistMatrix dist = all_pairs_distances(inst.reduced);
  report.reduced_diameter = diameter(dist);
  report.diameter_is_two = report.reduced_diameter == 2;

  EnumerationOptions options;
  options.max_vertices = report.reduced_diameter + 1;
  IsometricPathEnumerator it(inst.reduced, dist, std::move(options));
  while (it.next()) {
    auto p = it.path();
    if (p.size() == report.reduced_diameter + 1 &&
        classify_diametral(inst, p) == DiametralForm::Other) {
      report.unexpected_diametral.emplace_back(p.begin(), p.end());
    }
  }
  report.diametral_forms_ok = report.unexpected_diametral.empty();

  report.kpath = min_kpath_partition(g, 3, limits);
  report.partition = min_partition(inst.reduced, limits);
  report.k = report.kpath.value;
  report.k_prime = report.partition.value;
  report.lift_valid =
      static_cast<bool>(validate(inst.reduced, lift_partition(inst, report.kpath.certificate)));

  if (report.kpath.status != SolveStatus::Optimal ||
      report.partition.status != SolveStatus::Optimal) {
    report.status = EquivalenceStatus::Inconclusive;
    return report;
  }
  report.partition_matches = report.k_prime == report.k + 1;
  const bool all = report.partition_matches && report.diameter_is_two &&
                   report.diametral_forms_ok && report.lift_valid;
  report.status = all ? EquivalenceStatus::Confirmed : EquivalenceStatus::Mismatch;
  return report;
}

}  // namespace isopath
