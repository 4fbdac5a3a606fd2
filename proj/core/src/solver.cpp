#include "isopath/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <span>

namespace isopath {

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::uint64_t;
using CandidateId = std::uint32_t;

constexpr std::size_t kWordBits = 64;
constexpr std::uint64_t kClockCheckMask = 255;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::size_t popcount(std::span<const Word> bits) {
  std::size_t total = 0;
  for (Word w : bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

// (a & mask) is a subset of (b & mask)
bool subset_within(std::span<const Word> a, std::span<const Word> b, std::span<const Word> mask) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & mask[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool test_bit(std::span<const Word> bits, std::size_t v) {
  return ((bits[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
}

// Wall-clock and node budget shared by every component of one solve.
class Budget {
 public:
  explicit Budget(const Limits& limits) : limits_(limits), start_(Clock::now()) {}

  bool tick() {
    if (stopped_) return false;
    ++nodes_;
    if (nodes_ > limits_.node_limit) {
      stop(SolveStatus::NodeLimit);
    } else if ((nodes_ & kClockCheckMask) == 0 && elapsed() > limits_.time_limit_seconds) {
      stop(SolveStatus::TimeLimit);
    }
    return !stopped_;
  }

  bool stopped() const { return stopped_; }
  SolveStatus status() const { return status_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  void stop(SolveStatus status) {
    stopped_ = true;
    status_ = status;
  }

  Limits limits_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  SolveStatus status_ = SolveStatus::Optimal;
};

// Vertex sets of a fixed candidate list, one row of `words` per candidate.
class PathMasks {
 public:
  PathMasks(std::size_t n, const std::vector<Path>& paths)
      : words_(word_count(n)), bits_(paths.size() * words_, 0) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (Vertex v : paths[i]) bits_[i * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    }
  }

  std::span<const Word> operator[](std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t words() const { return words_; }

 private:
  std::size_t words_;
  std::vector<Word> bits_;
};

std::vector<std::vector<CandidateId>> index_by_vertex(std::size_t n,
                                                      const std::vector<Path>& candidates) {
  std::vector<std::vector<CandidateId>> containing(n);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (Vertex v : candidates[i]) containing[v].push_back(static_cast<CandidateId>(i));
  }
  return containing;
}

std::vector<Path> select(const std::vector<Path>& candidates, const std::vector<CandidateId>& ids) {
  std::vector<Path> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(candidates[id]);
  return out;
}

// Set cover over a fixed candidate family. Candidates must be sorted
// lexicographically; index order is the tie-break order.
class CoverSearch {
 public:
  CoverSearch(std::size_t n, const std::vector<Path>& candidates, std::size_t target, Budget& budget)
      : n_(n),
        candidates_(candidates),
        masks_(n, candidates),
        containing_(index_by_vertex(n, candidates)),
        target_(target),
        budget_(budget),
        uncovered_((n + 1) * masks_.words(), 0) {
    auto root = level(0);
    for (std::size_t v = 0; v < n; ++v) root[v / kWordBits] |= Word{1} << (v % kWordBits);
    seed_incumbent();
  }

  void run() {
    if (best_.size() > target_) search(0);
  }

  std::vector<Path> best() const { return select(candidates_, best_); }

 private:
  std::span<Word> level(std::size_t depth) {
    return {uncovered_.data() + depth * masks_.words(), masks_.words()};
  }

  // Greedy by newly covered vertices, ties to the smaller index.
  void seed_incumbent() {
    std::vector<Word> left(level(0).begin(), level(0).end());
    while (popcount(left) > 0) {
      std::size_t best_gain = 0;
      CandidateId pick = 0;
      for (std::size_t i = 0; i < candidates_.size(); ++i) {
        std::size_t gain = popcount_and(masks_[i], left);
        if (gain > best_gain) {
          best_gain = gain;
          pick = static_cast<CandidateId>(i);
        }
      }
      best_.push_back(pick);
      auto m = masks_[pick];
      for (std::size_t w = 0; w < left.size(); ++w) left[w] &= ~m[w];
    }
  }

  void search(std::size_t depth) {
    if (!budget_.tick()) return;
    auto uncovered = level(depth);
    const std::size_t remaining = popcount(uncovered);
    if (remaining == 0) {
      if (depth < best_.size()) best_ = chosen_;
      return;
    }
    if (depth + 1 >= best_.size()) return;

    std::size_t max_gain = 0;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      max_gain = std::max(max_gain, popcount_and(masks_[i], uncovered));
    }
    if (depth + ceil_div(remaining, max_gain) >= best_.size()) return;

    // Most constrained uncovered vertex.
    std::size_t pivot = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (test_bit(uncovered, v) &&
          (pivot == n_ || containing_[v].size() < containing_[pivot].size())) {
        pivot = v;
      }
    }

    std::vector<std::pair<std::size_t, CandidateId>> options;
    options.reserve(containing_[pivot].size());
    for (auto id : containing_[pivot]) options.emplace_back(popcount_and(masks_[id], uncovered), id);
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    // A candidate whose new coverage is contained in an earlier one's is
    // dominated.
    std::vector<CandidateId> kept;
    for (const auto& [gain, id] : options) {
      bool dominated = std::any_of(kept.begin(), kept.end(), [&](CandidateId other) {
        return subset_within(masks_[id], masks_[other], uncovered);
      });
      if (!dominated) kept.push_back(id);
    }

    for (auto id : kept) {
      auto next = level(depth + 1);
      auto m = masks_[id];
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = uncovered[w] & ~m[w];
      chosen_.push_back(id);
      search(depth + 1);
      chosen_.pop_back();
      if (best_.size() <= target_ || budget_.stopped()) return;
    }
  }

  std::size_t n_;
  const std::vector<Path>& candidates_;
  PathMasks masks_;
  std::vector<std::vector<CandidateId>> containing_;
  std::size_t target_;
  Budget& budget_;
  std::vector<Word> uncovered_;
  std::vector<CandidateId> chosen_;
  std::vector<CandidateId> best_;
};

// Exact cover of V by disjoint candidates. Every single vertex must be a
// candidate so that some partition always exists.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const std::vector<Path>& candidates, std::size_t max_size,
                  std::size_t target, Budget& budget)
      : g_(g),
        candidates_(candidates),
        masks_(g.order(), candidates),
        max_size_(max_size),
        target_(target),
        budget_(budget),
        unassigned_(masks_.words(), 0),
        seen_(g.order(), false) {
    containing_ = index_by_vertex(g.order(), candidates);
    for (auto& ids : containing_) {
      std::stable_sort(ids.begin(), ids.end(), [&](CandidateId a, CandidateId b) {
        return candidates_[a].size() > candidates_[b].size();
      });
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
      unassigned_[v / kWordBits] |= Word{1} << (v % kWordBits);
      // Singletons are the fallback incumbent.
      auto it = std::find_if(containing_[v].begin(), containing_[v].end(),
                             [&](CandidateId id) { return candidates_[id].size() == 1; });
      best_.push_back(*it);
    }
  }

  void run() {
    if (best_.size() > target_) search(0);
  }

  std::vector<Path> best() const { return select(candidates_, best_); }

 private:
  // Paths stay inside one component of the unassigned vertices, so each
  // component needs ceil(|C| / max_size) of them.
  std::size_t residual_bound() {
    std::size_t bound = 0;
    std::fill(seen_.begin(), seen_.end(), false);
    for (Vertex s = 0; s < g_.order(); ++s) {
      if (seen_[s] || !test_bit(unassigned_, s)) continue;
      queue_.assign(1, s);
      seen_[s] = true;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        for (Vertex w : g_.neighbors(queue_[head])) {
          if (!seen_[w] && test_bit(unassigned_, w)) {
            seen_[w] = true;
            queue_.push_back(w);
          }
        }
      }
      bound += ceil_div(queue_.size(), max_size_);
    }
    return bound;
  }

  void search(std::size_t depth) {
    if (!budget_.tick()) return;
    std::size_t pivot = g_.order();
    for (std::size_t w = 0; w < unassigned_.size(); ++w) {
      if (unassigned_[w] != 0) {
        pivot = w * kWordBits + static_cast<std::size_t>(std::countr_zero(unassigned_[w]));
        break;
      }
    }
    if (pivot == g_.order()) {
      if (depth < best_.size()) best_ = chosen_;
      return;
    }
    if (depth + residual_bound() >= best_.size()) return;

    for (auto id : containing_[pivot]) {
      auto m = masks_[id];
      bool fits = true;
      for (std::size_t w = 0; w < m.size() && fits; ++w) fits = (m[w] & ~unassigned_[w]) == 0;
      if (!fits) continue;
      for (std::size_t w = 0; w < m.size(); ++w) unassigned_[w] ^= m[w];
      chosen_.push_back(id);
      search(depth + 1);
      chosen_.pop_back();
      for (std::size_t w = 0; w < m.size(); ++w) unassigned_[w] ^= m[w];
      if (best_.size() <= target_ || budget_.stopped()) return;
    }
  }

  const Graph& g_;
  const std::vector<Path>& candidates_;
  PathMasks masks_;
  std::vector<std::vector<CandidateId>> containing_;
  std::size_t max_size_;
  std::size_t target_;
  Budget& budget_;
  std::vector<Word> unassigned_;
  std::vector<bool> seen_;
  std::vector<Vertex> queue_;
  std::vector<CandidateId> chosen_;
  std::vector<CandidateId> best_;
};

// Simple paths with at most k vertices, canonical orientation, lexicographic
// order.
std::vector<Path> bounded_simple_paths(const Graph& g, std::size_t k) {
  std::vector<Path> out;
  std::vector<bool> on_path(g.order(), false);
  Path path;
  std::function<void()> extend = [&]() {
    if (path.size() == 1 || path.back() > path.front()) out.push_back(path);
    if (path.size() == k) return;
    for (Vertex u : g.neighbors(path.back())) {
      if (on_path[u]) continue;
      on_path[u] = true;
      path.push_back(u);
      extend();
      path.pop_back();
      on_path[u] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on_path[s] = true;
    path.assign(1, s);
    extend();
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ComponentResult {
  std::vector<Path> paths;
  std::size_t lower_bound = 0;
};

// Runs `solve` on every connected component and stitches the certificates
// back into g's vertex ids.
SolveReport solve_by_components(
    const Graph& g, ProblemKind kind, std::size_t max_vertices, const Limits& limits,
    const std::function<ComponentResult(const Graph&, Budget&)>& solve) {
  Budget budget(limits);
  SolveReport report;
  report.certificate.kind = kind;
  report.certificate.max_vertices = max_vertices;
  for (const auto& comp : connected_components(g)) {
    Graph sub = induced_subgraph(g, comp);
    ComponentResult part = solve(sub, budget);
    report.lower_bound += part.lower_bound;
    for (auto& p : part.paths) {
      for (auto& v : p) v = comp[v];
      report.certificate.paths.push_back(canonical(std::move(p)));
    }
  }
  std::sort(report.certificate.paths.begin(), report.certificate.paths.end());
  report.value = report.certificate.paths.size();
  report.status = budget.stopped() ? budget.status() : SolveStatus::Optimal;
  report.nodes_explored = budget.nodes();
  report.elapsed_seconds = budget.elapsed();
  return report;
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Cover:
      return "cover";
    case ProblemKind::Partition:
      return "partition";
    case ProblemKind::KPathPartition:
      return "kpath";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "Optimal";
    case SolveStatus::TimeLimit:
      return "TimeLimit";
    case SolveStatus::NodeLimit:
      return "NodeLimit";
  }
  return "unknown";
}

std::size_t lower_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  return ceil_div(g.order(), std::size_t{diameter(g)} + 1);
}

SolveReport min_cover(const Graph& g, const Limits& limits) {
  return solve_by_components(g, ProblemKind::Cover, 0, limits, [](const Graph& sub, Budget& budget) {
    const DistMatrix dist = all_pairs_distances(sub);
    const std::size_t bound = ceil_div(sub.order(), std::size_t{diameter(dist)} + 1);
    auto candidates = maximal_isometric_paths(sub, dist);
    std::sort(candidates.begin(), candidates.end());
    CoverSearch search(sub.order(), candidates, bound, budget);
    search.run();
    return ComponentResult{search.best(), bound};
  });
}

SolveReport min_partition(const Graph& g, const Limits& limits, std::size_t max_path_vertices) {
  return solve_by_components(
      g, ProblemKind::Partition, max_path_vertices, limits,
      [max_path_vertices](const Graph& sub, Budget& budget) {
        const DistMatrix dist = all_pairs_distances(sub);
        std::size_t longest = std::size_t{diameter(dist)} + 1;
        if (max_path_vertices > 0) longest = std::min(longest, max_path_vertices);
        const std::size_t bound = ceil_div(sub.order(), longest);
        EnumerationOptions options;
        options.max_vertices = max_path_vertices;
        auto candidates = isometric_paths(sub, dist, std::move(options));
        std::sort(candidates.begin(), candidates.end());
        PartitionSearch search(sub, candidates, longest, bound, budget);
        search.run();
        return ComponentResult{search.best(), bound};
      });
}

SolveReport min_kpath_partition(const Graph& g, std::size_t k, const Limits& limits) {
  if (k == 0) throw InputError("k-path partition requires k >= 1");
  return solve_by_components(g, ProblemKind::KPathPartition, k, limits,
                             [k](const Graph& sub, Budget& budget) {
                               const std::size_t longest = std::min(k, sub.order());
                               const std::size_t bound = ceil_div(sub.order(), longest);
                               auto candidates = bounded_simple_paths(sub, k);
                               PartitionSearch search(sub, candidates, longest, bound, budget);
                               search.run();
                               return ComponentResult{search.best(), bound};
                             });
}

Solution greedy_cover(const Graph& g) {
  const DistMatrix dist = all_pairs_distances(g);
  Solution s;
  s.kind = ProblemKind::Cover;
  std::vector<bool> covered(g.order(), false);
  std::size_t left = g.order();
  while (left > 0) {
    // Enumeration order is lexicographic, so the first maximum wins ties.
    IsometricPathEnumerator it(g, dist);
    Path best;
    std::size_t best_gain = 0;
    while (it.next()) {
      auto p = it.path();
      auto gain = static_cast<std::size_t>(
          std::count_if(p.begin(), p.end(), [&](Vertex v) { return !covered[v]; }));
      if (gain > best_gain) {
        best_gain = gain;
        best.assign(p.begin(), p.end());
      }
    }
    for (Vertex v : best) covered[v] = true;
    left -= best_gain;
    s.paths.push_back(std::move(best));
  }
  return s;
}

Validation validate(const Graph& g, const Solution& s) {
  auto fail = [](std::string message) { return Validation{false, std::move(message)}; };
  const DistMatrix dist = all_pairs_distances(g);
  const std::size_t n = g.order();
  if (s.kind == ProblemKind::KPathPartition && s.max_vertices == 0) {
    return fail("k-path partition without a vertex cap");
  }
  std::vector<std::size_t> owner(n, s.paths.size());
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& p = s.paths[i];
    const std::string name = "path " + std::to_string(i);
    if (p.empty()) return fail(name + " is empty");
    for (Vertex v : p) {
      if (v >= n) return fail(name + " uses out-of-range vertex " + std::to_string(v));
    }
    if (s.max_vertices > 0 && p.size() > s.max_vertices) {
      return fail(name + " has " + std::to_string(p.size()) + " vertices, more than " +
                  std::to_string(s.max_vertices));
    }
    for (std::size_t j = 1; j < p.size(); ++j) {
      if (!g.adjacent(p[j - 1], p[j])) {
        return fail(name + ": " + std::to_string(p[j - 1]) + " and " + std::to_string(p[j]) +
                    " are not adjacent");
      }
    }
    std::vector<Vertex> sorted(p.begin(), p.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail(name + " repeats a vertex");
    }
    if (s.kind != ProblemKind::KPathPartition && dist(p.front(), p.back()) != p.size() - 1) {
      return fail(name + " is not isometric");
    }
    for (Vertex v : p) {
      if (owner[v] != s.paths.size() && s.kind != ProblemKind::Cover) {
        return fail("vertex " + std::to_string(v) + " appears in paths " +
                    std::to_string(owner[v]) + " and " + std::to_string(i));
      }
      owner[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] == s.paths.size()) return fail("vertex " + std::to_string(v) + " is not covered");
  }
  return {};
}

}  // namespace isopath
