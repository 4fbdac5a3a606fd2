#include "isopath/isometric.hpp"

#include <algorithm>

#include "isopath/generators.hpp"

namespace isopath {

bool is_isometric(const Graph& g, const DistMatrix& dist, std::span<const Vertex> p) {
  if (p.empty()) throw InputError("is_isometric: empty vertex sequence");
  for (Vertex v : p) {
    if (v >= g.order()) throw InputError("is_isometric: vertex " + std::to_string(v) + " out of range");
  }
  // Prefix form: d(p0, pi) = i for every i. Together with consecutive
  // adjacency this also forces distinct vertices.
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (dist(p.front(), p[i]) != i) return false;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

Path canonical(Path p) {
  if (!p.empty() && p.back() < p.front()) std::reverse(p.begin(), p.end());
  return p;
}

bool is_maximal_isometric(const Graph& g, const DistMatrix& dist, std::span<const Vertex> p) {
  const Vertex first = p.front();
  const Vertex last = p.back();
  const Hops extended = static_cast<Hops>(p.size());
  for (Vertex u : g.neighbors(last)) {
    if (dist(first, u) == extended) return false;
  }
  for (Vertex w : g.neighbors(first)) {
    if (dist(w, last) == extended) return false;
  }
  return true;
}

IsometricPathEnumerator::IsometricPathEnumerator(const Graph& g, const DistMatrix& dist,
                                                 EnumerationOptions options)
    : g_(g), dist_(dist), options_(std::move(options)) {
  if (dist_.order() != g_.order()) throw InputError("distance matrix does not match graph");
  if (!options_.allowed.empty() && options_.allowed.size() != g_.order()) {
    throw InputError("allowed mask size does not match graph");
  }
  path_.reserve(g_.order());
  cursor_.reserve(g_.order());
}

bool IsometricPathEnumerator::next() {
  while (advance()) {
    if (!options_.maximal_only || is_maximal_isometric(g_, dist_, path_)) {
      // path_ holds v0 < vk or a single vertex, already canonical
      return true;
    }
  }
  return false;
}

// One step of the DFS; returns true when path_ holds a fresh canonical path.
bool IsometricPathEnumerator::advance() {
  const std::size_t n = g_.order();
  while (true) {
    if (path_.empty()) {
      while (start_ < n && !allowed(start_)) ++start_;
      if (start_ >= n) return false;
      path_.push_back(start_);
      cursor_.push_back(0);
      return true;
    }
    const Vertex v0 = path_.front();
    const bool room = options_.max_vertices == 0 || path_.size() < options_.max_vertices;
    auto nbrs = g_.neighbors(path_.back());
    std::size_t& cur = cursor_.back();
    bool pushed = false;
    while (room && cur < nbrs.size()) {
      Vertex u = nbrs[cur++];
      if (allowed(u) && dist_(v0, u) == path_.size()) {
        path_.push_back(u);
        cursor_.push_back(0);
        pushed = true;
        break;
      }
    }
    if (pushed) {
      if (path_.back() > v0) return true;
      continue;
    }
    path_.pop_back();
    cursor_.pop_back();
    if (path_.empty()) ++start_;
  }
}

std::vector<Path> isometric_paths(const Graph& g, const DistMatrix& dist,
                                  EnumerationOptions options) {
  std::vector<Path> out;
  IsometricPathEnumerator it(g, dist, std::move(options));
  while (it.next()) out.emplace_back(it.path().begin(), it.path().end());
  return out;
}

std::vector<Path> maximal_isometric_paths(const Graph& g, const DistMatrix& dist) {
  EnumerationOptions options;
  options.maximal_only = true;
  return isometric_paths(g, dist, std::move(options));
}

FactorEdgeCounts factor_edge_count(const Graph& product, std::span<const Vertex> p) {
  FactorEdgeCounts counts;
  if (!product.has_labels() || !std::holds_alternative<FactorLabel>(product.label(0))) {
    throw InputError("factor_edge_count: graph carries no product labels");
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (edge_factor(product, p[i - 1], p[i]) == ProductFactor::First) {
      ++counts.first;
    } else {
      ++counts.second;
    }
  }
  return counts;
}

}  // namespace isopath
