#include "isopath/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace isopath {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InputError("malformed " + std::string(what) + " in label: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string to_string(const Label& label) {
  return std::visit(
      Overloaded{
          [](const CoordLabel& c) {
            std::string out = "(";
            for (std::size_t i = 0; i < c.coords.size(); ++i) {
              if (i > 0) out += ',';
              out += std::to_string(c.coords[i]);
            }
            return out + ")";
          },
          [](const LevelLabel& l) {
            std::string out = "<";
            for (unsigned i = 0; i < l.bits; ++i) out += ((l.word >> i) & 1U) ? '1' : '0';
            return out + "," + std::to_string(l.level) + ">";
          },
          [](const FactorLabel& f) {
            return "[" + std::to_string(f.first) + "|" + std::to_string(f.second) + "]";
          },
          [](const NameLabel& n) { return n.name; },
      },
      label);
}

Label parse_label(std::string_view text) {
  if (text.empty()) throw InputError("empty label");
  if (text.front() == '(') {
    if (text.back() != ')') throw InputError("unterminated coordinate label");
    CoordLabel c;
    auto body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto comma = body.find(',');
      c.coords.push_back(parse_int<int>(body.substr(0, comma), "coordinate"));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return c;
  }
  if (text.front() == '<') {
    auto comma = text.find(',');
    if (text.back() != '>' || comma == std::string_view::npos) {
      throw InputError("malformed level label");
    }
    LevelLabel l;
    auto bits = text.substr(1, comma - 1);
    if (bits.size() > 64) throw InputError("level label word longer than 64 bits");
    l.bits = static_cast<unsigned>(bits.size());
    for (unsigned i = 0; i < l.bits; ++i) {
      if (bits[i] == '1') {
        l.word |= std::uint64_t{1} << i;
      } else if (bits[i] != '0') {
        throw InputError("level label word must be binary");
      }
    }
    l.level = parse_int<unsigned>(text.substr(comma + 1, text.size() - comma - 2), "level");
    return l;
  }
  if (text.front() == '[') {
    auto bar = text.find('|');
    if (text.back() != ']' || bar == std::string_view::npos) {
      throw InputError("malformed factor label");
    }
    FactorLabel f;
    f.first = parse_int<Vertex>(text.substr(1, bar - 1), "factor index");
    f.second = parse_int<Vertex>(text.substr(bar + 1, text.size() - bar - 2), "factor index");
    return f;
  }
  return NameLabel{std::string(text)};
}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<Label> labels)
    : adjacency_(n) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                     "}");
  }
  for (const auto& e : edges) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  edges_ = std::move(edges);
  set_labels(std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::set_labels(std::vector<Label> labels) {
  if (!labels.empty()) {
    if (labels.size() != order()) {
      throw InputError("expected " + std::to_string(order()) + " labels, got " +
                       std::to_string(labels.size()));
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(to_string(l)).second) {
        throw InputError("duplicate vertex label '" + to_string(l) + "'");
      }
    }
  }
  labels_ = std::move(labels);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.order(), kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw InputError("induced_subgraph: vertex out of range");
    index[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] != kUnreachable && index[e.v] != kUnreachable) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  std::vector<Label> labels;
  if (g.has_labels()) {
    labels.reserve(vertices.size());
    for (auto v : vertices) labels.push_back(g.label(v));
  }
  return Graph(vertices.size(), std::move(edges), std::move(labels));
}

std::optional<Hops> DistMatrix::distance(Vertex u, Vertex v) const {
  Hops d = (*this)(u, v);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

Hops DistMatrix::max_finite() const {
  Hops best = 0;
  for (auto d : d_) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

bool DistMatrix::connected() const {
  return std::find(d_.begin(), d_.end(), kUnreachable) == d_.end();
}

std::vector<Hops> bfs_distances(const Graph& g, Vertex s) {
  if (s >= g.order()) {
    throw InputError("BFS source " + std::to_string(s) + " out of range for " +
                     std::to_string(g.order()) + " vertices");
  }
  std::vector<Hops> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistMatrix all_pairs_distances(const Graph& g) {
  DistMatrix m;
  m.n_ = g.order();
  m.d_.resize(m.n_ * m.n_);
  for (Vertex s = 0; s < m.n_; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), m.d_.begin() + std::size_t{s} * m.n_);
  }
  return m;
}

Hops diameter(const DistMatrix& dist) {
  if (!dist.connected()) throw DomainError("diameter is undefined for a disconnected graph");
  return dist.max_finite();
}

Hops diameter(const Graph& g) {
  if (!is_connected(g)) throw DomainError("diameter is undefined for a disconnected graph");
  Hops best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto row = bfs_distances(g, 0);
  return std::find(row.begin(), row.end(), kUnreachable) == row.end();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

BipartiteCheck check_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t kUncolored = 2;
  std::vector<std::uint8_t> color(n, kUncolored);
  std::vector<Vertex> parent(n, kUnreachable);
  std::vector<Hops> depth(n, 0);

  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != kUncolored) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == kUncolored) {
          color[w] = color[u] ^ 1U;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Tree paths from u and w meet at their lowest common ancestor;
          // with the edge uw they close an odd cycle.
          std::vector<Vertex> up{u};
          std::vector<Vertex> down{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) up.push_back(a = parent[a]);
          while (depth[b] > depth[a]) down.push_back(b = parent[b]);
          while (a != b) {
            up.push_back(a = parent[a]);
            down.push_back(b = parent[b]);
          }
          down.pop_back();
          up.insert(up.end(), down.rbegin(), down.rend());
          BipartiteCheck result;
          result.odd_cycle = std::move(up);
          return result;
        }
      }
    }
  }
  BipartiteCheck result;
  result.bipartite = true;
  result.coloring = std::move(color);
  return result;
}

bool is_bipartite(const Graph& g) { return check_bipartite(g).bipartite; }

}  // namespace isopath
