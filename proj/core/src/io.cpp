#include "isopath/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace isopath {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

bool skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` unsigned integers and rejects trailing tokens.
std::vector<std::uint64_t> integers(std::istringstream& in, std::size_t count, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::string token;
  while (in >> token) {
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      if (token.front() == '-' || token.front() == '+') throw std::invalid_argument(token);
      value = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      parse_error(line_no, "expected a non-negative integer, got '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.size() != count) {
    parse_error(line_no, "expected " + std::to_string(count) + " integers, got " +
                             std::to_string(out.size()));
  }
  return out;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) out << "label " << v << ' ' << to_string(g.label(v)) << '\n';
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool header = false;
  std::vector<Edge> edges;
  std::vector<std::optional<Label>> labels;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream tokens(line);
    if (!header) {
      std::string keyword;
      tokens >> keyword;
      if (keyword != "graph") parse_error(line_no, "expected 'graph <n> <m>' header");
      auto counts = integers(tokens, 2, line_no);
      n = counts[0];
      m = counts[1];
      if (n > std::numeric_limits<Vertex>::max()) parse_error(line_no, "too many vertices");
      header = true;
      labels.resize(n);
      continue;
    }
    if (edges.size() < m) {
      auto uv = integers(tokens, 2, line_no);
      if (!(uv[0] < uv[1] && uv[1] < n)) {
        parse_error(line_no, "edge must satisfy 0 <= u < v < n");
      }
      edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
      continue;
    }
    std::string keyword;
    tokens >> keyword;
    if (keyword != "label") parse_error(line_no, "expected 'label <v> <text>' after the edges");
    std::uint64_t v = 0;
    if (!(tokens >> v) || v >= n) parse_error(line_no, "label vertex out of range");
    std::string text;
    tokens >> text;
    std::string extra;
    if (text.empty() || (tokens >> extra)) parse_error(line_no, "label text must be one token");
    if (labels[v]) parse_error(line_no, "vertex " + std::to_string(v) + " labeled twice");
    try {
      labels[v] = parse_label(text);
    } catch (const InputError& e) {
      parse_error(line_no, e.what());
    }
  }
  if (!header) throw InputError("missing 'graph <n> <m>' header");
  if (edges.size() != m) {
    throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::vector<Label> out_labels;
  const auto labeled = std::count_if(labels.begin(), labels.end(), [](const auto& l) { return l.has_value(); });
  if (labeled > 0) {
    if (static_cast<std::size_t>(labeled) != n) throw InputError("labels must cover every vertex");
    for (auto& l : labels) out_labels.push_back(std::move(*l));
  }
  return Graph(n, std::move(edges), std::move(out_labels));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_graph(out, g);
}

std::string report_json(const SolveReport& report, std::size_t n) {
  nlohmann::ordered_json doc;
  doc["problem"] = std::string(to_string(report.certificate.kind));
  doc["n"] = n;
  doc["value"] = report.value;
  doc["lower_bound"] = report.lower_bound;
  doc["status"] = std::string(to_string(report.status));
  doc["paths"] = report.certificate.paths;
  doc["nodes"] = report.nodes_explored;
  doc["seconds"] = report.elapsed_seconds;
  return doc.dump();
}

}  // namespace isopath
