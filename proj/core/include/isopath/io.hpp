#pragma once

// Graph text format and solve-report serialization.
//
// Graph text format:
//   # comment lines anywhere
//   graph <n> <m>
//   <u> <v>            exactly m lines, 0 <= u < v < n
//   label <v> <text>   optional, after the edges
//
// Solve reports serialize as a JSON object with the fields
// problem, n, value, lower_bound, status, paths, nodes, seconds.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "isopath/graph.hpp"
#include "isopath/solver.hpp"

namespace isopath {

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// Throws InputError naming the offending line.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

/// Single-line JSON document; `n` is the vertex count of the solved graph.
std::string report_json(const SolveReport& report, std::size_t n);

}  // namespace isopath
