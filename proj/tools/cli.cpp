#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "isopath/generators.hpp"
#include "isopath/io.hpp"
#include "isopath/reduction.hpp"
#include "isopath/solver.hpp"
#include "isopath/verify.hpp"
#include "json.hpp"

namespace isopath::cli {

namespace {

constexpr double kVerifyTimeLimit = 120.0;
constexpr double kExtendedTimeLimit = 1800.0;
constexpr std::size_t kReductionExhaustiveMaxN = 7;
constexpr std::size_t kReductionRandomCount = 100;
constexpr std::size_t kReductionRandomMaxN = 10;

struct CommonOptions {
  std::string input;
  std::string output;
  std::optional<double> time_limit;
  std::uint64_t node_limit = Limits{}.node_limit;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
  bool deterministic = false;

  Limits limits(double default_time) const {
    Limits l;
    l.time_limit_seconds = time_limit.value_or(default_time);
    l.node_limit = node_limit;
    l.deterministic = deterministic;
    return l;
  }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("-i,--input", o.input, "Input graph file");
  cmd->add_option("-o,--output", o.output, "Output file (default: standard output)");
  cmd->add_option("--time-limit", o.time_limit, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", o.node_limit, "Search node limit")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for random families");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "machine"}));
  cmd->add_flag("--deterministic", o.deterministic, "Schedule-independent search");
}

std::int64_t parse_param(const std::string& token) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw InputError("expected an integer family parameter, got '" + token + "'");
  }
  return value;
}

// "<family> <params...>", or "product <family> <params...> x <family> <params...>".
FamilySpec parse_family(const std::vector<std::string>& tokens, std::optional<std::uint64_t> seed,
                        double probability) {
  if (tokens.empty()) throw InputError("gen: missing family name");
  auto family = family_from_name(tokens.front());
  if (!family) throw InputError("gen: unknown family '" + tokens.front() + "'");
  FamilySpec spec;
  spec.family = *family;
  spec.seed = seed;
  spec.probability = probability;
  if (*family == Family::Product) {
    auto sep = std::find(tokens.begin() + 1, tokens.end(), "x");
    if (sep == tokens.end()) throw InputError("gen product: expected '<family> ... x <family> ...'");
    spec.factors.push_back(parse_family({tokens.begin() + 1, sep}, seed, probability));
    spec.factors.push_back(parse_family({sep + 1, tokens.end()}, seed, probability));
    return spec;
  }
  for (auto it = tokens.begin() + 1; it != tokens.end(); ++it) spec.params.push_back(parse_param(*it));
  return spec;
}

// Writes to the -o file when given, else to `out`.
void emit(const CommonOptions& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw InputError("cannot write " + o.output);
  file << text;
}

Graph input_graph(const CommonOptions& o) {
  if (o.input.empty()) throw InputError("missing -i <graph file>");
  return load_graph(o.input);
}

std::string fixed(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string report_table(const SolveReport& r, std::size_t n) {
  std::ostringstream out;
  out << pad("problem", 13) << to_string(r.certificate.kind) << '\n'
      << pad("n", 13) << n << '\n'
      << pad("value", 13) << r.value << '\n'
      << pad("lower_bound", 13) << r.lower_bound << '\n'
      << pad("status", 13) << to_string(r.status) << '\n'
      << pad("nodes", 13) << r.nodes_explored << '\n'
      << pad("seconds", 13) << fixed(r.elapsed_seconds) << '\n'
      << "paths\n";
  for (const auto& p : r.certificate.paths) {
    out << ' ';
    for (Vertex v : p) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string solved_cell(const std::optional<SolveReport>& r, const std::optional<Claim>& claim) {
  if (!r || !claim) return "-";
  std::string cell = std::to_string(r->value) + " (" + claim->text() + ")";
  if (r->status != SolveStatus::Optimal) cell += "*";
  return cell;
}

int run_verify(const std::string& suite, bool extended, const CommonOptions& o, std::ostream& out) {
  const bool machine = o.format == "machine";
  const bool family_suites = suite != "reduction";
  const bool reduction = suite == "reduction" || suite == "all";
  std::vector<VerifySuiteEntry> entries;
  if (family_suites) entries = suite_entries(suite, extended);

  bool mismatch = false;
  bool inconclusive = false;
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  if (!machine && !entries.empty()) {
    out << pad("suite", 11) << pad("instance", 28) << pad("n", 5) << pad("lb", 4)
        << pad("cover", 12) << pad("partition", 12) << pad("verdict", 14) << "seconds\n";
  }
  for (const auto& entry : entries) {
    auto limits = o.limits(entry.extended ? kExtendedTimeLimit : kVerifyTimeLimit);
    VerifyResult r = run_entry(entry, limits);
    mismatch = mismatch || r.verdict == Verdict::Mismatch;
    inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
    double seconds = (r.cover ? r.cover->elapsed_seconds : 0.0) +
                     (r.partition ? r.partition->elapsed_seconds : 0.0);
    if (machine) {
      nlohmann::ordered_json row;
      row["suite"] = entry.suite;
      row["instance"] = describe(entry.family);
      row["claim_source"] = entry.claim_source;
      row["n"] = r.vertices;
      row["lower_bound"] = r.lower_bound;
      if (r.cover) row["cover"] = r.cover->value;
      if (r.partition) row["partition"] = r.partition->value;
      row["verdict"] = std::string(to_string(r.verdict));
      row["seconds"] = seconds;
      doc.push_back(row);
    } else {
      out << pad(entry.suite, 11) << pad(describe(entry.family), 28)
          << pad(std::to_string(r.vertices), 5) << pad(std::to_string(r.lower_bound), 4)
          << pad(solved_cell(r.cover, entry.cover), 12)
          << pad(solved_cell(r.partition, entry.partition), 12)
          << pad(std::string(to_string(r.verdict)), 14) << fixed(seconds);
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
    }
  }

  if (reduction) {
    auto rows = run_reduction_sweep(kReductionExhaustiveMaxN, kReductionRandomCount,
                                    kReductionRandomMaxN, o.limits(kVerifyTimeLimit));
    if (!machine) {
      out << '\n'
          << pad("reduction corpus", 42) << pad("graphs", 9) << pad("ok", 9) << pad("mismatch", 10)
          << pad("inconcl.", 10) << pad("verdict", 14) << "seconds\n";
    }
    for (const auto& row : rows) {
      Verdict verdict = row.mismatches > 0      ? Verdict::Mismatch
                        : row.inconclusive > 0 ? Verdict::Inconclusive
                                               : Verdict::Pass;
      mismatch = mismatch || verdict == Verdict::Mismatch;
      inconclusive = inconclusive || verdict == Verdict::Inconclusive;
      if (machine) {
        nlohmann::ordered_json j;
        j["suite"] = "reduction";
        j["instance"] = row.corpus;
        j["graphs"] = row.graphs;
        j["confirmed"] = row.confirmed;
        j["mismatches"] = row.mismatches;
        j["inconclusive"] = row.inconclusive;
        j["verdict"] = std::string(to_string(verdict));
        j["seconds"] = row.seconds;
        doc.push_back(j);
      } else {
        out << pad(row.corpus, 42) << pad(std::to_string(row.graphs), 9)
            << pad(std::to_string(row.confirmed), 9) << pad(std::to_string(row.mismatches), 10)
            << pad(std::to_string(row.inconclusive), 10) << pad(std::string(to_string(verdict)), 14)
            << fixed(row.seconds) << '\n';
        if (!row.first_failure.empty()) out << "first failing graph:\n" << row.first_failure;
      }
    }
  }
  if (machine) out << doc.dump(2) << '\n';
  if (mismatch) return kVerifyMismatch;
  return inconclusive ? kLimitHit : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact isometric path cover and partition toolkit", "isopath"};
  app.require_subcommand(1);

  CommonOptions gen_opts;
  std::vector<std::string> family_tokens;
  double probability = 0.5;
  auto* gen = app.add_subcommand("gen", "Generate a graph family in the graph text format");
  add_common(gen, gen_opts);
  gen->add_option("family", family_tokens, "Family name and parameters")->required();
  gen->add_option("--p", probability, "Edge probability for bipartite_random");

  CommonOptions solve_opts;
  std::string problem;
  std::size_t k = 3;
  std::size_t max_vertices = 0;
  auto* solve = app.add_subcommand("solve", "Solve cover, partition or kpath exactly");
  add_common(solve, solve_opts);
  solve->add_option("problem", problem, "cover | partition | kpath")
      ->required()
      ->check(CLI::IsMember({"cover", "partition", "kpath"}));
  solve->add_option("--k", k, "Vertex cap for kpath")->check(CLI::PositiveNumber);
  solve->add_option("--max-vertices", max_vertices, "Vertex cap for partition paths (0 = none)");

  CommonOptions bound_opts;
  auto* bound = app.add_subcommand("bound", "Print the diameter lower bound");
  add_common(bound, bound_opts);

  CommonOptions reduce_opts;
  std::string reduction_name;
  bool force = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply the 3-path partition reduction");
  add_common(reduce_cmd, reduce_opts);
  reduce_cmd->add_option("reduction", reduction_name, "Reduction name (3pp)")
      ->required()
      ->check(CLI::IsMember({"3pp"}));
  reduce_cmd->add_flag("--force", force, "Accept non-bipartite input");

  CommonOptions verify_opts;
  std::string suite = "all";
  bool extended = false;
  auto* verify = app.add_subcommand("verify", "Replay closed-form results against the solvers");
  add_common(verify, verify_opts);
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("reduction");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
  verify->add_flag("--extended", extended, "Include the large stretch instances");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (gen->parsed()) {
      Graph g = generate(parse_family(family_tokens, gen_opts.seed, probability));
      emit(gen_opts, out, format_graph(g));
      return kSuccess;
    }
    if (solve->parsed()) {
      Graph g = input_graph(solve_opts);
      Limits limits = solve_opts.limits(Limits{}.time_limit_seconds);
      SolveReport r = problem == "cover"       ? min_cover(g, limits)
                      : problem == "partition" ? min_partition(g, limits, max_vertices)
                                               : min_kpath_partition(g, k, limits);
      emit(solve_opts, out,
           solve_opts.format == "machine" ? report_json(r, g.order()) + "\n"
                                          : report_table(r, g.order()));
      return r.status == SolveStatus::Optimal ? kSuccess : kLimitHit;
    }
    if (bound->parsed()) {
      Graph g = input_graph(bound_opts);
      emit(bound_opts, out, std::to_string(lower_bound(g)) + "\n");
      return kSuccess;
    }
    if (reduce_cmd->parsed()) {
      ReducedInstance inst = reduce(input_graph(reduce_opts), force);
      emit(reduce_opts, out, format_graph(inst.reduced));
      return kSuccess;
    }
    if (verify->parsed()) return run_verify(suite, extended, verify_opts, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace isopath::cli
