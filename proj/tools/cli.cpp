#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domgame/bounds.hpp"
#include "domgame/census.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/error.hpp"
#include "domgame/families.hpp"
#include "domgame/graph6.hpp"
#include "domgame/metrics.hpp"
#include "domgame/records.hpp"
#include "domgame/solver.hpp"

#ifndef DOMGAME_VERSION
#define DOMGAME_VERSION "0.0.0"
#endif

namespace domgame::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  int workers = 1;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::string output;
  std::string format = "text";
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::string_view digits = text;
  int base = 10;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  } else if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'b' || digits[1] == 'B')) {
    base = 2;
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
    throw InputError(what + ": not an unsigned integer: '" + text + "'");
  }
  return value;
}

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw InputError(what + ": not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& text, char sep, const std::string& what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(parse_int(std::string_view(text).substr(start, pos - start), what));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::string config_hash(int argc, const char* const* argv) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int i = 1; i < argc; ++i) {
    for (const char* p = argv[i];; ++p) {
      h ^= static_cast<unsigned char>(*p);
      h *= 0x100000001b3ULL;
      if (*p == '\0') break;
    }
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// --- Output --------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else {
      out.emplace_back(name, scalar_text(value));
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

/// Writes one JSON object per row as JSONL, flattened key=value blocks, or
/// CSV with a header taken from the first row.
class RowWriter {
 public:
  RowWriter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  void write(const json& row) {
    if (format_ == "jsonl") {
      out_ << row.dump() << '\n';
      return;
    }
    std::vector<std::pair<std::string, std::string>> fields;
    flatten(row, "", fields);
    if (format_ == "csv") {
      if (!header_written_) {
        for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << csv_field(fields[i].first);
        out_ << '\n';
        header_written_ = true;
      }
      for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << csv_field(fields[i].second);
      out_ << '\n';
      return;
    }
    if (rows_++ > 0) out_ << '\n';
    for (const auto& [key, value] : fields) out_ << key << '=' << value << '\n';
  }

 private:
  std::ostream& out_;
  std::string format_;
  bool header_written_ = false;
  std::size_t rows_ = 0;
};

/// --output file when given, else the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw InputError("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

json vertex_list(VertexSet s) {
  json list = json::array();
  for (int v : s) list.push_back(v);
  return list;
}

// --- Graph inputs --------------------------------------------------------

/// First number is the order, then one "u v" pair per edge; '#' starts a comment.
Graph read_edge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read edge file " + path);
  std::vector<int> numbers;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      numbers.push_back(parse_int(token, path + ":" + std::to_string(line_no)));
    }
  }
  if (numbers.empty()) throw InputError(path + ": missing vertex count");
  if (numbers.size() % 2 != 1) throw InputError(path + ": edge list has an unpaired endpoint");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < numbers.size(); i += 2) edges.emplace_back(numbers[i], numbers[i + 1]);
  return Graph::from_edges(numbers[0], edges);
}

// --- Commands ------------------------------------------------------------

struct SolveArgs {
  std::string graph6;
  std::string family;
  std::string edges;
  std::string partial;
  std::string turn = "d";
};

int cmd_solve(const SolveArgs& args, const Globals& globals, std::ostream& out, std::ostream& err) {
  Graph g;
  if (!args.graph6.empty()) {
    g = parse_graph6(args.graph6);
  } else if (!args.family.empty()) {
    g = family_from_string(args.family);
  } else {
    g = read_edge_file(args.edges);
  }
  SolverOptions options;
  options.node_budget = globals.node_budget;
  Sink sink(globals.output, out);
  RowWriter writer(sink.stream(), globals.format);

  if (!args.partial.empty()) {
    const std::uint64_t mask = parse_u64(args.partial, "--partial");
    const VertexSet dominated(mask);
    if (!dominated.is_subset_of(g.vertices())) throw InputError("--partial names vertices outside the graph");
    if (args.turn != "d" && args.turn != "s") throw InputError("--turn must be d or s");
    const Player player = args.turn == "d" ? Player::kDominator : Player::kStaller;
    Solver solver(g, options);
    const SolveResult result = solver.solve(dominated, player);
    json row = json::object();
    row["graph6"] = encode_graph6(g);
    row["n"] = g.order();
    row["dominated"] = vertex_list(dominated);
    row["to_move"] = args.turn;
    row["value"] = result.value;
    const int undominated = g.order() - dominated.count();
    row["partial_bound"] = undominated > 0 ? json(bounds::partial(undominated, player)) : json(nullptr);
    row["optimal_first_moves"] = vertex_list(result.optimal_first_moves);
    row["nodes_visited"] = result.nodes_visited;
    writer.write(row);
    return kExitOk;
  }

  census::JobSpec spec;
  spec.solver = options;
  const auto record = census::measure(g, 0, spec);
  if (!record->gamma_g || !record->gamma_g_prime || !record->gamma) {
    err << "error: node budget of " << globals.node_budget << " exceeded\n";
    return kExitUsage;
  }
  writer.write(json::parse(census::to_jsonl(*record)));
  return record->violation ? kExitViolation : kExitOk;
}

struct CensusArgs {
  std::string internal;
  std::string stream;
  bool diam2 = false;
  std::optional<int> min_delta;
  std::optional<int> max_Delta;
  bool hamiltonian = false;
  bool skip_bad = false;
  std::string checkpoint;
  std::uint64_t checkpoint_interval = 0;
  bool resume = false;
  std::string compute = "gamma,gamma_g,gamma_g_prime";
  std::uint64_t max_inputs = 0;
};

json summary_row(const census::OrderSummary& s) {
  json row = json::object();
  row["n"] = s.n;
  row["scanned"] = s.scanned;
  row["passed"] = s.passed;
  row["diam2"] = s.diam2;
  row["eq_half"] = s.eq_half;
  row["eq_half_minus"] = s.eq_half_minus;
  row["violations"] = s.violations;
  row["budget_exceeded"] = s.budget_exceeded;
  row["eq_half_classes"] = s.eq_half_classes.size();
  row["eq_half_minus_classes"] = s.eq_half_minus_classes.size();
  row["eq_half_class_keys"] = s.eq_half_classes.keys();
  row["nodes_visited"] = s.nodes_visited;
  return row;
}

census::JobSpec census_spec(const CensusArgs& args, const Globals& globals) {
  census::JobSpec spec;
  if (!args.internal.empty()) {
    const auto orders = parse_int_list(args.internal, '-', "--internal");
    if (orders.size() > 2) throw InputError("--internal takes N or A-B");
    spec.source = census::InternalSource{orders.front(), orders.back()};
  } else {
    spec.source = census::StreamSource{args.stream};
  }
  spec.filters.require_diam2 = args.diam2;
  spec.filters.min_delta = args.min_delta;
  spec.filters.max_Delta = args.max_Delta;
  spec.filters.require_hamiltonian = args.hamiltonian;
  spec.compute = {false, false, false};
  std::size_t start = 0;
  while (start <= args.compute.size()) {
    const auto pos = std::min(args.compute.find(',', start), args.compute.size());
    const std::string item = args.compute.substr(start, pos - start);
    if (item == "gamma") {
      spec.compute.gamma = true;
    } else if (item == "gamma_g") {
      spec.compute.gamma_g = true;
    } else if (item == "gamma_g_prime") {
      spec.compute.gamma_g_prime = true;
    } else {
      throw InputError("--compute: unknown value '" + item + "'");
    }
    start = pos + 1;
  }
  spec.solver.node_budget = globals.node_budget;
  spec.workers = globals.workers;
  spec.checkpoint_path = args.checkpoint;
  spec.checkpoint_interval = args.checkpoint_interval;
  spec.skip_bad = args.skip_bad;
  spec.max_inputs = args.max_inputs;
  census::validate(spec);
  return spec;
}

int cmd_census(const CensusArgs& args, const Globals& globals, std::ostream& out, std::ostream& err) {
  const census::JobSpec spec = census_spec(args, globals);
  err << "# spec=" << census::spec_hash(spec) << '\n';

  census::CensusSummary summary;
  if (!globals.output.empty()) {
    const auto result = census::run_census(spec, globals.output, args.resume);
    summary = result.summary;
    RowWriter writer(out, globals.format);
    for (const auto& [n, s] : summary.orders) writer.write(summary_row(s));
    if (!result.completed) err << "# stopped early; resume with --resume\n";
  } else {
    if (!args.checkpoint.empty() || args.resume) throw InputError("--checkpoint and --resume need --output");
    RowWriter records(out, globals.format);
    const bool emit_records = globals.format != "csv";
    summary = census::scan_stream(spec, [&](const census::CensusRecord& r) {
      if (globals.format == "jsonl") {
        out << census::to_jsonl(r) << '\n';
      } else if (emit_records) {
        records.write(json::parse(census::to_jsonl(r)));
      }
    });
    if (emit_records) {
      RowWriter writer(err, "text");
      for (const auto& [n, s] : summary.orders) writer.write(summary_row(s));
    } else {
      census::write_csv(out, summary.csv_rows());
    }
  }
  err << "# scanned=" << summary.total_scanned() << " bad_lines=" << summary.bad_lines
      << " violations=" << summary.total_violations() << " wall_seconds=" << summary.wall_seconds << '\n';
  return summary.total_violations() > 0 ? kExitViolation : kExitOk;
}

int cmd_verify(const std::string& path, const Globals& globals, std::ostream& out, std::ostream& err) {
  const auto records = census::read_records(path);
  const auto violations = census::verify_bounds(records);
  std::size_t flagged = 0;
  for (const auto& r : records) flagged += r.violation ? 1 : 0;
  Sink sink(globals.output, out);
  RowWriter writer(sink.stream(), globals.format);
  for (const auto& v : violations) {
    json row = json::object();
    row["seq"] = v.seq;
    row["graph6"] = v.graph6;
    row["bound"] = v.bound;
    row["limit"] = v.limit;
    row["actual"] = v.actual;
    writer.write(row);
  }
  err << "# records=" << records.size() << " violations=" << violations.size() << " flagged=" << flagged << '\n';
  return violations.empty() && flagged == 0 ? kExitOk : kExitViolation;
}

struct FamiliesArgs {
  bool list = false;
  std::string emit;
  std::string random;
};

int cmd_families(const FamiliesArgs& args, const Globals& globals, std::ostream& out) {
  Sink sink(globals.output, out);
  std::ostream& os = sink.stream();
  if (args.list) {
    for (const auto& line : family_usage()) os << line << '\n';
    for (const auto& fixture : named_fixtures()) os << "fixture " << fixture.name << ' ' << encode_graph6(fixture.graph) << '\n';
  } else if (!args.emit.empty()) {
    os << encode_graph6(family_from_string(args.emit)) << '\n';
  } else {
    const auto parts = parse_int_list(args.random, ':', "--random");
    if (parts.size() != 2 || parts[0] < 1 || parts[0] > 62 || parts[1] < 0) {
      throw InputError("--random takes n:count with 1 <= n <= 62");
    }
    for (int i = 0; i < parts[1]; ++i) {
      os << encode_graph6(random_graph(parts[0], 1, 2, globals.seed + static_cast<std::uint64_t>(i))) << '\n';
    }
  }
  return kExitOk;
}

struct BoundsArgs {
  std::optional<int> n;
  std::optional<int> delta;
  std::optional<int> Delta;
  std::string chain;
};

int cmd_bounds(const BoundsArgs& args, const Globals& globals, std::ostream& out) {
  Sink sink(globals.output, out);
  RowWriter writer(sink.stream(), globals.format);
  json row = json::object();
  if (!args.chain.empty()) {
    const auto parts = parse_int_list(args.chain, ',', "--chain");
    if (parts.size() != 3) throw InputError("--chain takes n,delta,k");
    const auto chain = bounds::greedy_chain_bound(parts[0], parts[1], parts[2]);
    row["n"] = chain.n;
    row["delta"] = chain.delta;
    row["rounds"] = chain.rounds;
    for (std::size_t i = 0; i < chain.u.size(); ++i) {
      row["u_" + std::to_string(i + 1)] = chain.u[i];
      if (i < chain.u_prime.size()) row["u_" + std::to_string(i + 1) + "_prime"] = chain.u_prime[i];
    }
    row["bound"] = chain.bound;
    row["ended_early"] = chain.ended_early;
    writer.write(row);
    return kExitOk;
  }
  const int n = *args.n;
  if (n < 1) throw InputError("--n must be >= 1");
  if (args.delta && (*args.delta < 1 || *args.delta > n - 1)) throw InputError("--delta must lie in [1, n-1]");
  if (args.Delta && (*args.Delta < 0 || *args.Delta > n - 1)) throw InputError("--Delta must lie in [0, n-1]");
  if (args.delta && args.Delta && *args.delta > *args.Delta) throw InputError("--delta exceeds --Delta");
  row["n"] = n;
  row["two_delta"] = args.delta ? json(bounds::two_delta(*args.delta)) : json(nullptr);
  row["delta_corollary"] = args.Delta ? json(bounds::delta_corollary(n, *args.Delta)) : json(nullptr);
  row["half"] = bounds::half(n);
  row["half_minus_eleventh"] = bounds::half_minus_eleventh(n);
  const auto g = bounds::gamma_diam2(n);
  row["gamma_diam2"] = g.hellwig;
  row["meierling"] = g.meierling ? json(*g.meierling) : json(nullptr);
  row["total_dom"] = n >= 3 ? json(bounds::total_dom_chain(n)) : json(nullptr);
  writer.write(row);
  return kExitOk;
}

int cmd_rall(int max_n, const Globals& globals, std::ostream& out) {
  const auto rows = census::rall_check(max_n, globals.workers);
  Sink sink(globals.output, out);
  RowWriter writer(sink.stream(), globals.format);
  std::uint64_t violations = 0;
  for (const auto& r : rows) {
    json row = json::object();
    row["n"] = r.n;
    row["hamiltonian"] = r.hamiltonian;
    row["skipped"] = r.skipped;
    row["checked"] = r.checked;
    row["violations"] = r.violations;
    row["max_gamma_g"] = r.max_gamma_g;
    row["counterexamples"] = r.counterexamples;
    writer.write(row);
    violations += r.violations;
  }
  return violations > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domination game solver and diameter-2 census", "domgame"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", DOMGAME_VERSION);

  Globals globals;
  app.add_option("--workers", globals.workers, "Worker threads for census and rall")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "Seed for randomized commands");
  app.add_option("--node-budget", globals.node_budget, "Solver node budget (DOMGAME_NODE_BUDGET overrides)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", globals.output, "Write results to this file");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"jsonl", "csv", "text"}));

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Game values of one graph, or of a partially dominated position");
  auto* g6 = solve_cmd->add_option("--graph6", solve.graph6, "Graph in graph6");
  auto* fam = solve_cmd->add_option("--family", solve.family, "Family name[:a[,b]]");
  auto* edges = solve_cmd->add_option("--edges", solve.edges, "Edge list file");
  g6->excludes(fam, edges);
  fam->excludes(edges);
  auto* partial = solve_cmd->add_option("--partial", solve.partial, "Dominated vertex mask (decimal, 0x, 0b)");
  solve_cmd->add_option("--turn", solve.turn, "Player to move: d or s")->needs(partial)->check(
      CLI::IsMember({"d", "s"}));

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "Measure every input graph and check all bounds");
  auto* internal = census_cmd->add_option("--internal", census_args.internal, "Connected graphs of order N or A-B (max 7)");
  auto* stream = census_cmd->add_option("--stream", census_args.stream, "graph6 input file");
  internal->excludes(stream);
  census_cmd->add_flag("--diam2", census_args.diam2, "Keep diameter-2 graphs only");
  census_cmd->add_option("--min-delta", census_args.min_delta, "Minimum degree filter");
  census_cmd->add_option("--max-Delta", census_args.max_Delta, "Maximum degree filter");
  census_cmd->add_flag("--hamiltonian", census_args.hamiltonian, "Keep Hamiltonian graphs only (n <= 16)");
  census_cmd->add_flag("--skip-bad", census_args.skip_bad, "Count and skip malformed graph6 lines");
  census_cmd->add_option("--checkpoint", census_args.checkpoint, "Checkpoint file");
  census_cmd->add_option("--checkpoint-interval", census_args.checkpoint_interval, "Inputs between checkpoints");
  census_cmd->add_flag("--resume", census_args.resume, "Continue from --checkpoint");
  census_cmd->add_option("--compute", census_args.compute, "Comma list of gamma, gamma_g, gamma_g_prime");
  census_cmd->add_option("--max-inputs", census_args.max_inputs, "Stop after this many inputs");

  std::string records_path;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check every bound on a JSONL record file");
  verify_cmd->add_option("--records", records_path, "JSONL records")->required();

  FamiliesArgs families;
  auto* families_cmd = app.add_subcommand("families", "List or emit named graph families");
  auto* list = families_cmd->add_flag("--list", families.list, "List families and fixtures");
  auto* emit = families_cmd->add_option("--emit", families.emit, "Emit name[:a[,b]] as graph6");
  auto* random = families_cmd->add_option("--random", families.random, "Emit count G(n,1/2) graphs as n:count");
  list->excludes(emit, random);
  emit->excludes(random);

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds, or a greedy chain replay");
  auto* n_opt = bounds_cmd->add_option("--n", bounds_args.n, "Order");
  bounds_cmd->add_option("--delta", bounds_args.delta, "Minimum degree")->needs(n_opt);
  bounds_cmd->add_option("--Delta", bounds_args.Delta, "Maximum degree")->needs(n_opt);
  auto* chain = bounds_cmd->add_option("--chain", bounds_args.chain, "n,delta,k");
  n_opt->excludes(chain);

  int rall_max_n = 7;
  auto* rall_cmd = app.add_subcommand("rall", "Check gamma_g <= ceil(n/2) on Hamiltonian graphs");
  rall_cmd->add_option("--max-n", rall_max_n, "Largest order (max 8)")->check(CLI::Range(3, census::kMaxRallOrder));

  try {
    app.parse(argc, argv);
    if (families_cmd->parsed() && !families.list && families.emit.empty() && families.random.empty()) {
      throw CLI::RequiredError("families needs --list, --emit or --random");
    }
    if (bounds_cmd->parsed() && !bounds_args.n && bounds_args.chain.empty()) {
      throw CLI::RequiredError("bounds needs --n or --chain");
    }
    if (solve_cmd->parsed() && solve.graph6.empty() && solve.family.empty() && solve.edges.empty()) {
      throw CLI::RequiredError("solve needs --graph6, --family or --edges");
    }
    if (census_cmd->parsed() && census_args.internal.empty() && census_args.stream.empty()) {
      throw CLI::RequiredError("census needs --internal or --stream");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (const char* env = std::getenv("DOMGAME_NODE_BUDGET"); env != nullptr && *env != '\0') {
      globals.node_budget = parse_u64(env, "DOMGAME_NODE_BUDGET");
      if (globals.node_budget == 0) throw InputError("DOMGAME_NODE_BUDGET must be positive");
    }
    err << "# domgame " << DOMGAME_VERSION << " config=" << config_hash(argc, argv) << " seed=" << globals.seed
        << '\n';
    if (solve_cmd->parsed()) return cmd_solve(solve, globals, out, err);
    if (census_cmd->parsed()) return cmd_census(census_args, globals, out, err);
    if (verify_cmd->parsed()) return cmd_verify(records_path, globals, out, err);
    if (families_cmd->parsed()) return cmd_families(families, globals, out);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_args, globals, out);
    return cmd_rall(rall_max_n, globals, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace domgame::cli
