#include "domgame/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "domgame/bounds.hpp"
#include "domgame/domination.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/error.hpp"
#include "domgame/graph6.hpp"
#include "domgame/greedy.hpp"
#include "domgame/hamiltonian.hpp"
#include "domgame/metrics.hpp"

namespace domgame::census {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kBatchSize = 4096;
constexpr const char* kCheckpointFormat = "domgame-census-checkpoint";
constexpr int kCheckpointVersion = 1;

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ULL;
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state ^= c;
      state *= 0x100000001b3ULL;
    }
  }
};

// Everything one worker learns about one input.
struct Outcome {
  std::uint64_t seq = 0;
  int n = 0;
  bool bad = false;
  std::string error;
  bool diam2 = false;
  bool budget_exceeded = false;
  bool twin_free_delta = false;
  std::uint64_t nodes = 0;
  std::optional<CensusRecord> record;
  // Winners carry what the sequential merge needs for class dedup.
  std::optional<Graph> winner;
  std::string winner_key;
};

struct Input {
  std::uint64_t seq = 0;
  std::uint64_t line = 0;
  std::string text;          // stream inputs
  std::optional<Graph> graph;  // internal inputs
};

bool passes_filters(const Graph& g, const GraphMetrics& metrics, const Filters& f) {
  if (f.require_diam2 && metrics.diam != 2) return false;
  if (f.min_delta && metrics.delta < *f.min_delta) return false;
  if (f.max_Delta && metrics.Delta > *f.max_Delta) return false;
  if (f.require_hamiltonian && !is_hamiltonian(g)) return false;
  return true;
}

Outcome evaluate(const Graph& g, std::uint64_t seq, const JobSpec& spec) {
  Outcome out;
  out.seq = seq;
  out.n = g.order();
  const GraphMetrics metrics = degree_stats(g);
  out.diam2 = metrics.diam == 2;
  if (!passes_filters(g, metrics, spec.filters)) return out;

  CensusRecord r;
  r.graph6 = encode_graph6(g);
  r.n = metrics.n;
  r.m = metrics.m;
  r.delta = metrics.delta;
  r.Delta = metrics.Delta;
  r.diam = metrics.diam;
  r.seq = seq;
  r.bounds = bounds::report(metrics.n, metrics.delta, metrics.Delta, metrics.diam);
  try {
    if (spec.compute.gamma_g || spec.compute.gamma_g_prime) {
      Solver solver(g, spec.solver);
      if (spec.compute.gamma_g) r.gamma_g = solver.value(VertexSet{}, Player::kDominator);
      if (spec.compute.gamma_g_prime) r.gamma_g_prime = solver.value(VertexSet{}, Player::kStaller);
      out.nodes = solver.nodes_visited();
    }
    if (spec.compute.gamma) r.gamma = domination_number(g, spec.solver.node_budget);
  } catch (const BudgetExceeded&) {
    out.budget_exceeded = true;
  }

  if (r.gamma_g) {
    r.eq_half = *r.gamma_g == bounds::half(r.n);
    r.eq_half_minus = *r.gamma_g == bounds::half_minus_eleventh(r.n);
    r.violation = !check_record(r).empty();
    if (out.diam2 && metrics.twin_free && (r.Delta == r.n - 3 || r.Delta == r.n - 4)) {
      out.twin_free_delta = true;
      if (*r.gamma_g != 3) r.violation = true;
    }
    if (out.diam2 && (r.eq_half || r.eq_half_minus)) {
      if (r.n <= kMaxCanonicalOrder) {
        out.winner_key = canonical_form(g);
      } else {
        out.winner = g;
      }
    }
  }
  out.record = std::move(r);
  return out;
}

void merge(CensusSummary& summary, const Outcome& o) {
  if (o.bad) {
    ++summary.bad_lines;
    return;
  }
  auto& s = summary.orders[o.n];
  s.n = o.n;
  ++s.scanned;
  if (o.diam2) ++s.diam2;
  s.nodes_visited += o.nodes;
  if (o.budget_exceeded) ++s.budget_exceeded;
  if (!o.record) return;
  ++s.passed;
  const auto& r = *o.record;
  if (o.twin_free_delta) ++s.twin_free_delta_checked;
  if (r.eq_half) ++s.eq_half;
  if (r.eq_half_minus) ++s.eq_half_minus;
  if (r.violation) ++s.violations;
  if (o.diam2 && (r.eq_half || r.eq_half_minus)) {
    auto add = [&](ClassSet& set) {
      if (o.winner) {
        set.insert(*o.winner);
      } else {
        set.insert_key(o.winner_key);
      }
    };
    if (r.eq_half) add(s.eq_half_classes);
    if (r.eq_half_minus) add(s.eq_half_minus_classes);
  }
}

// --- Summary / checkpoint serialisation ------------------------------------

json summary_to_json(const CensusSummary& summary) {
  json orders = json::array();
  for (const auto& [n, s] : summary.orders) {
    json o = json::object();
    o["n"] = s.n;
    o["scanned"] = s.scanned;
    o["passed"] = s.passed;
    o["diam2"] = s.diam2;
    o["eq_half"] = s.eq_half;
    o["eq_half_minus"] = s.eq_half_minus;
    o["violations"] = s.violations;
    o["budget_exceeded"] = s.budget_exceeded;
    o["twin_free_delta_checked"] = s.twin_free_delta_checked;
    o["nodes_visited"] = s.nodes_visited;
    o["eq_half_classes"] = s.eq_half_classes.keys();
    o["eq_half_minus_classes"] = s.eq_half_minus_classes.keys();
    orders.push_back(std::move(o));
  }
  json j = json::object();
  j["orders"] = std::move(orders);
  j["bad_lines"] = summary.bad_lines;
  return j;
}

CensusSummary summary_from_json(const json& j) {
  CensusSummary summary;
  for (const auto& o : j.at("orders")) {
    OrderSummary s;
    s.n = o.at("n").get<int>();
    s.scanned = o.at("scanned").get<std::uint64_t>();
    s.passed = o.at("passed").get<std::uint64_t>();
    s.diam2 = o.at("diam2").get<std::uint64_t>();
    s.eq_half = o.at("eq_half").get<std::uint64_t>();
    s.eq_half_minus = o.at("eq_half_minus").get<std::uint64_t>();
    s.violations = o.at("violations").get<std::uint64_t>();
    s.budget_exceeded = o.at("budget_exceeded").get<std::uint64_t>();
    s.twin_free_delta_checked = o.at("twin_free_delta_checked").get<std::uint64_t>();
    s.nodes_visited = o.at("nodes_visited").get<std::uint64_t>();
    for (const auto& k : o.at("eq_half_classes")) s.eq_half_classes.insert_key(k.get<std::string>());
    for (const auto& k : o.at("eq_half_minus_classes")) s.eq_half_minus_classes.insert_key(k.get<std::string>());
    summary.orders[s.n] = std::move(s);
  }
  summary.bad_lines = j.at("bad_lines").get<std::uint64_t>();
  return summary;
}

struct Checkpoint {
  std::string spec_hash;
  std::string source_hash;
  ScanPosition position;
  std::uint64_t output_bytes = 0;
  bool complete = false;
  CensusSummary summary;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
  json j = json::object();
  j["format"] = kCheckpointFormat;
  j["version"] = kCheckpointVersion;
  j["spec_hash"] = cp.spec_hash;
  j["source_hash"] = cp.source_hash;
  j["position"] = {{"order", cp.position.order},
                   {"offset", cp.position.offset},
                   {"line", cp.position.line},
                   {"seq", cp.position.seq}};
  j["output_bytes"] = cp.output_bytes;
  j["complete"] = cp.complete;
  j["summary"] = summary_to_json(cp.summary);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write checkpoint " + tmp);
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read checkpoint " + path);
  try {
    const json j = json::parse(in);
    if (j.at("format").get<std::string>() != kCheckpointFormat) throw InputError("not a census checkpoint");
    if (j.at("version").get<int>() != kCheckpointVersion) throw InputError("unsupported checkpoint version");
    Checkpoint cp;
    cp.spec_hash = j.at("spec_hash").get<std::string>();
    cp.source_hash = j.at("source_hash").get<std::string>();
    const auto& p = j.at("position");
    cp.position.order = p.at("order").get<int>();
    cp.position.offset = p.at("offset").get<std::uint64_t>();
    cp.position.line = p.at("line").get<std::uint64_t>();
    cp.position.seq = p.at("seq").get<std::uint64_t>();
    cp.output_bytes = j.at("output_bytes").get<std::uint64_t>();
    cp.complete = j.at("complete").get<bool>();
    cp.summary = summary_from_json(j.at("summary"));
    return cp;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed checkpoint " + path + ": " + e.what());
  }
}

// --- Input producers --------------------------------------------------------

class Producer {
 public:
  virtual ~Producer() = default;
  /// Next input, or nullopt at end of source.
  virtual std::optional<Input> next(std::uint64_t seq) = 0;
  virtual ScanPosition position(std::uint64_t seq) const = 0;
};

class InternalProducer : public Producer {
 public:
  InternalProducer(const InternalSource& src, const std::optional<ScanPosition>& start)
      : max_order_(src.max_order), order_(src.min_order) {
    if (start) {
      order_ = start->order;
      pattern_ = start->offset;
    }
  }

  std::optional<Input> next(std::uint64_t seq) override {
    while (order_ <= max_order_) {
      const std::uint64_t total = std::uint64_t{1} << (order_ * (order_ - 1) / 2);
      while (pattern_ < total) {
        Graph g = graph_from_pattern(order_, pattern_++);
        if (!is_connected(g)) continue;
        Input in;
        in.seq = seq;
        in.graph = std::move(g);
        return in;
      }
      ++order_;
      pattern_ = 0;
    }
    return std::nullopt;
  }

  ScanPosition position(std::uint64_t seq) const override { return {order_, pattern_, 0, seq}; }

 private:
  int max_order_;
  int order_;
  std::uint64_t pattern_ = 0;
};

class StreamProducer : public Producer {
 public:
  StreamProducer(const StreamSource& src, const std::optional<ScanPosition>& start)
      : in_(src.path, std::ios::binary) {
    if (!in_) throw InputError("cannot open graph6 stream " + src.path);
    if (start) {
      offset_ = start->offset;
      line_ = start->line;
      in_.seekg(static_cast<std::streamoff>(offset_));
    }
  }

  std::optional<Input> next(std::uint64_t seq) override {
    std::string text;
    while (true) {
      if (!std::getline(in_, text)) return std::nullopt;
      offset_ += text.size() + (in_.eof() ? 0 : 1);
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text == ">>graph6<<" || text.empty()) continue;
      Input input;
      input.seq = seq;
      input.line = line_;
      input.text = std::move(text);
      return input;
    }
  }

  ScanPosition position(std::uint64_t seq) const override { return {0, offset_, line_, seq}; }

 private:
  std::ifstream in_;
  std::uint64_t offset_ = 0;
  std::uint64_t line_ = 0;
};

std::unique_ptr<Producer> make_producer(const JobSpec& spec, const std::optional<ScanPosition>& start) {
  if (const auto* internal = std::get_if<InternalSource>(&spec.source)) {
    return std::make_unique<InternalProducer>(*internal, start);
  }
  return std::make_unique<StreamProducer>(std::get<StreamSource>(spec.source), start);
}

Outcome process(const Input& input, const JobSpec& spec) {
  if (input.graph) return evaluate(*input.graph, input.seq, spec);
  Graph g;
  try {
    g = parse_graph6(input.text);
  } catch (const InputError& e) {
    Outcome bad;
    bad.seq = input.seq;
    bad.bad = true;
    bad.error = "line " + std::to_string(input.line) + ": " + e.what();
    return bad;
  }
  return evaluate(g, input.seq, spec);
}

}  // namespace

// --- ClassSet ---------------------------------------------------------------

void ClassSet::insert(const Graph& g) {
  if (g.order() <= kMaxCanonicalOrder) {
    insert_key(canonical_form(g));
    return;
  }
  auto& bucket = representatives_[fingerprint(g)];
  for (const auto& rep : bucket) {
    if (are_isomorphic(rep, g)) return;
  }
  bucket.push_back(g);
  const std::string key = encode_graph6(g);
  keys_.insert(std::upper_bound(keys_.begin(), keys_.end(), key), key);
}

void ClassSet::insert_key(const std::string& key) {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it != keys_.end() && *it == key) return;
  const Graph g = parse_graph6(key);
  if (g.order() > kMaxCanonicalOrder) {
    auto& bucket = representatives_[fingerprint(g)];
    for (const auto& rep : bucket) {
      if (are_isomorphic(rep, g)) return;
    }
    bucket.push_back(g);
  }
  keys_.insert(std::lower_bound(keys_.begin(), keys_.end(), key), key);
}

// --- Summary ----------------------------------------------------------------

std::uint64_t CensusSummary::total_violations() const {
  std::uint64_t total = 0;
  for (const auto& [n, s] : orders) total += s.violations;
  return total;
}

std::uint64_t CensusSummary::total_scanned() const {
  std::uint64_t total = 0;
  for (const auto& [n, s] : orders) total += s.scanned;
  return total;
}

std::vector<CsvRow> CensusSummary::csv_rows() const {
  std::vector<CsvRow> rows;
  for (const auto& [n, s] : orders) {
    rows.push_back({n, s.scanned, s.diam2, s.eq_half, s.eq_half_minus, s.violations});
  }
  return rows;
}

// --- Spec -------------------------------------------------------------------

void validate(const JobSpec& spec) {
  if (const auto* internal = std::get_if<InternalSource>(&spec.source)) {
    if (internal->min_order < 1 || internal->max_order > kMaxEnumerationOrder ||
        internal->min_order > internal->max_order) {
      throw InputError("internal source needs 1 <= min order <= max order <= 7");
    }
  } else if (std::get<StreamSource>(spec.source).path.empty()) {
    throw InputError("stream source needs a path");
  }
  if (spec.filters.min_delta && *spec.filters.min_delta < 0) throw InputError("min_delta must be >= 0");
  if (spec.filters.max_Delta && *spec.filters.max_Delta < 0) throw InputError("max_Delta must be >= 0");
  if (spec.workers < 1) throw InputError("workers must be >= 1");
  if (spec.checkpoint_interval > 0 && spec.checkpoint_path.empty()) {
    throw InputError("checkpoint interval set without a checkpoint path");
  }
}

std::string spec_hash(const JobSpec& spec) {
  std::ostringstream os;
  if (const auto* internal = std::get_if<InternalSource>(&spec.source)) {
    os << "internal:" << internal->min_order << '-' << internal->max_order;
  } else {
    os << "stream:" << std::get<StreamSource>(spec.source).path;
  }
  const auto& f = spec.filters;
  os << "|diam2=" << f.require_diam2 << "|min_delta=" << f.min_delta.value_or(-1)
     << "|max_Delta=" << f.max_Delta.value_or(-1) << "|ham=" << f.require_hamiltonian;
  os << "|gamma=" << spec.compute.gamma << "|gamma_g=" << spec.compute.gamma_g
     << "|gamma_g_prime=" << spec.compute.gamma_g_prime << "|budget=" << spec.solver.node_budget
     << "|skip_bad=" << spec.skip_bad;
  Fnv1a h;
  h.add(os.str());
  return hex64(h.state);
}

std::string source_hash(const JobSpec& spec) {
  Fnv1a h;
  if (const auto* internal = std::get_if<InternalSource>(&spec.source)) {
    h.add("internal:" + std::to_string(internal->min_order) + "-" + std::to_string(internal->max_order));
    return hex64(h.state);
  }
  const auto& path = std::get<StreamSource>(spec.source).path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph6 stream " + path);
  std::string chunk(1 << 16, '\0');
  while (in.read(chunk.data(), static_cast<std::streamsize>(chunk.size())) || in.gcount() > 0) {
    h.add(std::string_view(chunk.data(), static_cast<std::size_t>(in.gcount())));
  }
  return hex64(h.state);
}

// --- Checks -----------------------------------------------------------------

std::vector<Violation> check_record(const CensusRecord& r) {
  if (!r.gamma_g) throw InputError("record seq " + std::to_string(r.seq) + " has no gamma_g");
  const int value = *r.gamma_g;
  std::vector<Violation> out;
  auto breach = [&](const char* name, int limit, int actual) {
    out.push_back({r.seq, r.graph6, name, limit, actual});
  };
  auto upper = [&](const char* name, const std::optional<int>& limit, int actual) {
    if (limit && actual > *limit) breach(name, *limit, actual);
  };
  const auto& b = r.bounds;
  upper("two_delta", b.two_delta, value);
  upper("delta_corollary", b.delta_corollary, value);
  upper("half", b.half, value);
  upper("half_minus_eleventh", b.half_minus_eleventh, value);
  upper("total_dom", b.total_dom, value);
  if (r.diam == 2 && r.Delta >= r.n - 2 && b.delta_corollary && value != *b.delta_corollary) {
    breach("delta_corollary_equality", *b.delta_corollary, value);
  }
  if (r.gamma) {
    if (value > 2 * *r.gamma - 1) breach("two_gamma", 2 * *r.gamma - 1, value);
    upper("gamma_diam2", b.gamma_diam2, *r.gamma);
    upper("meierling", b.meierling, *r.gamma);
  }
  if (r.eq_half != (value == bounds::half(r.n))) breach("eq_half_flag", bounds::half(r.n), value);
  if (r.eq_half_minus != (value == bounds::half_minus_eleventh(r.n))) {
    breach("eq_half_minus_flag", bounds::half_minus_eleventh(r.n), value);
  }
  return out;
}

std::vector<Violation> verify_bounds(const std::vector<CensusRecord>& records) {
  std::vector<Violation> out;
  for (const auto& r : records) {
    auto v = check_record(r);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::optional<CensusRecord> measure(const Graph& g, std::uint64_t seq, const JobSpec& spec, OrderSummary* stats) {
  Outcome o = evaluate(g, seq, spec);
  if (stats) {
    CensusSummary tmp;
    tmp.orders[g.order()] = std::move(*stats);
    merge(tmp, o);
    *stats = std::move(tmp.orders[g.order()]);
  }
  return std::move(o.record);
}

// --- Pipeline ---------------------------------------------------------------

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    const auto n = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    for (std::size_t t = 0; t < n; ++t) {
      threads.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

CensusSummary scan_stream(const JobSpec& spec, const RecordSink& sink, const ScanHooks& hooks) {
  validate(spec);
  const auto started = std::chrono::steady_clock::now();
  CensusSummary summary = hooks.prior.value_or(CensusSummary{});
  summary.complete = true;
  auto producer = make_producer(spec, hooks.start);
  std::uint64_t seq = hooks.start ? hooks.start->seq : 0;
  const std::uint64_t interval = spec.checkpoint_interval;

  std::vector<Input> batch;
  std::vector<Outcome> outcomes;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < kBatchSize) {
      if (spec.max_inputs > 0 && seq >= spec.max_inputs) {
        summary.complete = false;
        exhausted = true;
        break;
      }
      auto input = producer->next(seq);
      if (!input) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*input));
      ++seq;
      if (interval > 0 && seq % interval == 0) break;
    }

    outcomes.assign(batch.size(), Outcome{});
    parallel_for(batch.size(), spec.workers, [&](std::size_t i) { outcomes[i] = process(batch[i], spec); });

    for (const auto& o : outcomes) {
      if (o.bad && !spec.skip_bad) throw InputError("malformed graph6 input at " + o.error);
      merge(summary, o);
      if (o.record) sink(*o.record);
    }
    if (interval > 0 && !batch.empty() && seq % interval == 0 && hooks.on_checkpoint) {
      hooks.on_checkpoint(producer->position(seq), summary);
    }
  }
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

RunResult run_census(const JobSpec& spec, const std::string& output_path, bool resume) {
  validate(spec);
  RunResult result;
  const std::string spec_id = spec_hash(spec);
  const std::string source_id = source_hash(spec);
  const bool checkpointing = !spec.checkpoint_path.empty();

  ScanHooks hooks;
  std::uint64_t output_bytes = 0;
  if (resume) {
    if (!checkpointing) throw InputError("resume needs a checkpoint path");
    const Checkpoint cp = read_checkpoint(spec.checkpoint_path);
    if (cp.spec_hash != spec_id) throw InputError("checkpoint was written for a different job spec; refusing to resume");
    if (cp.source_hash != source_id) throw InputError("checkpoint source hash differs; refusing to resume");
    if (!std::filesystem::exists(output_path) || std::filesystem::file_size(output_path) < cp.output_bytes) {
      throw InputError("output " + output_path + " is shorter than the checkpoint records");
    }
    std::filesystem::resize_file(output_path, cp.output_bytes);
    output_bytes = cp.output_bytes;
    hooks.start = cp.position;
    hooks.prior = cp.summary;
    result.resumed = true;
  }

  std::ofstream out(output_path, std::ios::binary | (resume ? std::ios::app : std::ios::trunc));
  if (!out) throw InputError("cannot write census output " + output_path);

  Checkpoint cp;
  cp.spec_hash = spec_id;
  cp.source_hash = source_id;
  if (checkpointing && !resume) {
    cp.position = make_producer(spec, std::nullopt)->position(0);
    write_checkpoint(spec.checkpoint_path, cp);
  }
  hooks.on_checkpoint = [&](const ScanPosition& pos, const CensusSummary& summary) {
    if (!checkpointing) return;
    out.flush();
    cp.position = pos;
    cp.output_bytes = output_bytes;
    cp.summary = summary;
    write_checkpoint(spec.checkpoint_path, cp);
  };

  result.summary = scan_stream(spec, [&](const CensusRecord& r) {
    const std::string line = to_jsonl(r);
    out << line << '\n';
    output_bytes += line.size() + 1;
  }, hooks);
  out.flush();
  result.completed = result.summary.complete;

  if (result.completed) {
    std::ofstream csv(csv_sibling_path(output_path), std::ios::binary | std::ios::trunc);
    write_csv(csv, result.summary.csv_rows());
    if (checkpointing) {
      cp.output_bytes = output_bytes;
      cp.summary = result.summary;
      cp.complete = true;
      cp.position.seq = result.summary.total_scanned() + result.summary.bad_lines;
      // Leave the position at the end of the source so a resume emits nothing.
      auto end = make_producer(spec, hooks.start);
      while (end->next(0)) {
      }
      cp.position = end->position(cp.position.seq);
      write_checkpoint(spec.checkpoint_path, cp);
    }
  }
  return result;
}

// --- Campaigns --------------------------------------------------------------

std::vector<EqualityClasses> equality_census_small(int max_n, int workers) {
  JobSpec spec;
  spec.source = InternalSource{1, max_n};
  spec.filters.require_diam2 = true;
  spec.compute = {false, true, false};
  spec.workers = workers;
  const CensusSummary summary = scan_stream(spec, [](const CensusRecord&) {});
  std::vector<EqualityClasses> out;
  for (int n = 1; n <= max_n; ++n) {
    EqualityClasses c;
    c.n = n;
    if (const auto it = summary.orders.find(n); it != summary.orders.end()) c.keys = it->second.eq_half_classes.keys();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<RallRow> rall_check(int max_n, int workers) {
  if (max_n > kMaxRallOrder) throw InputError("rall_check supports n <= 8");
  std::vector<RallRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    std::vector<Edge> chords;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (j - i != 1 && !(i == 0 && j == n - 1)) chords.emplace_back(i, j);
      }
    }
    const std::uint64_t total = std::uint64_t{1} << chords.size();
    constexpr std::uint64_t kChunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<RallRow> partial(chunks);
    parallel_for(chunks, workers, [&](std::size_t c) {
      RallRow& row = partial[c];
      std::vector<Edge> edges;
      for (std::uint64_t mask = c * kChunk; mask < std::min(total, (c + 1) * kChunk); ++mask) {
        edges.clear();
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        for (std::size_t k = 0; k < chords.size(); ++k) {
          if ((mask >> k) & 1U) edges.push_back(chords[k]);
        }
        const Graph g = Graph::from_edges(n, edges);
        ++row.hamiltonian;
        int delta = n;
        for (int v = 0; v < n; ++v) delta = std::min(delta, g.degree(v));
        if (delta >= 5) {
          ++row.skipped;
          continue;
        }
        ++row.checked;
        const int value = gamma_g(g);
        row.max_gamma_g = std::max(row.max_gamma_g, value);
        if (value > bounds::half(n)) {
          ++row.violations;
          row.counterexamples.push_back(encode_graph6(g));
        }
      }
    });
    RallRow row;
    row.n = n;
    for (const auto& p : partial) {
      row.hamiltonian += p.hamiltonian;
      row.skipped += p.skipped;
      row.checked += p.checked;
      row.violations += p.violations;
      row.max_gamma_g = std::max(row.max_gamma_g, p.max_gamma_g);
      row.counterexamples.insert(row.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::vector<Graph> connected_graphs(int n, bool diam2_only) {
  std::vector<Graph> out;
  enumerate_labeled_connected(n, [&](const Graph& g) {
    if (!diam2_only || is_diam2(g)) out.push_back(g);
  });
  return out;
}

SweepReport sweep(int max_n, int workers, bool diam2_only,
                  const std::function<std::uint64_t(const Graph&, bool&)>& check) {
  SweepReport report;
  std::mutex mutex;
  for (int n = 1; n <= max_n; ++n) {
    const auto graphs = connected_graphs(n, diam2_only);
    std::vector<std::uint64_t> checks(graphs.size());
    std::vector<char> failed(graphs.size(), 0);
    parallel_for(graphs.size(), workers, [&](std::size_t i) {
      bool bad = false;
      checks[i] = check(graphs[i], bad);
      failed[i] = bad ? 1 : 0;
    });
    report.graphs += graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      report.checks += checks[i];
      if (failed[i]) {
        ++report.violations;
        report.counterexamples.push_back(encode_graph6(graphs[i]));
      }
    }
  }
  return report;
}

}  // namespace

SweepReport partial_bound_sweep(int max_n, int workers) {
  if (max_n > kMaxEnumerationOrder) throw InputError("partial_bound_sweep supports n <= 7");
  return sweep(max_n, workers, true, [](const Graph& g, bool& bad) {
    Solver solver(g);
    std::uint64_t checks = 0;
    const std::uint64_t all = g.vertices().bits();
    for (std::uint64_t x = 1; x <= all; ++x) {
      const VertexSet undominated(x);
      const VertexSet dominated = undominated.complement(g.order());
      const int size = undominated.count();
      if (solver.value(dominated, Player::kDominator) > bounds::partial(size, Player::kDominator)) bad = true;
      if (solver.value(dominated, Player::kStaller) > bounds::partial(size, Player::kStaller)) bad = true;
      checks += 2;
    }
    return checks;
  });
}

SweepReport ui_bound_sweep(int max_n, int workers) {
  if (max_n > kMaxEnumerationOrder) throw InputError("ui_bound_sweep supports n <= 7");
  return sweep(max_n, workers, false, [](const Graph& g, bool& bad) {
    const UiVerdict verdict = verify_ui_bounds(g);
    bad = !verdict.holds;
    return verdict.plays_explored;
  });
}

}  // namespace domgame::census
