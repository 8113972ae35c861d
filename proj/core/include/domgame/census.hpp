#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domgame/canonical.hpp"
#include "domgame/records.hpp"
#include "domgame/solver.hpp"

namespace domgame::census {

/// Every connected labeled graph with min_order <= n <= max_order (max 7).
struct InternalSource {
  int min_order = 1;
  int max_order = 1;
};

/// graph6 file: one graph per line, optional ">>graph6<<" header. Blank lines
/// are skipped and a trailing CR is tolerated.
struct StreamSource {
  std::string path;
};

struct Filters {
  bool require_diam2 = false;
  std::optional<int> min_delta;
  std::optional<int> max_Delta;
  bool require_hamiltonian = false;
};

struct ComputeSet {
  bool gamma = true;
  bool gamma_g = true;
  bool gamma_g_prime = true;
};

struct JobSpec {
  std::variant<InternalSource, StreamSource> source = InternalSource{};
  Filters filters;
  ComputeSet compute;
  SolverOptions solver;
  int workers = 1;
  /// Inputs between checkpoints; 0 disables checkpointing.
  std::uint64_t checkpoint_interval = 0;
  std::string checkpoint_path;
  /// Malformed stream lines are counted and skipped instead of aborting.
  bool skip_bad = false;
  /// Stop after this many inputs (0 = no limit). Simulates an interrupted run.
  std::uint64_t max_inputs = 0;
};

/// Throws InputError on an inconsistent spec (internal order outside [1, 7],
/// negative filters, zero workers).
void validate(const JobSpec& spec);

/// Hash of everything that determines the record stream: source, filters,
/// compute set, node budget. Worker count and checkpoint cadence are excluded.
std::string spec_hash(const JobSpec& spec);

/// Equality winners of one order, deduplicated up to isomorphism. Keys are
/// canonical forms for n <= 10 and the first representative's graph6 above.
class ClassSet {
 public:
  void insert(const Graph& g);
  void insert_key(const std::string& key);
  std::size_t size() const { return keys_.size(); }
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;  // sorted
  std::map<Fingerprint, std::vector<Graph>> representatives_;
};

struct OrderSummary {
  int n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;  ///< passed the filters
  std::uint64_t diam2 = 0;
  std::uint64_t eq_half = 0;
  std::uint64_t eq_half_minus = 0;
  std::uint64_t violations = 0;
  std::uint64_t budget_exceeded = 0;
  /// Twin-free diameter-2 graphs with Delta in {n-3, n-4} and a gamma_g value.
  std::uint64_t twin_free_delta_checked = 0;
  std::uint64_t nodes_visited = 0;
  ClassSet eq_half_classes;        ///< diameter-2 winners only
  ClassSet eq_half_minus_classes;  ///< diameter-2 winners only
};

struct CensusSummary {
  std::map<int, OrderSummary> orders;
  bool complete = true;  ///< false when the scan stopped at max_inputs
  std::uint64_t bad_lines = 0;
  double wall_seconds = 0.0;

  std::uint64_t total_violations() const;
  std::uint64_t total_scanned() const;
  std::vector<CsvRow> csv_rows() const;
};

/// A bound that a record breaks.
struct Violation {
  std::uint64_t seq = 0;
  std::string graph6;
  std::string bound;
  int limit = 0;
  int actual = 0;
};

/// Checks every applicable bound for one record:
///   gamma_g <= two_delta, delta_corollary, half, half_minus_eleventh, total_dom;
///   gamma_g == delta_corollary when Delta >= n - 2 (diameter 2);
///   gamma_g <= 2 gamma - 1; gamma <= gamma_diam2 and meierling;
///   eq_half / eq_half_minus consistent with gamma_g.
/// Throws InputError if the record has no gamma_g.
std::vector<Violation> check_record(const CensusRecord& record);

/// Concatenated check_record results; empty iff every record is clean.
std::vector<Violation> verify_bounds(const std::vector<CensusRecord>& records);

/// Measures one graph under `spec`: nullopt when filtered out.
/// Also checks that twin-free diameter-2 graphs with Delta in {n-3, n-4}
/// have gamma_g = 3 and flags a violation otherwise.
std::optional<CensusRecord> measure(const Graph& g, std::uint64_t seq, const JobSpec& spec,
                                    OrderSummary* stats = nullptr);

using RecordSink = std::function<void(const CensusRecord&)>;

/// Position of a scan within its source.
struct ScanPosition {
  int order = 0;              ///< internal: current order
  std::uint64_t offset = 0;   ///< internal: next bit pattern; stream: byte offset
  std::uint64_t line = 0;     ///< stream: lines consumed
  std::uint64_t seq = 0;      ///< next input ordinal
};

struct ScanHooks {
  /// Resume point and the summary accumulated before it.
  std::optional<ScanPosition> start;
  std::optional<CensusSummary> prior;
  /// Called after every `checkpoint_interval` inputs, once the sink has seen
  /// every record before `position`.
  std::function<void(const ScanPosition&, const CensusSummary&)> on_checkpoint;
};

/// Parses, filters and measures every input, handing records to `sink` in seq
/// order regardless of worker count. Throws InputError on unreadable sources
/// or (without skip_bad) malformed graph6 lines, naming the line number.
CensusSummary scan_stream(const JobSpec& spec, const RecordSink& sink, const ScanHooks& hooks = {});

struct RunResult {
  CensusSummary summary;
  bool resumed = false;
  bool completed = false;  ///< false when stopped by max_inputs
};

/// scan_stream writing JSONL to `output_path` (and the CSV summary beside it
/// when complete), with checkpoints at spec.checkpoint_path. With `resume`,
/// the checkpoint must match the JobSpec and source; output is truncated to the
/// checkpointed length and the scan continues, giving the same bytes as an
/// uninterrupted run.
RunResult run_census(const JobSpec& spec, const std::string& output_path, bool resume = false);

/// Hash of a source's identity (file bytes for streams).
std::string source_hash(const JobSpec& spec);

// --- Campaigns -------------------------------------------------------------

struct EqualityClasses {
  int n = 0;
  std::vector<std::string> keys;  ///< canonical graph6 keys, sorted
};

/// Isomorphism classes of connected diameter-2 graphs with gamma_g = ceil(n/2)
/// for every n <= max_n (max 7).
std::vector<EqualityClasses> equality_census_small(int max_n, int workers = 1);

struct RallRow {
  int n = 0;
  std::uint64_t hamiltonian = 0;  ///< labeled graphs containing the cycle 0-1-...-(n-1)-0
  std::uint64_t skipped = 0;  ///< Hamiltonian with delta >= 5
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  int max_gamma_g = 0;
  std::vector<std::string> counterexamples;
};

inline constexpr int kMaxRallOrder = 8;

/// gamma_g <= ceil(n/2) over Hamiltonian graphs of order 3..max_n (max 8),
/// skipping those with delta >= 5. Every Hamiltonian graph is isomorphic to a
/// supergraph of the cycle 0-1-...-(n-1)-0, so the scan runs over the
/// 2^(n(n-3)/2) chord sets added to that cycle.
std::vector<RallRow> rall_check(int max_n, int workers = 1);

struct SweepReport {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;  ///< graph6 of offending graphs
};

/// Partial-game bounds on every diameter-2 graph of order <= max_n and every
/// non-empty undominated set X, for both players.
SweepReport partial_bound_sweep(int max_n, int workers = 1);

/// verify_ui_bounds on every connected graph of order <= max_n.
SweepReport ui_bound_sweep(int max_n, int workers = 1);

/// Runs fn(i) for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace domgame::census
