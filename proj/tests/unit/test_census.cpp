#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

#include "domgame/canonical.hpp"
#include "domgame/census.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/error.hpp"
#include "domgame/families.hpp"
#include "domgame/graph6.hpp"
#include "domgame/hamiltonian.hpp"
#include "domgame/metrics.hpp"
#include "domgame/records.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace domgame;
using namespace domgame::census;

namespace {

CensusRecord petersen_record() {
  JobSpec spec;
  return *measure(petersen(), 0, spec);
}

std::string scan_to_string(const JobSpec& spec, CensusSummary* summary = nullptr) {
  std::ostringstream os;
  const auto s = scan_stream(spec, [&](const CensusRecord& r) { os << to_jsonl(r) << '\n'; });
  if (summary) *summary = s;
  return os.str();
}

std::string g6_lines(const std::vector<Graph>& graphs) {
  std::string text;
  for (const auto& g : graphs) text += encode_graph6(g) + "\n";
  return text;
}

std::vector<Graph> sample_graphs(int count) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(6 + i % 4, 1, 2, 1000 + static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("Petersen record") {
  const CensusRecord r = petersen_record();
  CHECK(r.gamma_g == 5);
  CHECK(r.gamma == 3);
  CHECK(r.gamma_g_prime == oracle::game_value(petersen(), 0, false));
  CHECK(r.eq_half);
  CHECK(r.eq_half_minus);
  CHECK_FALSE(r.violation);
  CHECK(check_record(r).empty());
  CHECK(to_jsonl(r).find("\"gamma_g\":5") != std::string::npos);
}

TEST_CASE("JSONL key order") {
  const std::string line = to_jsonl(petersen_record());
  const char* keys[] = {"\"graph6\"", "\"n\"", "\"m\"", "\"delta\"", "\"Delta\"", "\"diam\"", "\"gamma\"",
                        "\"gamma_g\"", "\"gamma_g_prime\"", "\"bounds\"", "\"eq_half\"", "\"eq_half_minus\"",
                        "\"violation\"", "\"seq\"", "\"schema\""};
  std::size_t at = 0;
  for (const char* key : keys) {
    const auto pos = line.find(key, at);
    CHECK_MESSAGE(pos != std::string::npos, key);
    at = pos;
  }
}

TEST_CASE("injected faults are reported") {
  CensusRecord r = petersen_record();
  r.gamma_g = 6;
  const auto v = check_record(r);
  std::set<std::string> names;
  for (const auto& x : v) names.insert(x.bound);
  CHECK(names.count("half") == 1);
  CHECK(names.count("two_delta") == 1);
  for (const auto& x : v) {
    if (x.bound == "half") {
      CHECK(x.limit == 5);
      CHECK(x.actual == 6);
      CHECK(x.graph6 == "IheA@GUAo");
    }
  }

  CensusRecord g = petersen_record();
  g.gamma = 2;
  g.gamma_g = 5;  // above 2 gamma - 1 = 3
  bool two_gamma = false;
  for (const auto& x : check_record(g)) two_gamma |= x.bound == "two_gamma";
  CHECK(two_gamma);

  CensusRecord missing = petersen_record();
  missing.gamma_g.reset();
  CHECK_THROWS_AS(check_record(missing), InputError);
  CHECK(verify_bounds({petersen_record(), r}).size() == v.size());
}

TEST_CASE("records round trip through files") {
  TempDir dir;
  std::vector<CensusRecord> records;
  JobSpec spec;
  spec.source = InternalSource{1, 5};
  scan_stream(spec, [&](const CensusRecord& r) {
    if (records.size() < 100) records.push_back(r);
  });
  REQUIRE(records.size() == 100);
  const std::string path = dir.file("out.jsonl");
  write_records(path, records);
  CHECK(read_records(path) == records);
  CHECK(std::filesystem::exists(dir.file("out.summary.csv")));

  const std::string empty = dir.file("empty.jsonl");
  write_records(empty, {});
  CHECK(slurp(empty).empty());
  CHECK(slurp(dir.file("empty.summary.csv")) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("malformed record files name the line") {
  const std::string good = to_jsonl(petersen_record());
  std::istringstream bad_json(good + "\n{not json\n");
  try {
    read_records(bad_json);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::string other_schema = good;
  other_schema.replace(other_schema.find("\"schema\":1"), 10, "\"schema\":2");
  CHECK_THROWS_AS(from_jsonl(other_schema), InputError);
  std::string no_field = good;
  no_field.replace(no_field.find("\"seq\""), 5, "\"qes\"");
  CHECK_THROWS_AS(from_jsonl(no_field), InputError);
}

TEST_CASE("internal scan at order four") {
  JobSpec spec;
  spec.source = InternalSource{4, 4};
  spec.filters.require_diam2 = true;
  std::vector<Graph> graphs;
  CensusSummary summary;
  summary = scan_stream(spec, [&](const CensusRecord& r) { graphs.push_back(parse_graph6(r.graph6)); });
  CHECK(summary.orders.at(4).scanned == 38);
  CHECK(summary.orders.at(4).passed == graphs.size());
  std::vector<Graph> classes;
  for (const auto& g : graphs) {
    bool seen = false;
    for (const auto& c : classes) seen = seen || oracle::isomorphic(c, g);
    if (!seen) classes.push_back(g);
  }
  CHECK(classes.size() == 4);
  bool has_c4 = false;
  for (const auto& c : classes) has_c4 = has_c4 || oracle::isomorphic(c, cycle(4));
  CHECK(has_c4);
}

TEST_CASE("records arrive in seq order with exact counts") {
  JobSpec spec;
  spec.source = InternalSource{1, 5};
  std::uint64_t expected = 0;
  bool ordered = true;
  const auto summary = scan_stream(spec, [&](const CensusRecord& r) {
    ordered = ordered && r.seq == expected;
    ++expected;
  });
  CHECK(ordered);
  CHECK(summary.total_scanned() == 1 + 1 + 4 + 38 + 728);
  CHECK(expected == summary.total_scanned());
  CHECK(summary.complete);
}

TEST_CASE("worker count does not change output") {
  JobSpec spec;
  spec.source = InternalSource{1, 6};
  spec.filters.require_diam2 = true;
  spec.compute = {true, true, false};
  spec.workers = 1;
  const std::string one = scan_to_string(spec);
  spec.workers = 8;
  const std::string eight = scan_to_string(spec);
  CHECK(one == eight);
  CHECK_FALSE(one.empty());
}

TEST_CASE("filters compose") {
  JobSpec spec;
  spec.source = InternalSource{5, 6};
  spec.filters.require_diam2 = true;
  spec.filters.min_delta = 2;
  spec.filters.max_Delta = 4;
  spec.filters.require_hamiltonian = true;
  spec.compute = {false, false, false};
  scan_stream(spec, [&](const CensusRecord& r) {
    const Graph g = parse_graph6(r.graph6);
    CHECK(r.diam == 2);
    CHECK(r.delta >= 2);
    CHECK(r.Delta <= 4);
    CHECK(oracle::hamiltonian(g));
    CHECK_FALSE(r.gamma_g.has_value());
  });
}

TEST_CASE("stream sources") {
  TempDir dir;
  const std::string k2 = dir.file("k2.g6");
  spit(k2, "A_\n");
  JobSpec spec;
  spec.source = StreamSource{k2};
  spec.filters.require_diam2 = true;
  CensusSummary summary;
  CHECK(scan_to_string(spec, &summary).empty());
  CHECK(summary.orders.at(2).scanned == 1);

  const std::string mixed = dir.file("mixed.g6");
  spit(mixed, ">>graph6<<\nIheA@GUAo\r\n\nC]\n");
  spec.source = StreamSource{mixed};
  const std::string out = scan_to_string(spec, &summary);
  CHECK(summary.total_scanned() == 2);
  CHECK(out.find("\"seq\":0") != std::string::npos);
  CHECK(out.find("\"seq\":1") != std::string::npos);

  const std::string bad = dir.file("bad.g6");
  spit(bad, "C]\nnot graph6\nC]\n");
  spec.source = StreamSource{bad};
  try {
    scan_to_string(spec);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  spec.skip_bad = true;
  scan_to_string(spec, &summary);
  CHECK(summary.bad_lines == 1);
  CHECK(summary.total_scanned() == 2);

  spec.source = StreamSource{dir.file("missing.g6")};
  CHECK_THROWS_AS(scan_to_string(spec), InputError);
}

TEST_CASE("spec validation") {
  JobSpec spec;
  spec.source = InternalSource{1, 8};
  CHECK_THROWS_AS(validate(spec), InputError);
  spec.source = InternalSource{0, 3};
  CHECK_THROWS_AS(validate(spec), InputError);
  spec.source = InternalSource{1, 3};
  spec.workers = 0;
  CHECK_THROWS_AS(validate(spec), InputError);
  spec.workers = 1;
  spec.filters.min_delta = -1;
  CHECK_THROWS_AS(validate(spec), InputError);
  spec.filters.min_delta.reset();
  spec.checkpoint_interval = 5;
  CHECK_THROWS_AS(validate(spec), InputError);
  spec.checkpoint_path = "x";
  CHECK_NOTHROW(validate(spec));
  spec.source = StreamSource{""};
  CHECK_THROWS_AS(validate(spec), InputError);
}

TEST_CASE("spec hash ignores workers and cadence, not filters") {
  JobSpec a;
  a.source = InternalSource{1, 5};
  JobSpec b = a;
  b.workers = 4;
  b.checkpoint_interval = 9;
  b.checkpoint_path = "somewhere";
  CHECK(spec_hash(a) == spec_hash(b));
  b.filters.require_diam2 = true;
  CHECK(spec_hash(a) != spec_hash(b));
}

TEST_CASE("interrupted stream run resumes to identical bytes") {
  TempDir dir;
  const std::string input = dir.file("in.g6");
  spit(input, g6_lines(sample_graphs(100)));

  JobSpec spec;
  spec.source = StreamSource{input};
  spec.compute = {true, true, false};
  spec.workers = 3;
  const std::string reference = dir.file("reference.jsonl");
  REQUIRE(run_census(spec, reference).completed);

  spec.checkpoint_path = dir.file("ckpt.json");
  spec.checkpoint_interval = 10;
  spec.max_inputs = 55;  // records 50..54 are written after the last checkpoint
  const std::string output = dir.file("out.jsonl");
  const auto first = run_census(spec, output);
  CHECK_FALSE(first.completed);
  CHECK_FALSE(std::filesystem::exists(dir.file("out.summary.csv")));

  spec.max_inputs = 0;
  const auto second = run_census(spec, output, true);
  CHECK(second.resumed);
  CHECK(second.completed);
  CHECK(slurp(output) == slurp(reference));
  CHECK(slurp(dir.file("out.summary.csv")) == slurp(dir.file("reference.summary.csv")));
  CHECK(second.summary.total_scanned() == 100);

  // Resuming a finished run emits nothing new.
  const auto third = run_census(spec, output, true);
  CHECK(third.completed);
  CHECK(slurp(output) == slurp(reference));
}

TEST_CASE("interrupted internal run resumes to identical bytes") {
  TempDir dir;
  JobSpec spec;
  spec.source = InternalSource{1, 6};
  spec.filters.require_diam2 = true;
  spec.compute = {false, true, false};
  const std::string reference = dir.file("reference.jsonl");
  run_census(spec, reference);

  spec.checkpoint_path = dir.file("ckpt.json");
  spec.checkpoint_interval = 1000;
  spec.max_inputs = 12345;
  const std::string output = dir.file("out.jsonl");
  run_census(spec, output);
  spec.max_inputs = 0;
  const auto resumed = run_census(spec, output, true);
  CHECK(slurp(output) == slurp(reference));
  CHECK(resumed.summary.orders.at(6).eq_half_classes.size() == 5);
}

TEST_CASE("resume refuses a different spec or source") {
  TempDir dir;
  const std::string input = dir.file("in.g6");
  spit(input, g6_lines(sample_graphs(20)));
  JobSpec spec;
  spec.source = StreamSource{input};
  spec.checkpoint_path = dir.file("ckpt.json");
  spec.checkpoint_interval = 5;
  spec.max_inputs = 10;
  const std::string output = dir.file("out.jsonl");
  run_census(spec, output);

  JobSpec edited = spec;
  edited.filters.require_diam2 = true;
  CHECK_THROWS_AS(run_census(edited, output, true), InputError);

  spit(input, g6_lines(sample_graphs(21)));
  CHECK_THROWS_AS(run_census(spec, output, true), InputError);

  spit(spec.checkpoint_path, "{\"format\":\"something else\"}");
  CHECK_THROWS_AS(run_census(spec, output, true), InputError);

  JobSpec no_checkpoint = spec;
  no_checkpoint.checkpoint_path.clear();
  no_checkpoint.checkpoint_interval = 0;
  CHECK_THROWS_AS(run_census(no_checkpoint, output, true), InputError);
}

TEST_CASE("checkpointing an empty stream") {
  TempDir dir;
  const std::string input = dir.file("empty.g6");
  spit(input, "");
  JobSpec spec;
  spec.source = StreamSource{input};
  spec.checkpoint_path = dir.file("ckpt.json");
  spec.checkpoint_interval = 4;
  const std::string output = dir.file("out.jsonl");
  CHECK(run_census(spec, output).completed);
  const auto resumed = run_census(spec, output, true);
  CHECK(resumed.completed);
  CHECK(resumed.summary.total_scanned() == 0);
  CHECK(slurp(output).empty());
  CHECK(slurp(dir.file("out.summary.csv")) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("twin-free graphs with Delta in {n-3, n-4} have gamma_g = 3") {
  JobSpec spec;
  spec.source = InternalSource{1, 6};
  spec.filters.require_diam2 = true;
  spec.compute = {false, true, false};
  const auto summary = scan_stream(spec, [](const CensusRecord&) {});
  std::uint64_t checked = 0;
  for (const auto& [n, s] : summary.orders) {
    checked += s.twin_free_delta_checked;
    CHECK(s.violations == 0);
  }
  CHECK(checked > 0);
  JobSpec one;
  OrderSummary stats;
  measure(mycielski_complete(3), 0, one, &stats);
  CHECK(stats.twin_free_delta_checked == 1);
  CHECK(stats.violations == 0);
}

TEST_CASE("equality classes at small orders") {
  const auto classes = equality_census_small(6, 2);
  REQUIRE(classes.size() == 6);
  CHECK(classes[2].keys.empty());
  REQUIRE(classes[3].keys.size() == 1);
  CHECK(classes[3].keys[0] == canonical_form(cycle(4)));
  REQUIRE(classes[4].keys.size() == 1);
  CHECK(classes[4].keys[0] == canonical_form(cycle(5)));
  std::set<std::string> expected;
  for (const auto& f : named_fixtures()) {
    if (f.graph.order() == 6) expected.insert(canonical_form(f.graph));
  }
  CHECK(expected.size() == 5);
  CHECK(std::set<std::string>(classes[5].keys.begin(), classes[5].keys.end()) == expected);
}

TEST_CASE("class sets above the canonical limit") {
  ClassSet set;
  const Graph h = h_graph(4, 2);
  set.insert(h);
  std::vector<int> perm(11);
  for (int i = 0; i < 11; ++i) perm[i] = (i * 3 + 1) % 11;
  set.insert(h.relabeled(perm));
  CHECK(set.size() == 1);
  set.insert_key(encode_graph6(h.relabeled(perm)));
  CHECK(set.size() == 1);
  set.insert(mycielski_complete(5));
  CHECK(set.size() == 2);
  set.insert(petersen());
  set.insert_key(canonical_form(petersen()));
  CHECK(set.size() == 3);
}

TEST_CASE("rall check") {
  const auto rows = rall_check(6);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CHECK(r.violations == 0);
    CHECK(r.hamiltonian == r.checked + r.skipped);
    CHECK(r.max_gamma_g <= (r.n + 1) / 2);
  }
  CHECK(rows[2].n == 5);
  CHECK(rows[2].max_gamma_g == 3);  // C5 is among them
  CHECK(rows[3].skipped == 1);      // K6
  CHECK_THROWS_AS(rall_check(9), InputError);
}

TEST_CASE("cycle supersets reach every Hamiltonian class") {
  for (int n = 3; n <= 6; ++n) {
    std::set<std::string> from_labeled;
    enumerate_labeled_connected(n, [&](const Graph& g) {
      if (oracle::hamiltonian(g)) from_labeled.insert(canonical_form(g));
    });
    std::set<std::string> from_cycle;
    const auto base = cycle(n).edges();
    std::vector<Edge> chords;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (!cycle(n).adjacent(i, j)) chords.emplace_back(i, j);
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << chords.size()); ++mask) {
      auto edges = base;
      for (std::size_t k = 0; k < chords.size(); ++k) {
        if (mask >> k & 1U) edges.push_back(chords[k]);
      }
      from_cycle.insert(canonical_form(Graph::from_edges(n, edges)));
    }
    CHECK(from_cycle == from_labeled);
  }
}

TEST_CASE("small sweeps") {
  const auto partial = partial_bound_sweep(5);
  CHECK(partial.violations == 0);
  CHECK(partial.graphs > 0);
  CHECK(partial.checks > 0);
  const auto ui = ui_bound_sweep(5, 2);
  CHECK(ui.violations == 0);
  CHECK(ui.graphs == 1 + 1 + 4 + 38 + 728);
}

TEST_CASE("parallel_for covers every index and propagates failures") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::size_t i) {
                                 if (i == 37) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

}  // TEST_SUITE
