#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domgame/bounds.hpp"

namespace domgame::census {

inline constexpr int kRecordSchemaVersion = 1;

/// One graph's measurement row. Fields that were not computed are nullopt and
/// serialise as JSON null.
struct CensusRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int delta = 0;
  int Delta = 0;
  std::optional<int> diam;
  std::optional<int> gamma;
  std::optional<int> gamma_g;
  std::optional<int> gamma_g_prime;
  bounds::BoundReport bounds;
  bool eq_half = false;        ///< gamma_g == ceil(n/2)
  bool eq_half_minus = false;  ///< gamma_g == ceil(n/2) - floor(n/11)
  bool violation = false;
  std::uint64_t seq = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&);
};

/// A single JSONL line (no trailing newline). Keys appear in the order
/// graph6, n, m, delta, Delta, diam, gamma, gamma_g, gamma_g_prime, bounds,
/// eq_half, eq_half_minus, violation, seq, schema.
std::string to_jsonl(const CensusRecord& record);

/// Throws InputError on malformed JSON, missing keys, or a schema mismatch.
CensusRecord from_jsonl(const std::string& line);

/// Reads a JSONL stream; errors name the offending 1-based line.
std::vector<CensusRecord> read_records(std::istream& in);
std::vector<CensusRecord> read_records(const std::string& path);

/// Per-order summary row of the CSV sibling file.
struct CsvRow {
  int n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t diam2 = 0;
  std::uint64_t eq_half = 0;
  std::uint64_t eq_half_minus = 0;
  std::uint64_t violations = 0;
};

inline constexpr const char* kCsvHeader = "n,scanned,diam2,eq_half,eq_half_minus,violations";

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);
/// Rows derived from the records themselves (scanned = records of that order).
std::vector<CsvRow> summarize_records(const std::vector<CensusRecord>& records);

/// "<dir>/<stem>.summary.csv" next to a JSONL path.
std::string csv_sibling_path(const std::string& jsonl_path);

/// Writes JSONL to `path` and the CSV summary beside it.
void write_records(const std::string& path, const std::vector<CensusRecord>& records);

}  // namespace domgame::census
