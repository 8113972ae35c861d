#include "domgame/records.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

#include "domgame/error.hpp"

namespace domgame::census {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::optional<int> get_opt(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<int>();
}

ordered_json bounds_json(const bounds::BoundReport& b) {
  ordered_json j = ordered_json::object();
  j["two_delta"] = opt(b.two_delta);
  j["delta_corollary"] = opt(b.delta_corollary);
  j["half"] = opt(b.half);
  j["half_minus_eleventh"] = opt(b.half_minus_eleventh);
  j["gamma_diam2"] = opt(b.gamma_diam2);
  j["meierling"] = opt(b.meierling);
  j["total_dom"] = opt(b.total_dom);
  return j;
}

bounds::BoundReport bounds_from_json(const ordered_json& j) {
  bounds::BoundReport b;
  b.two_delta = get_opt(j, "two_delta");
  b.delta_corollary = get_opt(j, "delta_corollary");
  b.half = get_opt(j, "half");
  b.half_minus_eleventh = get_opt(j, "half_minus_eleventh");
  b.gamma_diam2 = get_opt(j, "gamma_diam2");
  b.meierling = get_opt(j, "meierling");
  b.total_dom = get_opt(j, "total_dom");
  return b;
}

bool same_bounds(const bounds::BoundReport& a, const bounds::BoundReport& b) {
  return a.two_delta == b.two_delta && a.delta_corollary == b.delta_corollary && a.half == b.half &&
         a.half_minus_eleventh == b.half_minus_eleventh && a.gamma_diam2 == b.gamma_diam2 &&
         a.meierling == b.meierling && a.total_dom == b.total_dom;
}

}  // namespace

bool operator==(const CensusRecord& a, const CensusRecord& b) {
  return a.graph6 == b.graph6 && a.n == b.n && a.m == b.m && a.delta == b.delta && a.Delta == b.Delta &&
         a.diam == b.diam && a.gamma == b.gamma && a.gamma_g == b.gamma_g && a.gamma_g_prime == b.gamma_g_prime &&
         same_bounds(a.bounds, b.bounds) && a.eq_half == b.eq_half && a.eq_half_minus == b.eq_half_minus &&
         a.violation == b.violation && a.seq == b.seq;
}

std::string to_jsonl(const CensusRecord& r) {
  ordered_json j = ordered_json::object();
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["Delta"] = r.Delta;
  j["diam"] = opt(r.diam);
  j["gamma"] = opt(r.gamma);
  j["gamma_g"] = opt(r.gamma_g);
  j["gamma_g_prime"] = opt(r.gamma_g_prime);
  j["bounds"] = bounds_json(r.bounds);
  j["eq_half"] = r.eq_half;
  j["eq_half_minus"] = r.eq_half_minus;
  j["violation"] = r.violation;
  j["seq"] = r.seq;
  j["schema"] = kRecordSchemaVersion;
  return j.dump();
}

CensusRecord from_jsonl(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed record: ") + e.what());
  }
  try {
    if (!j.is_object()) throw InputError("record is not a JSON object");
    if (j.at("schema").get<int>() != kRecordSchemaVersion) {
      throw InputError("record schema version " + j.at("schema").dump() + " != " +
                       std::to_string(kRecordSchemaVersion));
    }
    CensusRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.delta = j.at("delta").get<int>();
    r.Delta = j.at("Delta").get<int>();
    r.diam = get_opt(j, "diam");
    r.gamma = get_opt(j, "gamma");
    r.gamma_g = get_opt(j, "gamma_g");
    r.gamma_g_prime = get_opt(j, "gamma_g_prime");
    r.bounds = bounds_from_json(j.at("bounds"));
    r.eq_half = j.at("eq_half").get<bool>();
    r.eq_half_minus = j.at("eq_half_minus").get<bool>();
    r.violation = j.at("violation").get<bool>();
    r.seq = j.at("seq").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad record field: ") + e.what());
  }
}

std::vector<CensusRecord> read_records(std::istream& in) {
  std::vector<CensusRecord> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(from_jsonl(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CensusRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read records from " + path);
  return read_records(in);
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.scanned << ',' << r.diam2 << ',' << r.eq_half << ',' << r.eq_half_minus << ','
        << r.violations << '\n';
  }
}

std::vector<CsvRow> summarize_records(const std::vector<CensusRecord>& records) {
  std::map<int, CsvRow> rows;
  for (const auto& r : records) {
    auto& row = rows[r.n];
    row.n = r.n;
    ++row.scanned;
    if (r.diam == 2) ++row.diam2;
    if (r.eq_half) ++row.eq_half;
    if (r.eq_half_minus) ++row.eq_half_minus;
    if (r.violation) ++row.violations;
  }
  std::vector<CsvRow> out;
  for (auto& [n, row] : rows) out.push_back(row);
  return out;
}

std::string csv_sibling_path(const std::string& jsonl_path) {
  std::filesystem::path p(jsonl_path);
  p.replace_extension(".summary.csv");
  return p.string();
}

void write_records(const std::string& path, const std::vector<CensusRecord>& records) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write records to " + path);
    for (const auto& r : records) out << to_jsonl(r) << '\n';
  }
  std::ofstream csv(csv_sibling_path(path), std::ios::binary | std::ios::trunc);
  if (!csv) throw InputError("cannot write summary next to " + path);
  write_csv(csv, summarize_records(records));
}

}  // namespace domgame::census
