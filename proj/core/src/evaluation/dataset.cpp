#include "pgxrag/evaluation/dataset.hpp"

#include <fstream>
#include <map>
#include <set>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

using nlohmann::json;

std::string_view to_string(Audience audience) noexcept {
  switch (audience) {
    case Audience::Provider: return "Provider";
    case Audience::AdultPatient: return "AdultPatient";
    case Audience::PediatricPatient: return "PediatricPatient";
  }
  return "Provider";
}

Audience parse_audience(std::string_view name) {
  if (name == "Provider") return Audience::Provider;
  if (name == "AdultPatient") return Audience::AdultPatient;
  if (name == "PediatricPatient") return Audience::PediatricPatient;
  fail(ErrorCode::MalformedRecord, "unknown audience '" + std::string(name) + "'");
}

std::vector<QueryRecord> parse_dataset(std::istream& in, std::string_view origin) {
  std::vector<QueryRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto where = std::string(origin) + ":" + std::to_string(lineno) + ": ";
    try {
      auto j = json::parse(line);
      QueryRecord r;
      r.query_id = j.at("query_id").get<std::string>();
      r.guideline_key = j.at("guideline_key").get<std::string>();
      r.audience = parse_audience(j.at("audience").get<std::string>());
      r.text = j.at("text").get<std::string>();
      if (r.query_id.empty()) fail(ErrorCode::MalformedRecord, "empty query_id");
      if (text::trim(r.text).empty()) fail(ErrorCode::MalformedRecord, "empty query text");
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      fail(ErrorCode::MalformedRecord, where + e.what());
    } catch (const Error& e) {
      fail(ErrorCode::MalformedRecord, where + e.what());
    }
  }
  return out;
}

std::vector<QueryRecord> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, "dataset not found: " + path.string());
  return parse_dataset(in, path.string());
}

std::string to_json_line(const QueryRecord& r) {
  nlohmann::ordered_json j = {{"query_id", r.query_id},
                              {"guideline_key", r.guideline_key},
                              {"audience", to_string(r.audience)},
                              {"text", r.text}};
  return j.dump();
}

DatasetReport validate_dataset(std::span<const QueryRecord> records, const GuidelineLexicon& lexicon) {
  DatasetReport report;
  report.total = records.size();
  std::map<std::string, std::size_t, std::less<>> counts;
  for (const auto& e : lexicon.entries()) counts[e.guideline_key] = 0;

  std::set<std::string> seen_ids;
  std::set<std::string> dup_ids;
  std::set<std::string> unknown;
  for (const auto& r : records) {
    if (!seen_ids.insert(r.query_id).second) dup_ids.insert(r.query_id);
    auto it = counts.find(r.guideline_key);
    if (it == counts.end()) {
      unknown.insert(r.guideline_key);
    } else {
      ++it->second;
    }
  }

  for (const auto& e : lexicon.entries()) {
    auto n = counts[e.guideline_key];
    report.counts.push_back({e.guideline_key, n});
    if (n != kQueriesPerGuideline) {
      report.violating_guidelines.push_back(e.guideline_key);
      report.violations.push_back(e.guideline_key + ": " + std::to_string(n) + " queries, expected " +
                                  std::to_string(kQueriesPerGuideline));
    }
  }
  for (const auto& k : unknown) {
    report.unknown_keys.push_back(k);
    report.violations.push_back(k + ": not a known guideline");
  }
  for (const auto& id : dup_ids) {
    report.duplicate_ids.push_back(id);
    report.violations.push_back(id + ": duplicate query_id");
  }
  report.conformant = report.violations.empty() &&
                      lexicon.entries().size() == GuidelineLexicon::kGuidelineCount &&
                      report.total == GuidelineLexicon::kGuidelineCount * kQueriesPerGuideline;
  return report;
}

}  // namespace pgxrag
