#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/lexicon.hpp"

namespace pgxrag {

enum class Audience { Provider, AdultPatient, PediatricPatient };

std::string_view to_string(Audience audience) noexcept;
Audience parse_audience(std::string_view name);

struct QueryRecord {
  std::string query_id;
  std::string guideline_key;
  Audience audience = Audience::Provider;
  std::string text;

  bool operator==(const QueryRecord&) const = default;
};

inline constexpr std::size_t kQueriesPerGuideline = 10;

std::vector<QueryRecord> parse_dataset(std::istream& in, std::string_view origin);
std::vector<QueryRecord> load_dataset(const std::filesystem::path& path);
std::string to_json_line(const QueryRecord& record);

struct GuidelineCount {
  std::string guideline_key;
  std::size_t count = 0;
};

struct DatasetReport {
  bool conformant = false;
  std::size_t total = 0;
  std::vector<GuidelineCount> counts;          // lexicon order, zeros included
  std::vector<std::string> violating_guidelines;  // count != kQueriesPerGuideline
  std::vector<std::string> unknown_keys;          // not in the lexicon
  std::vector<std::string> duplicate_ids;
  std::vector<std::string> violations;            // human-readable, one per problem
};

// Conformant iff every lexicon guideline has exactly kQueriesPerGuideline
// queries, no record names an unknown guideline and query ids are unique.
DatasetReport validate_dataset(std::span<const QueryRecord> records, const GuidelineLexicon& lexicon);

}  // namespace pgxrag
