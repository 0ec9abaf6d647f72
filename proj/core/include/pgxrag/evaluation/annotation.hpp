#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace pgxrag {

struct ResponseRef {
  std::string query_id;
  std::string group;

  auto operator<=>(const ResponseRef&) const = default;
};

struct AnnotationRecord {
  ResponseRef response_ref;
  int accuracy = 0;
  int relevance = 0;
  int completeness = 0;
  int clarity = 0;
  std::optional<std::int64_t> tp;
  std::optional<std::int64_t> fp;
  std::optional<std::int64_t> fn;
  std::string annotator_id;
  std::string timestamp;  // ISO-8601 UTC

  bool operator==(const AnnotationRecord&) const = default;
};

inline constexpr int kLikertMin = 1;
inline constexpr int kLikertMax = 5;

// Parses one record. Accepts the stored shape
//   {"response_ref":{"query_id","group"}, "accuracy", ..., "annotator_id", "timestamp"}
// and the request shape
//   {"response_ref":"<query_id>", "group", "scores":{"accuracy", ...}, "tp", "fp", "fn", "annotator_id"}.
// Schema and range violations raise MalformedRecord. A missing timestamp is
// left empty.
AnnotationRecord parse_annotation(std::string_view json_text);

// Validates ranges; throws MalformedRecord.
void validate_annotation(const AnnotationRecord& record);

std::string to_json_line(const AnnotationRecord& record);

// Reads a JSON Lines file and resolves it to the effective record set (last
// record per response_ref and annotator wins).
std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path);

// Append-only JSON Lines log. Writes are serialized and flushed to disk
// before append() returns; reads may run concurrently. Opening replays the
// log; an incomplete final line left by a crash is discarded.
class AnnotationStore {
 public:
  explicit AnnotationStore(std::filesystem::path path);

  // Throws DuplicateSubmission when the token was already used.
  AnnotationRecord append(AnnotationRecord record, const std::string& submission_token = {});

  // Effective records ordered by (query_id, group, annotator_id).
  std::vector<AnnotationRecord> records() const;
  std::vector<AnnotationRecord> records_for(std::string_view group) const;
  std::set<std::string> groups() const;
  std::size_t log_lines() const;

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  using Key = std::tuple<std::string, std::string, std::string>;
  void apply(const AnnotationRecord& record);

  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::map<Key, AnnotationRecord> effective_;
  std::set<std::string> tokens_;
  std::size_t lines_ = 0;
};

}  // namespace pgxrag
