#include "pgxrag/evaluation/annotation.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

using nlohmann::json;

namespace {

constexpr const char* kLikertFields[] = {"accuracy", "relevance", "completeness", "clarity"};

int likert(const json& obj, const char* name) {
  if (!obj.contains(name)) fail(ErrorCode::MalformedRecord, std::string("missing ") + name);
  const auto& v = obj.at(name);
  if (!v.is_number_integer()) fail(ErrorCode::MalformedRecord, std::string(name) + " must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < kLikertMin || x > kLikertMax)
    fail(ErrorCode::MalformedRecord, std::string(name) + " must be in 1..5, got " + std::to_string(x));
  return static_cast<int>(x);
}

std::optional<std::int64_t> count(const json& obj, const char* name) {
  if (!obj.contains(name) || obj.at(name).is_null()) return std::nullopt;
  const auto& v = obj.at(name);
  if (!v.is_number_integer()) fail(ErrorCode::MalformedRecord, std::string(name) + " must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < 0) fail(ErrorCode::MalformedRecord, std::string(name) + " must be non-negative");
  return x;
}

std::string string_field(const json& obj, const char* name, bool required) {
  if (!obj.contains(name) || obj.at(name).is_null()) {
    if (required) fail(ErrorCode::MalformedRecord, std::string("missing ") + name);
    return {};
  }
  if (!obj.at(name).is_string()) fail(ErrorCode::MalformedRecord, std::string(name) + " must be a string");
  return obj.at(name).get<std::string>();
}

AnnotationRecord from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::MalformedRecord, "annotation must be a JSON object");
  AnnotationRecord r;
  if (!j.contains("response_ref")) fail(ErrorCode::MalformedRecord, "missing response_ref");
  const auto& ref = j.at("response_ref");
  if (ref.is_object()) {
    r.response_ref.query_id = string_field(ref, "query_id", true);
    r.response_ref.group = string_field(ref, "group", true);
  } else if (ref.is_string()) {
    r.response_ref.query_id = ref.get<std::string>();
    r.response_ref.group = string_field(j, "group", true);
  } else {
    fail(ErrorCode::MalformedRecord, "response_ref must be an object or a query id");
  }
  const json& scores = j.contains("scores") ? j.at("scores") : j;
  if (!scores.is_object()) fail(ErrorCode::MalformedRecord, "scores must be an object");
  r.accuracy = likert(scores, kLikertFields[0]);
  r.relevance = likert(scores, kLikertFields[1]);
  r.completeness = likert(scores, kLikertFields[2]);
  r.clarity = likert(scores, kLikertFields[3]);
  r.tp = count(j, "tp");
  r.fp = count(j, "fp");
  r.fn = count(j, "fn");
  r.annotator_id = string_field(j, "annotator_id", true);
  r.timestamp = string_field(j, "timestamp", false);
  validate_annotation(r);
  return r;
}

}  // namespace

void validate_annotation(const AnnotationRecord& r) {
  if (r.response_ref.query_id.empty()) fail(ErrorCode::MalformedRecord, "empty query_id");
  if (r.response_ref.group.empty()) fail(ErrorCode::MalformedRecord, "empty group");
  if (r.annotator_id.empty()) fail(ErrorCode::MalformedRecord, "empty annotator_id");
  for (int v : {r.accuracy, r.relevance, r.completeness, r.clarity}) {
    if (v < kLikertMin || v > kLikertMax) fail(ErrorCode::MalformedRecord, "Likert score out of range");
  }
  for (const auto& c : {r.tp, r.fp, r.fn}) {
    if (c && *c < 0) fail(ErrorCode::MalformedRecord, "negative count");
  }
}

AnnotationRecord parse_annotation(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedRecord, std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

std::string to_json_line(const AnnotationRecord& r) {
  nlohmann::ordered_json j = {
      {"response_ref", {{"query_id", r.response_ref.query_id}, {"group", r.response_ref.group}}},
      {"accuracy", r.accuracy},
      {"relevance", r.relevance},
      {"completeness", r.completeness},
      {"clarity", r.clarity}};
  if (r.tp) j["tp"] = *r.tp;
  if (r.fp) j["fp"] = *r.fp;
  if (r.fn) j["fn"] = *r.fn;
  j["annotator_id"] = r.annotator_id;
  j["timestamp"] = r.timestamp;
  return j.dump();
}

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) fail(ErrorCode::MissingFile, "annotations not found: " + path.string());
  AnnotationStore store(path);
  return store.records();
}

AnnotationStore::AnnotationStore(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot read " + path_.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();
  in.close();

  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < data.size()) {
    auto nl = data.find('\n', pos);
    bool complete = nl != std::string::npos;
    std::string_view line(data.data() + pos, (complete ? nl : data.size()) - pos);
    ++lineno;
    if (!text::trim(line).empty()) {
      try {
        auto j = json::parse(line);
        auto rec = from_json(j);
        apply(rec);
        if (j.contains("submission_token") && j["submission_token"].is_string())
          tokens_.insert(j["submission_token"].get<std::string>());
        ++lines_;
      } catch (const std::exception& e) {
        if (!complete) {
          // Torn tail from an interrupted append: drop it so the next append
          // starts on a clean line.
          std::filesystem::resize_file(path_, pos);
          break;
        }
        fail(ErrorCode::MalformedRecord, path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
      }
    } else if (!complete) {
      std::filesystem::resize_file(path_, pos);
      break;
    }
    if (!complete) {
      // A valid record missing only its newline; terminate it.
      std::ofstream fix(path_, std::ios::binary | std::ios::app);
      fix << '\n';
      break;
    }
    pos = nl + 1;
  }
}

void AnnotationStore::apply(const AnnotationRecord& r) {
  effective_[{r.response_ref.query_id, r.response_ref.group, r.annotator_id}] = r;
}

AnnotationRecord AnnotationStore::append(AnnotationRecord record, const std::string& submission_token) {
  validate_annotation(record);
  std::unique_lock lock(mutex_);
  if (!submission_token.empty() && tokens_.contains(submission_token))
    fail(ErrorCode::DuplicateSubmission, "submission token already used: " + submission_token);

  auto j = json::parse(to_json_line(record));
  if (!submission_token.empty()) j["submission_token"] = submission_token;
  std::string line = j.dump() + "\n";

  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) fail(ErrorCode::IoFailure, "cannot open " + path_.string() + ": " + std::strerror(errno));
  std::size_t written = 0;
  while (written < line.size()) {
    auto n = ::write(fd, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd);
      fail(ErrorCode::IoFailure, "write failed: " + std::string(std::strerror(err)));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    int err = errno;
    ::close(fd);
    fail(ErrorCode::IoFailure, "fsync failed: " + std::string(std::strerror(err)));
  }
  ::close(fd);

  apply(record);
  if (!submission_token.empty()) tokens_.insert(submission_token);
  ++lines_;
  return record;
}

std::vector<AnnotationRecord> AnnotationStore::records() const {
  std::shared_lock lock(mutex_);
  std::vector<AnnotationRecord> out;
  out.reserve(effective_.size());
  for (const auto& [k, r] : effective_) out.push_back(r);
  return out;
}

std::vector<AnnotationRecord> AnnotationStore::records_for(std::string_view group) const {
  std::shared_lock lock(mutex_);
  std::vector<AnnotationRecord> out;
  for (const auto& [k, r] : effective_)
    if (r.response_ref.group == group) out.push_back(r);
  return out;
}

std::set<std::string> AnnotationStore::groups() const {
  std::shared_lock lock(mutex_);
  std::set<std::string> out;
  for (const auto& [k, r] : effective_) out.insert(r.response_ref.group);
  return out;
}

std::size_t AnnotationStore::log_lines() const {
  std::shared_lock lock(mutex_);
  return lines_;
}

}  // namespace pgxrag
