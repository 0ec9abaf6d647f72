#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/annotation.hpp"
#include "pgxrag/evaluation/dataset.hpp"
#include "pgxrag/evaluation/quiz.hpp"
#include "pgxrag/service/engine.hpp"

namespace pgxrag {

struct ApiRequest {
  std::string method;  // "GET", "POST"
  std::string path;    // "/api/query"
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> headers;  // lowercase names
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// HTTP status for an error class: 400 schema/argument problems, 404 unknown
// ids, 409 duplicate submissions, 503 backend failures, 500 otherwise.
int http_status(ErrorCode code) noexcept;

// Store directory layout:
//   annotations.jsonl     append-only annotation log
//   responses/<group>.jsonl  batch outputs served by /api/responses
//   dataset.jsonl         optional query dataset
//   quiz.json             optional quiz key
//   quiz_results.jsonl    append-only quiz submissions
//
// handle() is thread-safe.
class ServiceApi {
 public:
  ServiceApi(const Engine& engine, std::filesystem::path store_dir);

  ApiResponse handle(const ApiRequest& request);

  AnnotationStore& annotations() noexcept { return annotations_; }

 private:
  ApiResponse health() const;
  ApiResponse query(const ApiRequest& request) const;
  ApiResponse dataset() const;
  ApiResponse responses(const ApiRequest& request) const;
  ApiResponse post_annotation(const ApiRequest& request);
  ApiResponse metrics(const ApiRequest& request) const;
  ApiResponse quiz() const;
  ApiResponse post_quiz_answers(const ApiRequest& request);

  std::vector<std::string> response_groups() const;
  std::optional<std::vector<std::string>> known_query_ids(const std::string& group) const;
  std::map<std::string, QuizResult> latest_quiz_results() const;

  const Engine& engine_;
  std::filesystem::path store_dir_;
  AnnotationStore annotations_;
  std::vector<QueryRecord> dataset_;
  std::vector<QuizItem> quiz_;
  mutable std::mutex quiz_mutex_;
};

}  // namespace pgxrag
