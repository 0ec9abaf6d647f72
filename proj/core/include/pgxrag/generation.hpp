#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/targets.hpp"

namespace pgxrag {

// Rendered chat request. Temperature is pinned to zero everywhere.
struct GenerationRequest {
  std::string system;
  std::string user;
  double temperature = 0.0;
};

struct SummaryItem {
  std::string chunk_id;
  std::string source;  // source label shown to the model (the doc_id)
  std::string text;

  bool operator==(const SummaryItem&) const = default;
};

// Layer-1 call: raw fields for extractive backends plus the rendered request
// for model-backed ones.
struct SummaryTask {
  std::string query;
  std::string source;
  std::string content;
  GenerationRequest request;
};

// Layer-2 call.
struct SynthesisTask {
  std::string query;
  std::vector<SummaryItem> summaries;
  TargetEntities targets;
  GenerationRequest request;
};

class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  virtual std::string tag() const = 0;
  virtual std::string summarize(const SummaryTask& task) const = 0;
  virtual std::string synthesize(const SynthesisTask& task) const = 0;
  // True when concurrent summarize() calls are safe.
  virtual bool concurrent() const { return false; }
};

// Offline deterministic backend.
//
// summarize: sentences scored by the number of distinct lowercased content
// words shared with the query; the (up to) three best with a positive score
// are returned in original order (ties by position), or the first sentence
// when nothing overlaps, prefixed "Source: {source}.".
//
// synthesize: one numbered line per summary holding its source and first
// sentence, then a "Summary:" line with the matched drugs and genes.
class ExtractiveBackend final : public GenerationBackend {
 public:
  static constexpr std::size_t kSentencesPerSummary = 3;

  std::string tag() const override { return "offline-extractive-v1"; }
  std::string summarize(const SummaryTask& task) const override;
  std::string synthesize(const SynthesisTask& task) const override;
  bool concurrent() const override { return true; }
};

struct RemoteChatConfig {
  std::string endpoint = "https://api.openai.com/v1";
  std::string model = "gpt-4o-mini";
  std::string api_key;
  int timeout_seconds = 120;
};

// OpenAI-compatible POST {endpoint}/chat/completions client; temperature is
// always sent as 0.
class RemoteChatBackend final : public GenerationBackend {
 public:
  explicit RemoteChatBackend(RemoteChatConfig config);

  std::string tag() const override { return "remote:" + config_.model; }
  std::string summarize(const SummaryTask& task) const override;
  std::string synthesize(const SynthesisTask& task) const override;
  bool concurrent() const override { return true; }

  std::string complete(const GenerationRequest& request) const;

 private:
  RemoteChatConfig config_;
};

// SHA-256 hex of model, "0", system and user joined by 0x1E.
std::string request_hash(std::string_view model, const GenerationRequest& request);

// Replays recorded transcripts: JSON Lines of {request_hash, response_text}.
// A request without a recording raises CassetteMiss.
class CassetteBackend final : public GenerationBackend {
 public:
  CassetteBackend(const std::filesystem::path& path, std::string model);

  std::string tag() const override { return "cassette:" + model_; }
  std::string summarize(const SummaryTask& task) const override;
  std::string synthesize(const SynthesisTask& task) const override;
  bool concurrent() const override { return true; }

  std::size_t size() const noexcept { return responses_.size(); }
  std::string replay(const GenerationRequest& request) const;

 private:
  std::string model_;
  std::map<std::string, std::string, std::less<>> responses_;
};

// Forwards to `inner` and appends every exchange to a cassette file.
class RecordingBackend final : public GenerationBackend {
 public:
  RecordingBackend(const GenerationBackend& inner, std::filesystem::path path, std::string model);

  std::string tag() const override { return inner_.tag(); }
  std::string summarize(const SummaryTask& task) const override;
  std::string synthesize(const SynthesisTask& task) const override;

 private:
  void record(const GenerationRequest& request, const std::string& response) const;

  const GenerationBackend& inner_;
  std::filesystem::path path_;
  std::string model_;
  mutable std::mutex mutex_;
};

}  // namespace pgxrag
