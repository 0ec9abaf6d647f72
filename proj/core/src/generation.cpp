#include "pgxrag/generation.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

#include "http_client.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

using nlohmann::json;

namespace {

constexpr std::string_view kSourcePrefix = "Source:";

std::string first_content_sentence(const std::string& summary) {
  auto sentences = text::split_sentences(summary);
  if (sentences.empty()) return {};
  if (sentences.size() > 1 && sentences.front().starts_with(kSourcePrefix)) return sentences[1];
  return sentences.front();
}

}  // namespace

std::string ExtractiveBackend::summarize(const SummaryTask& task) const {
  auto sentences = text::split_sentences(task.content);
  if (sentences.empty()) fail(ErrorCode::EmptyChunk, "chunk from " + task.source + " has no text");

  auto query_words = text::content_words(task.query);
  std::set<std::string> query_set(query_words.begin(), query_words.end());

  struct Scored {
    std::size_t position;
    std::size_t score;
  };
  std::vector<Scored> scored;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto words = text::content_words(sentences[i]);
    std::set<std::string> distinct(words.begin(), words.end());
    std::size_t score = 0;
    for (const auto& w : distinct) score += query_set.count(w);
    if (score > 0) scored.push_back({i, score});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const Scored& a, const Scored& b) { return a.score > b.score; });
  if (scored.size() > kSentencesPerSummary) scored.resize(kSentencesPerSummary);

  std::vector<std::size_t> keep;
  for (const auto& s : scored) keep.push_back(s.position);
  if (keep.empty()) keep.push_back(0);
  std::sort(keep.begin(), keep.end());

  std::string out = "Source: " + task.source + ".";
  for (auto i : keep) {
    out += ' ';
    out += sentences[i];
  }
  return out;
}

std::string ExtractiveBackend::synthesize(const SynthesisTask& task) const {
  if (task.summaries.empty()) fail(ErrorCode::NoSummaries, "nothing to synthesize");
  std::string out;
  for (std::size_t i = 0; i < task.summaries.size(); ++i) {
    const auto& s = task.summaries[i];
    out += std::to_string(i + 1) + ". [" + s.source + "] " + first_content_sentence(s.text) + "\n";
  }
  out += "Summary: ";
  if (task.targets.empty()) {
    out += "no guideline drugs or genes matched the question.";
  } else {
    out += "drugs: " + (task.targets.drugs.empty() ? "none" : text::join(task.targets.drugs, ", "));
    out += "; genes: " + (task.targets.genes.empty() ? "none" : text::join(task.targets.genes, ", "));
    out += ".";
  }
  return out;
}

RemoteChatBackend::RemoteChatBackend(RemoteChatConfig config) : config_(std::move(config)) {}

std::string RemoteChatBackend::complete(const GenerationRequest& request) const {
  json body = {{"model", config_.model},
               {"temperature", 0},
               {"messages",
                json::array({{{"role", "system"}, {"content", request.system}},
                             {{"role", "user"}, {"content", request.user}}})}};
  auto raw = detail::post_json(config_.endpoint, "/chat/completions", body.dump(), config_.api_key,
                               config_.timeout_seconds);
  try {
    auto reply = json::parse(raw);
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    fail(ErrorCode::BackendUnavailable, std::string("unexpected chat completion payload: ") + e.what());
  }
}

std::string RemoteChatBackend::summarize(const SummaryTask& task) const {
  return complete(task.request);
}

std::string RemoteChatBackend::synthesize(const SynthesisTask& task) const {
  if (task.summaries.empty()) fail(ErrorCode::NoSummaries, "nothing to synthesize");
  return complete(task.request);
}

std::string request_hash(std::string_view model, const GenerationRequest& request) {
  std::string payload;
  payload.reserve(model.size() + request.system.size() + request.user.size() + 8);
  payload += model;
  payload += '\x1e';
  payload += '0';
  payload += '\x1e';
  payload += request.system;
  payload += '\x1e';
  payload += request.user;
  return sha256_hex(payload);
}

CassetteBackend::CassetteBackend(const std::filesystem::path& path, std::string model)
    : model_(std::move(model)) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, "cassette not found: " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    try {
      auto rec = json::parse(line);
      responses_[rec.at("request_hash").get<std::string>()] =
          rec.at("response_text").get<std::string>();
    } catch (const json::exception& e) {
      fail(ErrorCode::MalformedRecord,
           path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::string CassetteBackend::replay(const GenerationRequest& request) const {
  auto key = request_hash(model_, request);
  auto it = responses_.find(key);
  if (it == responses_.end()) fail(ErrorCode::CassetteMiss, "no recording for request " + key);
  return it->second;
}

std::string CassetteBackend::summarize(const SummaryTask& task) const { return replay(task.request); }

std::string CassetteBackend::synthesize(const SynthesisTask& task) const {
  if (task.summaries.empty()) fail(ErrorCode::NoSummaries, "nothing to synthesize");
  return replay(task.request);
}

RecordingBackend::RecordingBackend(const GenerationBackend& inner, std::filesystem::path path,
                                   std::string model)
    : inner_(inner), path_(std::move(path)), model_(std::move(model)) {}

void RecordingBackend::record(const GenerationRequest& request, const std::string& response) const {
  json rec = {{"request_hash", request_hash(model_, request)}, {"response_text", response}};
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) fail(ErrorCode::IoFailure, "cannot append to cassette " + path_.string());
  out << rec.dump() << '\n';
}

std::string RecordingBackend::summarize(const SummaryTask& task) const {
  auto response = inner_.summarize(task);
  record(task.request, response);
  return response;
}

std::string RecordingBackend::synthesize(const SynthesisTask& task) const {
  auto response = inner_.synthesize(task);
  record(task.request, response);
  return response;
}

}  // namespace pgxrag
