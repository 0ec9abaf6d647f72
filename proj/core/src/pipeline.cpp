#include "pgxrag/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

using nlohmann::ordered_json;

namespace {

template <class F>
auto staged(const char* stage, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (!e.stage().empty()) throw;
    throw Error(e.code(), stage, e.what());
  }
}

ordered_json config_json(const PhaseConfig& c) {
  return {{"phase", to_string(c.phase)},
          {"sources", to_string(c.sources)},
          {"k_primary", c.k_primary},
          {"k_supplementary", c.k_supplementary},
          {"temperature", c.temperature},
          {"context_token_budget", c.context_token_budget}};
}

bool hit_order(const RetrievedHit& a, const RetrievedHit& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.chunk_id < b.chunk_id;
}

}  // namespace

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::Phase1: return "phase1";
    case Phase::Phase2: return "phase2";
    case Phase::Phase3: return "phase3";
  }
  return "phase1";
}

Phase parse_phase(std::string_view text) {
  auto t = text::to_lower(text::trim(text));
  if (t == "1" || t == "phase1") return Phase::Phase1;
  if (t == "2" || t == "phase2") return Phase::Phase2;
  if (t == "3" || t == "phase3") return Phase::Phase3;
  fail(ErrorCode::InvalidArgument, "unknown phase '" + std::string(text) + "'");
}

PhaseConfig PhaseConfig::defaults(Phase phase) {
  PhaseConfig c;
  c.phase = phase;
  switch (phase) {
    case Phase::Phase1:
      c.sources = {Source::CPIC};
      break;
    case Phase::Phase2:
      c.sources = {Source::CPIC, Source::PharmGKB};
      break;
    case Phase::Phase3:
      c.sources = {Source::CPIC, Source::PharmGKB};
      c.k_supplementary = 4;
      c.context_token_budget = 8192;
      break;
  }
  return c;
}

void PhaseConfig::validate() const {
  if (temperature != 0.0) fail(ErrorCode::InvalidArgument, "temperature must be 0");
  if (k_primary == 0) fail(ErrorCode::InvalidArgument, "k_primary must be positive");
  if (context_token_budget == 0) fail(ErrorCode::InvalidArgument, "context budget must be positive");
  if (sources.empty()) fail(ErrorCode::InvalidArgument, "phase config has no sources");
  if (phase == Phase::Phase3 && k_supplementary == 0)
    fail(ErrorCode::InvalidArgument, "phase3 requires k_supplementary > 0");
  if (phase != Phase::Phase3 && k_supplementary != 0)
    fail(ErrorCode::InvalidArgument, "k_supplementary is only valid in phase3");
}

std::string to_json(const PipelineResponse& r) {
  ordered_json hits = ordered_json::array();
  for (const auto& h : r.hits) {
    hits.push_back({{"chunk_id", h.chunk_id},
                    {"score", h.score},
                    {"doc_id", h.doc_id},
                    {"source", to_string(h.source)},
                    {"token_estimate", h.token_estimate},
                    {"retrieved_by", h.retrieved_by}});
  }
  ordered_json summaries = ordered_json::array();
  for (const auto& s : r.summaries)
    summaries.push_back({{"chunk_id", s.chunk_id}, {"source", s.source}, {"text", s.text}});
  ordered_json j = {{"query_id", r.query_id},
                    {"query", r.query},
                    {"phase", to_string(r.phase)},
                    {"hits", hits},
                    {"summaries", summaries},
                    {"answer", r.answer},
                    {"backend_tag", r.backend_tag},
                    {"targets", {{"drugs", r.targets.drugs}, {"genes", r.targets.genes}}},
                    {"context_tokens", r.context_tokens},
                    {"budget_dropped", r.budget_dropped},
                    {"trace_hash", r.trace_hash}};
  return j.dump();
}

PipelineResponse response_from_json(std::string_view json_text) {
  try {
    auto j = nlohmann::json::parse(json_text);
    PipelineResponse r;
    r.query_id = j.at("query_id").get<std::string>();
    r.query = j.value("query", std::string{});
    r.phase = parse_phase(j.at("phase").get<std::string>());
    for (const auto& h : j.at("hits")) {
      RetrievedHit hit;
      hit.chunk_id = h.at("chunk_id").get<std::string>();
      hit.score = h.at("score").get<double>();
      hit.doc_id = h.value("doc_id", std::string{});
      hit.source = parse_source(h.value("source", std::string{"Other"}));
      hit.token_estimate = h.value("token_estimate", std::size_t{0});
      hit.retrieved_by = h.value("retrieved_by", std::vector<std::string>{});
      r.hits.push_back(std::move(hit));
    }
    for (const auto& s : j.at("summaries"))
      r.summaries.push_back({s.at("chunk_id").get<std::string>(), s.value("source", std::string{}),
                             s.at("text").get<std::string>()});
    r.answer = j.at("answer").get<std::string>();
    r.backend_tag = j.value("backend_tag", std::string{});
    if (j.contains("targets")) {
      r.targets.drugs = j["targets"].value("drugs", std::vector<std::string>{});
      r.targets.genes = j["targets"].value("genes", std::vector<std::string>{});
    }
    r.context_tokens = j.value("context_tokens", std::size_t{0});
    r.budget_dropped = j.value("budget_dropped", std::vector<std::string>{});
    r.trace_hash = j.value("trace_hash", std::string{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::MalformedRecord, std::string("bad response record: ") + e.what());
  }
}

std::string summarize_chunk(std::string_view query, const Chunk& chunk, std::string_view source,
                            const GenerationBackend& backend, const TemplateSet& templates) {
  if (text::trim(chunk.text).empty()) fail(ErrorCode::EmptyChunk, "chunk " + chunk.chunk_id + " is empty");
  SummaryTask task;
  task.query = std::string(query);
  task.source = std::string(source);
  task.content = chunk.text;
  task.request.system = render_prompt(templates.layer1_system, {});
  task.request.user = render_prompt(
      templates.layer1_user,
      {{"source", task.source}, {"query", task.query}, {"content", task.content}});
  return backend.summarize(task);
}

std::string number_summaries(const std::vector<SummaryItem>& summaries) {
  std::string out;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    if (i) out += "\n\n";
    out += std::to_string(i + 1) + ". " + summaries[i].text;
  }
  return out;
}

std::string synthesize_answer(std::string_view query, const std::vector<SummaryItem>& summaries,
                              const TargetEntities& targets, const GenerationBackend& backend,
                              const TemplateSet& templates) {
  if (summaries.empty()) fail(ErrorCode::NoSummaries, "no summaries to synthesize");
  SynthesisTask task;
  task.query = std::string(query);
  task.summaries = summaries;
  task.targets = targets;
  task.request.system = render_prompt(templates.layer2_system, {});
  task.request.user = render_prompt(
      templates.layer2_user,
      {{"user_input", task.query}, {"all_summaries", number_summaries(summaries)}});
  return backend.synthesize(task);
}

Pipeline::Pipeline(const KnowledgeBase& kb, const VectorIndex& index,
                   const EmbeddingBackend& embedder, const GenerationBackend& generator,
                   const TemplateSet& templates, const GuidelineLexicon& lexicon,
                   PhaseConfig config, unsigned summary_threads)
    : kb_(kb),
      index_(index),
      embedder_(embedder),
      generator_(generator),
      templates_(templates),
      lexicon_(lexicon),
      config_(std::move(config)),
      summary_threads_(std::max(1u, summary_threads)) {
  config_.validate();
  for (auto s : kb_.sources()) {
    if (!config_.sources.contains(s))
      fail(ErrorCode::ConfigMismatch, std::string(to_string(config_.phase)) + " expects sources " +
                                          to_string(config_.sources) + " but the index holds " +
                                          to_string(kb_.sources()));
  }
  if (embedder_.tag() != index_.backend_tag())
    fail(ErrorCode::ConfigMismatch, "index was built with '" + index_.backend_tag() +
                                        "' but the query embedder is '" + embedder_.tag() + "'");
  if (index_.size() != kb_.size())
    fail(ErrorCode::ConfigMismatch, "index and chunk store sizes differ");
  for (const auto& e : index_.entries()) {
    if (!kb_.find(e.chunk_id))
      fail(ErrorCode::ConfigMismatch, "index chunk " + e.chunk_id + " missing from chunk store");
  }
}

std::vector<RetrievedHit> Pipeline::retrieve(std::string_view query_text,
                                             const TargetEntities& targets) const {
  std::map<std::string, RetrievedHit, std::less<>> merged;
  auto collect = [&](std::string_view text, std::size_t k, const std::string& label,
                     std::optional<Source> only = std::nullopt) {
    auto query = staged("embed", [&] { return embedder_.embed(text); });
    auto hits = staged("search", [&] {
      if (!only) return search_top_k(index_, query, k);
      return search_top_k(index_, query, k,
                          [&](std::string_view id) { return kb_.at(id).source == *only; });
    });
    for (auto& h : hits) {
      auto [it, inserted] = merged.try_emplace(h.chunk_id);
      auto& rec = it->second;
      if (inserted) {
        const auto& kc = kb_.at(h.chunk_id);
        rec.chunk_id = h.chunk_id;
        rec.score = h.score;
        rec.doc_id = kc.chunk.doc_id;
        rec.source = kc.source;
        rec.token_estimate = kc.chunk.token_estimate;
      } else {
        rec.score = std::max(rec.score, h.score);
      }
      rec.retrieved_by.push_back(label);
    }
  };

  if (config_.phase == Phase::Phase3) {
    // Each source keeps its own k_primary slots so a mixed index can only add
    // context on top of what the CPIC-only phases would have retrieved.
    for (auto source : kb_.sources()) collect(query_text, config_.k_primary, "primary", source);
  } else {
    collect(query_text, config_.k_primary, "primary");
  }
  if (config_.phase == Phase::Phase3) {
    std::vector<std::string> entities = targets.drugs;
    entities.insert(entities.end(), targets.genes.begin(), targets.genes.end());
    for (const auto& entity : entities) {
      collect(entity + " " + std::string(query_text), config_.k_supplementary, "target:" + entity);
    }
  }

  std::vector<RetrievedHit> out;
  out.reserve(merged.size());
  for (auto& [id, hit] : merged) out.push_back(std::move(hit));
  std::sort(out.begin(), out.end(), hit_order);
  return out;
}

PipelineResponse Pipeline::answer(std::string_view query_id, std::string_view query_text) const {
  PipelineResponse r;
  r.query_id = std::string(query_id);
  r.query = std::string(query_text);
  r.phase = config_.phase;
  r.backend_tag = generator_.tag();
  r.targets = staged("targets", [&] { return extract_targets(query_text, lexicon_); });

  auto candidates = retrieve(query_text, r.targets);
  for (auto& hit : candidates) {
    if (r.context_tokens + hit.token_estimate > config_.context_token_budget) {
      r.budget_dropped.push_back(hit.chunk_id);
      continue;
    }
    r.context_tokens += hit.token_estimate;
    r.hits.push_back(std::move(hit));
  }
  std::sort(r.budget_dropped.begin(), r.budget_dropped.end());

  r.summaries.resize(r.hits.size());
  auto summarize_one = [&](std::size_t i) {
    const auto& kc = kb_.at(r.hits[i].chunk_id);
    auto text = summarize_chunk(query_text, kc.chunk, kc.chunk.doc_id, generator_, templates_);
    r.summaries[i] = {kc.chunk.chunk_id, kc.chunk.doc_id, std::move(text)};
  };
  staged("summarize", [&] {
    unsigned workers = generator_.concurrent()
                           ? std::min<unsigned>(summary_threads_, static_cast<unsigned>(r.hits.size()))
                           : 1u;
    if (workers <= 1) {
      for (std::size_t i = 0; i < r.hits.size(); ++i) summarize_one(i);
      return 0;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(r.hits.size());
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < r.hits.size(); i = next++) {
            try {
              summarize_one(i);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return 0;
  });

  r.answer = staged("synthesize", [&] {
    return synthesize_answer(query_text, r.summaries, r.targets, generator_, templates_);
  });

  ordered_json trace = {{"query", r.query}, {"config", config_json(config_)}};
  ordered_json ids = ordered_json::array();
  for (const auto& h : r.hits) ids.push_back(h.chunk_id);
  ordered_json sums = ordered_json::array();
  for (const auto& s : r.summaries) sums.push_back({s.chunk_id, s.text});
  trace["hit_ids"] = ids;
  trace["summaries"] = sums;
  trace["answer"] = r.answer;
  r.trace_hash = sha256_hex(trace.dump());
  return r;
}

}  // namespace pgxrag
