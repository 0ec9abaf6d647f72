#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/corpus.hpp"
#include "pgxrag/embedding.hpp"
#include "pgxrag/generation.hpp"
#include "pgxrag/knowledge_base.hpp"
#include "pgxrag/lexicon.hpp"
#include "pgxrag/prompt_template.hpp"
#include "pgxrag/targets.hpp"
#include "pgxrag/vector_index.hpp"

namespace pgxrag {

enum class Phase { Phase1, Phase2, Phase3 };

std::string_view to_string(Phase phase) noexcept;  // "phase1" ...
// Accepts "1", "phase1", "Phase1" (and likewise for 2, 3).
Phase parse_phase(std::string_view text);

struct PhaseConfig {
  Phase phase = Phase::Phase1;
  SourceSet sources;
  std::size_t k_primary = kDefaultTopK;
  std::size_t k_supplementary = 0;
  double temperature = 0.0;
  std::size_t context_token_budget = 4096;

  static PhaseConfig defaults(Phase phase);

  // Throws InvalidArgument when temperature != 0, k_primary == 0, the
  // budget is 0, or k_supplementary is set outside Phase3 (or missing in it).
  void validate() const;

  bool operator==(const PhaseConfig&) const = default;
};

struct RetrievedHit {
  std::string chunk_id;
  double score = 0.0;
  std::string doc_id;
  Source source = Source::Other;
  std::size_t token_estimate = 0;
  // "primary" and/or "target:<entity>" for every sub-query that returned it.
  std::vector<std::string> retrieved_by;

  bool operator==(const RetrievedHit&) const = default;
};

struct PipelineResponse {
  std::string query_id;
  std::string query;
  Phase phase = Phase::Phase1;
  std::vector<RetrievedHit> hits;
  std::vector<SummaryItem> summaries;  // one per hit, same order
  std::string answer;
  std::string backend_tag;
  TargetEntities targets;
  std::size_t context_tokens = 0;
  std::vector<std::string> budget_dropped;
  std::string trace_hash;

  bool operator==(const PipelineResponse&) const = default;
};

// Compact single-line JSON with a fixed key order.
std::string to_json(const PipelineResponse& response);
PipelineResponse response_from_json(std::string_view json_text);

// Layer-1 call for one chunk.
std::string summarize_chunk(std::string_view query, const Chunk& chunk, std::string_view source,
                            const GenerationBackend& backend, const TemplateSet& templates);

// "{i}. {summary}" blocks joined by blank lines.
std::string number_summaries(const std::vector<SummaryItem>& summaries);

// Layer-2 call over all summaries.
std::string synthesize_answer(std::string_view query, const std::vector<SummaryItem>& summaries,
                              const TargetEntities& targets, const GenerationBackend& backend,
                              const TemplateSet& templates);

// Ties one knowledge base + index to a phase configuration. Holds references
// only; every referenced object must outlive the pipeline. answer() is const
// and safe to call concurrently.
class Pipeline {
 public:
  // Throws ConfigMismatch when the knowledge base holds sources outside
  // config.sources, the embedder tag differs from the index tag, or the
  // index and knowledge base disagree on chunk ids.
  Pipeline(const KnowledgeBase& kb, const VectorIndex& index, const EmbeddingBackend& embedder,
           const GenerationBackend& generator, const TemplateSet& templates,
           const GuidelineLexicon& lexicon, PhaseConfig config, unsigned summary_threads = 1);

  PipelineResponse answer(std::string_view query_id, std::string_view query_text) const;

  const PhaseConfig& config() const noexcept { return config_; }

 private:
  std::vector<RetrievedHit> retrieve(std::string_view query_text, const TargetEntities& targets) const;

  const KnowledgeBase& kb_;
  const VectorIndex& index_;
  const EmbeddingBackend& embedder_;
  const GenerationBackend& generator_;
  const TemplateSet& templates_;
  const GuidelineLexicon& lexicon_;
  PhaseConfig config_;
  unsigned summary_threads_;
};

}  // namespace pgxrag
