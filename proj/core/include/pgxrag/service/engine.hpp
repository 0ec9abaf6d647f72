#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/knowledge_base.hpp"
#include "pgxrag/lexicon.hpp"
#include "pgxrag/pipeline.hpp"
#include "pgxrag/prompt_template.hpp"
#include "pgxrag/service/config.hpp"
#include "pgxrag/vector_index.hpp"

namespace pgxrag {

struct LoadedIndex {
  std::filesystem::path path;
  VectorIndex index;
  KnowledgeBase kb;
};

// Opens an index and its chunk store.
LoadedIndex load_index(const std::filesystem::path& index_path);

// Everything needed to answer queries: templates, lexicon, backends and one
// or more indexes. Each phase uses the loaded index whose sources fit the
// phase (preferring the widest); a phase with no fitting index raises
// ConfigMismatch when used.
class Engine {
 public:
  Engine(ServiceConfig config, const std::vector<std::filesystem::path>& index_paths);
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  PipelineResponse ask(std::string_view query_id, std::string_view text, Phase phase) const;
  const Pipeline& pipeline(Phase phase) const;
  bool supports(Phase phase) const;

  const ServiceConfig& config() const noexcept { return config_; }
  const TemplateSet& templates() const noexcept { return templates_; }
  const GuidelineLexicon& lexicon() const noexcept { return lexicon_; }
  const std::vector<LoadedIndex>& indexes() const noexcept { return indexes_; }
  const LoadedIndex& index_for(Phase phase) const;
  const EmbeddingBackend& embedder() const noexcept { return *embedder_; }
  const GenerationBackend& generator() const noexcept;

 private:
  ServiceConfig config_;
  TemplateSet templates_;
  GuidelineLexicon lexicon_;
  std::unique_ptr<EmbeddingBackend> embedder_;
  std::unique_ptr<GenerationBackend> generator_;
  std::unique_ptr<RecordingBackend> recorder_;
  std::vector<LoadedIndex> indexes_;
  std::array<std::unique_ptr<Pipeline>, 3> pipelines_;
  std::array<const LoadedIndex*, 3> chosen_{};
  std::array<std::string, 3> unavailable_;
};

}  // namespace pgxrag
