#include "pgxrag/service/engine.hpp"

#include <algorithm>

#include "pgxrag/error.hpp"

namespace pgxrag {

namespace {

std::size_t slot(Phase p) { return static_cast<std::size_t>(p); }

constexpr Phase kPhases[] = {Phase::Phase1, Phase::Phase2, Phase::Phase3};

}  // namespace

LoadedIndex load_index(const std::filesystem::path& index_path) {
  auto index = open_index(index_path);
  auto store = chunk_store_path(index_path);
  if (!std::filesystem::exists(store)) fail(ErrorCode::MissingFile, "chunk store not found: " + store.string());
  return {index_path, std::move(index), KnowledgeBase::load(store)};
}

Engine::Engine(ServiceConfig config, const std::vector<std::filesystem::path>& index_paths)
    : config_(std::move(config)),
      templates_(TemplateSet::load(config_.templates())),
      lexicon_(GuidelineLexicon::load(config_.lexicon())),
      embedder_(make_embedder(config_)),
      generator_(make_generator(config_)) {
  if (!config_.record_path.empty())
    recorder_ = std::make_unique<RecordingBackend>(*generator_, config_.record_path, config_.generation_model);
  if (index_paths.empty()) fail(ErrorCode::InvalidArgument, "at least one index is required");
  indexes_.reserve(index_paths.size());
  for (const auto& p : index_paths) indexes_.push_back(load_index(p));

  for (auto phase : kPhases) {
    auto pc = config_.phase_config(phase);
    const LoadedIndex* best = nullptr;
    for (const auto& li : indexes_) {
      auto srcs = li.kb.sources();
      bool fits = std::includes(pc.sources.begin(), pc.sources.end(), srcs.begin(), srcs.end());
      if (fits && (!best || srcs.size() > best->kb.sources().size())) best = &li;
    }
    if (!best) {
      std::string held;
      for (const auto& li : indexes_) held += (held.empty() ? "" : "; ") + to_string(li.kb.sources());
      unavailable_[slot(phase)] = std::string(to_string(phase)) + " expects sources " +
                                  to_string(pc.sources) + " but the index holds " + held;
      continue;
    }
    chosen_[slot(phase)] = best;
    pipelines_[slot(phase)] = std::make_unique<Pipeline>(best->kb, best->index, *embedder_, generator(),
                                                         templates_, lexicon_, pc, config_.threads);
  }
}

Engine::~Engine() = default;

const GenerationBackend& Engine::generator() const noexcept {
  if (recorder_) return *recorder_;
  return *generator_;
}

bool Engine::supports(Phase phase) const { return pipelines_[slot(phase)] != nullptr; }

const Pipeline& Engine::pipeline(Phase phase) const {
  const auto& p = pipelines_[slot(phase)];
  if (!p) fail(ErrorCode::ConfigMismatch, unavailable_[slot(phase)]);
  return *p;
}

const LoadedIndex& Engine::index_for(Phase phase) const {
  pipeline(phase);
  return *chosen_[slot(phase)];
}

PipelineResponse Engine::ask(std::string_view query_id, std::string_view text, Phase phase) const {
  return pipeline(phase).answer(query_id, text);
}

}  // namespace pgxrag
