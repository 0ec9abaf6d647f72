#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "pgxrag/embedding.hpp"
#include "pgxrag/generation.hpp"
#include "pgxrag/pipeline.hpp"

namespace pgxrag {

// Environment variable holding the API key for remote backends. Keys are
// never read from config files.
inline constexpr const char* kApiKeyEnv = "PGXRAG_API_KEY";
// Overrides the compiled-in data directory (templates/, lexicon/).
inline constexpr const char* kDataDirEnv = "PGXRAG_DATA_DIR";

std::filesystem::path default_data_dir();

// Config file keys (all optional):
//   data_dir, templates_dir, lexicon
//   embedding.backend ("hashed" | "remote"), embedding.dim,
//   embedding.endpoint, embedding.model
//   generation.backend ("offline" | "remote" | "cassette"),
//   generation.endpoint, generation.model, generation.cassette,
//   generation.record
//   retrieval.k_primary, retrieval.k_supplementary,
//   retrieval.budget_phase1, retrieval.budget_phase2, retrieval.budget_phase3
//   threads, timeout_seconds
struct ServiceConfig {
  std::filesystem::path data_dir;
  std::filesystem::path templates_dir;  // empty: data_dir/templates
  std::filesystem::path lexicon_path;   // empty: data_dir/lexicon/cpic26.json

  std::string embedder = "hashed";
  std::size_t embedding_dim = HashedBagOfWordsEmbedder::kDefaultDim;
  std::string embedding_endpoint = "https://api.openai.com/v1";
  std::string embedding_model = "text-embedding-3-small";

  std::string generator = "offline";
  std::string generation_endpoint = "https://api.openai.com/v1";
  std::string generation_model = "gpt-4o-mini";
  std::filesystem::path cassette_path;
  std::filesystem::path record_path;  // when set, remote exchanges are appended here

  std::size_t k_primary = kDefaultTopK;
  std::size_t k_supplementary = 4;
  std::size_t budget_phase1 = 4096;
  std::size_t budget_phase2 = 4096;
  std::size_t budget_phase3 = 8192;

  unsigned threads = 1;
  int timeout_seconds = 120;
  std::string api_key;  // from kApiKeyEnv

  ServiceConfig();

  static ServiceConfig load(const std::filesystem::path& path);
  static ServiceConfig parse(std::string_view json_text, const std::filesystem::path& base_dir = {});
  void apply_environment();

  std::filesystem::path templates() const;
  std::filesystem::path lexicon() const;
  PhaseConfig phase_config(Phase phase) const;

  // Backend snapshot recorded in run manifests (no secrets).
  std::string describe_json() const;
};

std::unique_ptr<EmbeddingBackend> make_embedder(const ServiceConfig& config);
std::unique_ptr<GenerationBackend> make_generator(const ServiceConfig& config);

}  // namespace pgxrag
