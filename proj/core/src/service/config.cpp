#include "pgxrag/service/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pgxrag/error.hpp"

namespace pgxrag {

using nlohmann::json;

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv(kDataDirEnv); env && *env) return env;
  return PGXRAG_DEFAULT_DATA_DIR;
}

ServiceConfig::ServiceConfig() : data_dir(default_data_dir()) {}

ServiceConfig ServiceConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, "config not found: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.parent_path());
}

ServiceConfig ServiceConfig::parse(std::string_view json_text, const std::filesystem::path& base_dir) {
  ServiceConfig c;
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };
  try {
    auto j = json::parse(json_text);
    if (!j.is_object()) fail(ErrorCode::MalformedRecord, "config must be a JSON object");
    if (j.contains("data_dir")) c.data_dir = resolve(j["data_dir"].get<std::string>());
    if (j.contains("templates_dir")) c.templates_dir = resolve(j["templates_dir"].get<std::string>());
    if (j.contains("lexicon")) c.lexicon_path = resolve(j["lexicon"].get<std::string>());
    if (j.contains("embedding")) {
      const auto& e = j["embedding"];
      c.embedder = e.value("backend", c.embedder);
      c.embedding_dim = e.value("dim", c.embedding_dim);
      c.embedding_endpoint = e.value("endpoint", c.embedding_endpoint);
      c.embedding_model = e.value("model", c.embedding_model);
    }
    if (j.contains("generation")) {
      const auto& g = j["generation"];
      c.generator = g.value("backend", c.generator);
      c.generation_endpoint = g.value("endpoint", c.generation_endpoint);
      c.generation_model = g.value("model", c.generation_model);
      if (g.contains("cassette")) c.cassette_path = resolve(g["cassette"].get<std::string>());
      if (g.contains("record")) c.record_path = resolve(g["record"].get<std::string>());
    }
    if (j.contains("retrieval")) {
      const auto& r = j["retrieval"];
      c.k_primary = r.value("k_primary", c.k_primary);
      c.k_supplementary = r.value("k_supplementary", c.k_supplementary);
      c.budget_phase1 = r.value("budget_phase1", c.budget_phase1);
      c.budget_phase2 = r.value("budget_phase2", c.budget_phase2);
      c.budget_phase3 = r.value("budget_phase3", c.budget_phase3);
    }
    c.threads = j.value("threads", c.threads);
    c.timeout_seconds = j.value("timeout_seconds", c.timeout_seconds);
    if (j.contains("api_key"))
      fail(ErrorCode::InvalidArgument, std::string("api keys belong in ") + kApiKeyEnv + ", not the config file");
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedRecord, std::string("bad config: ") + e.what());
  }
  if (c.embedder != "hashed" && c.embedder != "remote")
    fail(ErrorCode::InvalidArgument, "embedding.backend must be hashed or remote");
  if (c.generator != "offline" && c.generator != "remote" && c.generator != "cassette")
    fail(ErrorCode::InvalidArgument, "generation.backend must be offline, remote or cassette");
  return c;
}

void ServiceConfig::apply_environment() {
  if (const char* key = std::getenv(kApiKeyEnv)) api_key = key;
}

std::filesystem::path ServiceConfig::templates() const {
  return templates_dir.empty() ? data_dir / "templates" : templates_dir;
}

std::filesystem::path ServiceConfig::lexicon() const {
  return lexicon_path.empty() ? data_dir / "lexicon" / "cpic26.json" : lexicon_path;
}

PhaseConfig ServiceConfig::phase_config(Phase phase) const {
  auto pc = PhaseConfig::defaults(phase);
  pc.k_primary = k_primary;
  switch (phase) {
    case Phase::Phase1: pc.context_token_budget = budget_phase1; break;
    case Phase::Phase2: pc.context_token_budget = budget_phase2; break;
    case Phase::Phase3:
      pc.context_token_budget = budget_phase3;
      pc.k_supplementary = k_supplementary;
      break;
  }
  pc.validate();
  return pc;
}

std::string ServiceConfig::describe_json() const {
  nlohmann::ordered_json j = {{"embedder", embedder},
                              {"embedding_dim", embedding_dim},
                              {"generator", generator},
                              {"generation_model", generation_model},
                              {"k_primary", k_primary},
                              {"k_supplementary", k_supplementary},
                              {"budget_phase1", budget_phase1},
                              {"budget_phase2", budget_phase2},
                              {"budget_phase3", budget_phase3}};
  if (embedder == "remote") {
    j["embedding_endpoint"] = embedding_endpoint;
    j["embedding_model"] = embedding_model;
  }
  if (generator == "remote") j["generation_endpoint"] = generation_endpoint;
  return j.dump();
}

std::unique_ptr<EmbeddingBackend> make_embedder(const ServiceConfig& c) {
  if (c.embedder == "remote") {
    RemoteEmbedderConfig rc;
    rc.endpoint = c.embedding_endpoint;
    rc.model = c.embedding_model;
    rc.dim = c.embedding_dim;
    rc.api_key = c.api_key;
    rc.timeout_seconds = c.timeout_seconds;
    return std::make_unique<RemoteEmbedder>(rc);
  }
  return std::make_unique<HashedBagOfWordsEmbedder>(c.embedding_dim);
}

std::unique_ptr<GenerationBackend> make_generator(const ServiceConfig& c) {
  if (c.generator == "remote") {
    RemoteChatConfig rc;
    rc.endpoint = c.generation_endpoint;
    rc.model = c.generation_model;
    rc.api_key = c.api_key;
    rc.timeout_seconds = c.timeout_seconds;
    return std::make_unique<RemoteChatBackend>(rc);
  }
  if (c.generator == "cassette") {
    if (c.cassette_path.empty()) fail(ErrorCode::InvalidArgument, "cassette backend needs a cassette path");
    return std::make_unique<CassetteBackend>(c.cassette_path, c.generation_model);
  }
  return std::make_unique<ExtractiveBackend>();
}

}  // namespace pgxrag
