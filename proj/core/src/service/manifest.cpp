#include "pgxrag/service/manifest.hpp"

#include <chrono>
#include <ctime>

#include "json.hpp"
#include "pgxrag/hashing.hpp"

namespace pgxrag {

using nlohmann::ordered_json;

namespace {

ordered_json stable_fields(const RunManifest& m) {
  return {{"tool_version", m.tool_version},
          {"phase", to_string(m.phase.phase)},
          {"sources", to_string(m.phase.sources)},
          {"k_primary", m.phase.k_primary},
          {"k_supplementary", m.phase.k_supplementary},
          {"temperature", m.phase.temperature},
          {"context_token_budget", m.phase.context_token_budget},
          {"group", m.group},
          {"embedder_tag", m.embedder_tag},
          {"generator_tag", m.generator_tag},
          {"backends", ordered_json::parse(m.backends.empty() ? "{}" : m.backends)},
          {"template_digest", m.template_digest},
          {"corpus_digest", m.corpus_digest},
          {"dataset_digest", m.dataset_digest}};
}

}  // namespace

std::string_view tool_version() noexcept { return PGXRAG_VERSION; }

std::string utc_now_iso8601() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string RunManifest::digest() const { return sha256_hex(stable_fields(*this).dump()); }

std::string RunManifest::to_json(int indent) const {
  auto j = stable_fields(*this);
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  j["manifest_digest"] = digest();
  return j.dump(indent);
}

std::string dataset_digest(std::span<const QueryRecord> records) {
  std::string all;
  for (const auto& r : records) {
    all += to_json_line(r);
    all += '\n';
  }
  return sha256_hex(all);
}

}  // namespace pgxrag
