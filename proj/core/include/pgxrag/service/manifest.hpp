#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "pgxrag/evaluation/dataset.hpp"
#include "pgxrag/pipeline.hpp"

namespace pgxrag {

std::string_view tool_version() noexcept;

// "2025-01-15T08:30:00Z"
std::string utc_now_iso8601();

struct RunManifest {
  std::string tool_version;
  PhaseConfig phase;
  std::string group;
  std::string embedder_tag;
  std::string generator_tag;
  std::string backends;  // ServiceConfig::describe_json()
  std::string template_digest;
  std::string corpus_digest;
  std::string dataset_digest;
  std::string started_at;
  std::string finished_at;

  // SHA-256 over every field except the timestamps.
  std::string digest() const;
  std::string to_json(int indent = 2) const;
};

std::string dataset_digest(std::span<const QueryRecord> records);

}  // namespace pgxrag
