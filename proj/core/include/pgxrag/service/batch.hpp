#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "pgxrag/evaluation/dataset.hpp"
#include "pgxrag/service/engine.hpp"
#include "pgxrag/service/manifest.hpp"

namespace pgxrag {

struct BatchResult {
  std::size_t responses = 0;
  RunManifest manifest;
  std::filesystem::path output;
  std::filesystem::path manifest_path;  // "<output>.manifest.json"
};

// Answers every query in dataset order and writes one JSON line per
// response, each carrying the group tag and the manifest digest. The output
// file is replaced atomically. Timestamps live only in the manifest file, so
// equal manifests give byte-identical outputs with offline backends.
BatchResult run_batch(const Engine& engine, std::span<const QueryRecord> dataset, Phase phase,
                      const std::filesystem::path& output, std::string group = {});

// One response line with the batch fields added.
std::string batch_line(const PipelineResponse& response, const std::string& group,
                       const std::string& manifest_digest);

}  // namespace pgxrag
