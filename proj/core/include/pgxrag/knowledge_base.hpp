#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/corpus.hpp"

namespace pgxrag {

struct KnowledgeChunk {
  Chunk chunk;
  Source source = Source::Other;
  std::string guideline_key;
  std::string title;

  bool operator==(const KnowledgeChunk&) const = default;
};

// Chunk text plus provenance, keyed by chunk_id. Persisted next to the vector
// index as JSON Lines so queries can recover the text of retrieved chunks.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<KnowledgeChunk> chunks);

  static KnowledgeBase from_documents(std::span<const Document> docs,
                                      std::size_t max_chunk_tokens = kDefaultMaxChunkTokens);
  static KnowledgeBase load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const std::vector<KnowledgeChunk>& chunks() const noexcept { return chunks_; }
  std::vector<Chunk> plain_chunks() const;
  const KnowledgeChunk* find(std::string_view chunk_id) const;
  const KnowledgeChunk& at(std::string_view chunk_id) const;  // throws NotFound
  SourceSet sources() const;
  std::size_t size() const noexcept { return chunks_.size(); }

  // SHA-256 over the serialized chunks; recorded in run manifests.
  std::string digest() const;

 private:
  std::vector<KnowledgeChunk> chunks_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

// Sidecar path written by ingest: "<index>.chunks.jsonl".
std::filesystem::path chunk_store_path(const std::filesystem::path& index_path);

}  // namespace pgxrag
