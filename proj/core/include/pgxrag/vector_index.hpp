#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/corpus.hpp"
#include "pgxrag/embedding.hpp"

namespace pgxrag {

inline constexpr std::size_t kDefaultTopK = 4;

struct IndexEntry {
  std::string chunk_id;
  std::vector<float> values;  // unit-norm within VectorIndex::kStoredNormTolerance

  bool operator==(const IndexEntry&) const = default;
};

struct ScoredHit {
  std::string chunk_id;
  double score = 0.0;

  bool operator==(const ScoredHit&) const = default;
};

// Exact cosine index. Immutable after construction; entries are kept in
// chunk_id lexical order, which is also the on-disk order.
class VectorIndex {
 public:
  // float32 storage rounds each component, so stored vectors are only unit-norm to ~1e-7.
  static constexpr double kStoredNormTolerance = 1e-6;

  VectorIndex(std::size_t dim, std::string backend_tag, std::vector<IndexEntry> entries);

  std::size_t dim() const noexcept { return dim_; }
  const std::string& backend_tag() const noexcept { return backend_tag_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<IndexEntry>& entries() const noexcept { return entries_; }

  bool operator==(const VectorIndex&) const = default;

 private:
  std::size_t dim_;
  std::string backend_tag_;
  std::vector<IndexEntry> entries_;
};

// Embeds every chunk. With threads > 1 embedding runs concurrently; entry
// assembly does not depend on completion order.
VectorIndex build_index(std::span<const Chunk> chunks, const EmbeddingBackend& backend,
                        unsigned threads = 1);

// Exact top-k: non-increasing score, ties by ascending chunk_id. Returns
// min(k, index.size()) hits.
std::vector<ScoredHit> search_top_k(const VectorIndex& index, const EmbeddingVector& query,
                                    std::size_t k = kDefaultTopK);

// Same ranking restricted to entries whose chunk id passes `keep`.
std::vector<ScoredHit> search_top_k(const VectorIndex& index, const EmbeddingVector& query,
                                    std::size_t k,
                                    const std::function<bool(std::string_view)>& keep);

// Binary format: "PGXIDX1", u32 version, u32 dim, u64 count, u32 tag length,
// tag bytes, u64 FNV-1a checksum, count*dim little-endian float32 vectors,
// then count (u32 length, bytes) chunk ids. The checksum covers everything
// after itself plus dim, count and tag.
void persist_index(const VectorIndex& index, const std::filesystem::path& path);
VectorIndex open_index(const std::filesystem::path& path);

}  // namespace pgxrag
