#include "pgxrag/vector_index.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <exception>
#include <fstream>
#include <iterator>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"

namespace pgxrag {
namespace {

constexpr std::string_view kMagic = "PGXIDX1";
constexpr std::uint32_t kFormatVersion = 1;

bool ranks_before(const ScoredHit& a, const ScoredHit& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.chunk_id < b.chunk_id;
}

class ByteWriter {
 public:
  void u32(std::uint32_t v) { le(v, 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  void bytes(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
  const std::string& data() const { return buf_; }

 private:
  void le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  std::uint64_t u64() { return le(8); }
  float f32() { return std::bit_cast<float>(u32()); }
  std::string_view bytes(std::size_t n) {
    need(n);
    auto out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::size_t remaining() const { return data_.size() - pos_; }
  std::string_view rest() const { return data_.substr(pos_); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) fail(ErrorCode::CorruptIndex, "index file truncated");
  }
  std::uint64_t le(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(n);
    return v;
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

std::uint64_t checksum(std::uint32_t dim, std::uint64_t count, std::string_view tag,
                       std::string_view payload) {
  ByteWriter head;
  head.u32(dim);
  head.u64(count);
  head.bytes(tag);
  Fnv1a64 h;
  h.update(head.data());
  h.update(payload);
  return h.digest();
}

}  // namespace

VectorIndex::VectorIndex(std::size_t dim, std::string backend_tag, std::vector<IndexEntry> entries)
    : dim_(dim), backend_tag_(std::move(backend_tag)), entries_(std::move(entries)) {
  if (dim_ == 0) fail(ErrorCode::InvalidArgument, "index dimension must be positive");
  std::sort(entries_.begin(), entries_.end(),
            [](const IndexEntry& a, const IndexEntry& b) { return a.chunk_id < b.chunk_id; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (i > 0 && entries_[i - 1].chunk_id == e.chunk_id) {
      fail(ErrorCode::DuplicateChunkId, "duplicate chunk_id '" + e.chunk_id + "'");
    }
    if (e.values.size() != dim_) {
      fail(ErrorCode::DimensionMismatch, "entry '" + e.chunk_id + "' has dim " +
                                             std::to_string(e.values.size()));
    }
    double sq = 0.0;
    for (float x : e.values) sq += static_cast<double>(x) * x;
    if (std::abs(std::sqrt(sq) - 1.0) > kStoredNormTolerance) {
      fail(ErrorCode::NotNormalized, "entry '" + e.chunk_id + "' is not unit-norm");
    }
  }
}

VectorIndex build_index(std::span<const Chunk> chunks, const EmbeddingBackend& backend,
                        unsigned threads) {
  if (chunks.empty()) fail(ErrorCode::EmptyCorpus, "cannot build an index from zero chunks");
  {
    std::unordered_set<std::string_view> ids;
    for (const auto& c : chunks) {
      if (!ids.insert(c.chunk_id).second) {
        fail(ErrorCode::DuplicateChunkId, "duplicate chunk_id '" + c.chunk_id + "'");
      }
    }
  }

  std::vector<IndexEntry> entries(chunks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::size_t first_error_pos = chunks.size();
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < chunks.size(); i = next++) {
      try {
        auto v = backend.embed(chunks[i].text);
        entries[i].chunk_id = chunks[i].chunk_id;
        entries[i].values.assign(v.values().begin(), v.values().end());
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (i < first_error_pos) {
          first_error_pos = i;
          first_error = std::make_exception_ptr(
              Error(e.code(), "chunk '" + chunks[i].chunk_id + "': " + e.what()));
        }
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return VectorIndex(backend.dim(), backend.tag(), std::move(entries));
}

std::vector<ScoredHit> search_top_k(const VectorIndex& index, const EmbeddingVector& query,
                                    std::size_t k) {
  return search_top_k(index, query, k, nullptr);
}

std::vector<ScoredHit> search_top_k(const VectorIndex& index, const EmbeddingVector& query,
                                    std::size_t k,
                                    const std::function<bool(std::string_view)>& keep_entry) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "k must be positive");
  if (query.dim() != index.dim()) {
    fail(ErrorCode::DimensionMismatch, "query dim " + std::to_string(query.dim()) +
                                           " vs index dim " + std::to_string(index.dim()));
  }
  auto q = query.values();
  std::vector<ScoredHit> hits;
  hits.reserve(index.size());
  for (const auto& e : index.entries()) {
    if (keep_entry && !keep_entry(e.chunk_id)) continue;
    double dot = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) dot += q[i] * static_cast<double>(e.values[i]);
    hits.push_back({e.chunk_id, std::clamp(dot, -1.0, 1.0)});
  }
  auto keep = std::min(k, hits.size());
  std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(keep), hits.end(),
                    ranks_before);
  hits.resize(keep);
  return hits;
}

void persist_index(const VectorIndex& index, const std::filesystem::path& path) {
  ByteWriter payload;
  for (const auto& e : index.entries()) {
    for (float x : e.values) payload.f32(x);
  }
  for (const auto& e : index.entries()) {
    payload.u32(static_cast<std::uint32_t>(e.chunk_id.size()));
    payload.bytes(e.chunk_id);
  }

  ByteWriter header;
  header.bytes(kMagic);
  header.u32(kFormatVersion);
  header.u32(static_cast<std::uint32_t>(index.dim()));
  header.u64(index.size());
  header.u32(static_cast<std::uint32_t>(index.backend_tag().size()));
  header.bytes(index.backend_tag());
  header.u64(checksum(static_cast<std::uint32_t>(index.dim()), index.size(), index.backend_tag(),
                      payload.data()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot write index: " + path.string());
  out.write(header.data().data(), static_cast<std::streamsize>(header.data().size()));
  out.write(payload.data().data(), static_cast<std::streamsize>(payload.data().size()));
  if (!out.flush()) fail(ErrorCode::IoFailure, "failed writing index: " + path.string());
}

VectorIndex open_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (path.empty() || !in) fail(ErrorCode::IoFailure, "cannot open index: " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  ByteReader r(data);
  if (data.size() < kMagic.size() || r.bytes(kMagic.size()) != kMagic) {
    fail(ErrorCode::CorruptIndex, "bad magic in " + path.string());
  }
  auto version = r.u32();
  if (version != kFormatVersion) {
    fail(ErrorCode::VersionMismatch, "index format version " + std::to_string(version) +
                                         ", expected " + std::to_string(kFormatVersion));
  }
  auto dim = r.u32();
  auto count = r.u64();
  std::string tag(r.bytes(r.u32()));
  auto stored_checksum = r.u64();
  if (checksum(dim, count, tag, r.rest()) != stored_checksum) {
    fail(ErrorCode::CorruptIndex, "checksum mismatch in " + path.string());
  }
  if (dim == 0 || count > r.remaining() / (static_cast<std::uint64_t>(dim) * 4)) {
    fail(ErrorCode::CorruptIndex, "implausible header in " + path.string());
  }

  std::vector<IndexEntry> entries(count);
  for (auto& e : entries) {
    e.values.resize(dim);
    for (auto& x : e.values) x = r.f32();
  }
  for (auto& e : entries) e.chunk_id = std::string(r.bytes(r.u32()));
  if (r.remaining() != 0) fail(ErrorCode::CorruptIndex, "trailing bytes in " + path.string());
  try {
    return VectorIndex(dim, std::move(tag), std::move(entries));
  } catch (const Error& e) {
    fail(ErrorCode::CorruptIndex, std::string("invalid index contents: ") + e.what());
  }
}

}  // namespace pgxrag
