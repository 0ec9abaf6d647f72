#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgxrag {

// Unit-norm embedding. Construction normalizes (or checks) so every live
// instance satisfies |v| = 1 within kUnitNormTolerance.
class EmbeddingVector {
 public:
  static constexpr double kUnitNormTolerance = 1e-9;

  // L2-normalizes `raw`; throws ZeroEmbedding for an all-zero vector.
  static EmbeddingVector normalize(std::vector<double> raw);
  // Wraps an already unit-norm vector; throws NotNormalized otherwise.
  static EmbeddingVector from_unit(std::vector<double> values,
                                   double tolerance = kUnitNormTolerance);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t dim() const noexcept { return values_.size(); }

  bool operator==(const EmbeddingVector&) const = default;

 private:
  explicit EmbeddingVector(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

// Dot product of two unit vectors, clamped to [-1, 1].
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual std::size_t dim() const = 0;
  // Identifies the vector space; an index only accepts queries from a
  // backend with the same tag.
  virtual std::string tag() const = 0;
  virtual EmbeddingVector embed(std::string_view text) const = 0;
};

// Offline reference embedder: each lowercased alphanumeric token adds 1 to
// bucket fnv1a64(token) % dim, then the counts are L2-normalized.
class HashedBagOfWordsEmbedder final : public EmbeddingBackend {
 public:
  static constexpr std::size_t kDefaultDim = 64;

  explicit HashedBagOfWordsEmbedder(std::size_t dim = kDefaultDim);

  std::size_t dim() const override { return dim_; }
  std::string tag() const override;
  EmbeddingVector embed(std::string_view text) const override;

 private:
  std::size_t dim_;
};

struct RemoteEmbedderConfig {
  std::string endpoint = "https://api.openai.com/v1";
  std::string model = "text-embedding-3-small";
  std::size_t dim = 1536;
  std::string api_key;
  int timeout_seconds = 60;
};

// OpenAI-compatible POST {endpoint}/embeddings client.
class RemoteEmbedder final : public EmbeddingBackend {
 public:
  explicit RemoteEmbedder(RemoteEmbedderConfig config);

  std::size_t dim() const override { return config_.dim; }
  std::string tag() const override;
  EmbeddingVector embed(std::string_view text) const override;

 private:
  RemoteEmbedderConfig config_;
};

}  // namespace pgxrag
