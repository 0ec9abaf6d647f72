#include "pgxrag/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "http_client.hpp"
#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

EmbeddingVector EmbeddingVector::normalize(std::vector<double> raw) {
  double sq = 0.0;
  for (double x : raw) sq += x * x;
  if (raw.empty() || sq == 0.0) fail(ErrorCode::ZeroEmbedding, "cannot normalize an all-zero vector");
  double norm = std::sqrt(sq);
  for (double& x : raw) x /= norm;
  return EmbeddingVector(std::move(raw));
}

EmbeddingVector EmbeddingVector::from_unit(std::vector<double> values, double tolerance) {
  double sq = 0.0;
  for (double x : values) sq += x * x;
  if (values.empty() || std::abs(std::sqrt(sq) - 1.0) > tolerance) {
    fail(ErrorCode::NotNormalized, "vector norm " + std::to_string(std::sqrt(sq)) + " is not 1");
  }
  return EmbeddingVector(std::move(values));
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  auto x = a.values();
  auto y = b.values();
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
  return std::clamp(dot, -1.0, 1.0);
}

HashedBagOfWordsEmbedder::HashedBagOfWordsEmbedder(std::size_t dim) : dim_(dim) {
  if (dim_ == 0) fail(ErrorCode::InvalidArgument, "embedding dimension must be positive");
}

std::string HashedBagOfWordsEmbedder::tag() const {
  return "hashed-bow-fnv1a64/dim=" + std::to_string(dim_);
}

EmbeddingVector HashedBagOfWordsEmbedder::embed(std::string_view input) const {
  if (text::trim(input).empty()) fail(ErrorCode::EmptyText, "cannot embed empty text");
  std::vector<double> counts(dim_, 0.0);
  for (const auto& token : text::alnum_tokens(input)) counts[fnv1a64(token) % dim_] += 1.0;
  try {
    return EmbeddingVector::normalize(std::move(counts));
  } catch (const Error&) {
    fail(ErrorCode::ZeroEmbedding, "text has no alphanumeric tokens");
  }
}

RemoteEmbedder::RemoteEmbedder(RemoteEmbedderConfig config) : config_(std::move(config)) {
  if (config_.dim == 0) fail(ErrorCode::InvalidArgument, "remote embedding dimension must be positive");
}

std::string RemoteEmbedder::tag() const {
  return "remote:" + config_.model + "/dim=" + std::to_string(config_.dim);
}

EmbeddingVector RemoteEmbedder::embed(std::string_view input) const {
  using nlohmann::json;
  if (text::trim(input).empty()) fail(ErrorCode::EmptyText, "cannot embed empty text");
  json request = {{"model", config_.model}, {"input", std::string(input)}};
  auto body = detail::post_json(config_.endpoint, "/embeddings", request.dump(), config_.api_key,
                                config_.timeout_seconds);
  std::vector<double> values;
  try {
    values = json::parse(body).at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const json::exception& e) {
    fail(ErrorCode::BackendUnavailable, std::string("unexpected embeddings response: ") + e.what());
  }
  if (values.size() != config_.dim) {
    fail(ErrorCode::DimensionMismatch, "remote embedder returned dim " +
                                           std::to_string(values.size()) + ", expected " +
                                           std::to_string(config_.dim));
  }
  return EmbeddingVector::normalize(std::move(values));
}

}  // namespace pgxrag
