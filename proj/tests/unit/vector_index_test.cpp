#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include "pgxrag/corpus.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/vector_index.hpp"
#include "test_support.hpp"

using namespace pgxrag;
using pgxrag::testing::TempDir;

namespace {

std::vector<float> random_unit_f(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(dim);
  double s = 0;
  for (auto& x : v) {
    x = n(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  std::vector<float> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = static_cast<float>(v[i] / s);
  return out;
}

EmbeddingVector random_query(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = n(rng);
  return EmbeddingVector::normalize(v);
}

// Full sort of every score; the reference the partial-sort search must match.
std::vector<std::string> brute_force(const VectorIndex& index, const EmbeddingVector& q, std::size_t k) {
  std::vector<std::pair<double, std::string>> all;
  for (const auto& e : index.entries()) {
    double dot = 0;
    for (std::size_t i = 0; i < q.dim(); ++i) dot += q.values()[i] * static_cast<double>(e.values[i]);
    all.emplace_back(std::clamp(dot, -1.0, 1.0), e.chunk_id);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < std::min(k, all.size()); ++i) ids.push_back(all[i].second);
  return ids;
}

VectorIndex random_index(std::mt19937_64& rng, std::size_t n, std::size_t dim, std::size_t duplicates) {
  std::vector<IndexEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "c%04zu", (rng() % 100000));
    entries.push_back({std::string(id) + "-" + std::to_string(i), random_unit_f(rng, dim)});
  }
  for (std::size_t d = 0; d < duplicates && !entries.empty(); ++d) {
    auto src = entries[rng() % entries.size()].values;
    entries.push_back({"dup-" + std::to_string(d), src});
  }
  return VectorIndex(dim, "test", std::move(entries));
}

class FixedEmbedder : public EmbeddingBackend {
 public:
  std::size_t dim() const override { return 2; }
  std::string tag() const override { return "fixed"; }
  EmbeddingVector embed(std::string_view text) const override {
    if (text == "bad") throw Error(ErrorCode::ZeroEmbedding, "no tokens");
    return EmbeddingVector::from_unit({text.size() % 2 ? 1.0 : 0.0, text.size() % 2 ? 0.0 : 1.0});
  }
};

Chunk chunk(std::string id, std::string text) {
  Chunk c;
  c.chunk_id = std::move(id);
  c.doc_id = "d";
  c.text = std::move(text);
  c.token_estimate = 1;
  return c;
}

}  // namespace

TEST(VectorIndex, SingletonSearch) {
  VectorIndex idx(2, "t", {{"only", {1.0f, 0.0f}}});
  auto hits = search_top_k(idx, EmbeddingVector::from_unit({0.0, 1.0}), 4);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].chunk_id, "only");
}

TEST(VectorIndex, ZeroKRejected) {
  VectorIndex idx(2, "t", {{"only", {1.0f, 0.0f}}});
  EXPECT_THROW(search_top_k(idx, EmbeddingVector::from_unit({1.0, 0.0}), 0), Error);
}

TEST(VectorIndex, QueryDimensionMismatch) {
  VectorIndex idx(2, "t", {{"only", {1.0f, 0.0f}}});
  try {
    search_top_k(idx, EmbeddingVector::from_unit({1.0, 0.0, 0.0}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(VectorIndex, ConstructionValidates) {
  EXPECT_THROW(VectorIndex(2, "t", {{"a", {1.0f, 0.0f}}, {"a", {0.0f, 1.0f}}}), Error);
  EXPECT_THROW(VectorIndex(2, "t", {{"a", {1.0f, 0.0f, 0.0f}}}), Error);
  EXPECT_THROW(VectorIndex(2, "t", {{"a", {0.5f, 0.5f}}}), Error);
}

TEST(VectorIndex, MatchesBruteForceWithTies) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    auto idx = random_index(rng, 200, 64, trial % 4 == 0 ? 10 : 0);
    EmbeddingVector q = trial % 8 == 0 ? EmbeddingVector::from_unit([&] {
      std::vector<double> v(idx.entries()[0].values.begin(), idx.entries()[0].values.end());
      double s = 0;
      for (double x : v) s += x * x;
      for (double& x : v) x /= std::sqrt(s);
      return v;
    }())
                                       : random_query(rng, 64);
    auto hits = search_top_k(idx, q, 4);
    std::vector<std::string> got;
    for (const auto& h : hits) got.push_back(h.chunk_id);
    ASSERT_EQ(got, brute_force(idx, q, 4)) << "trial " << trial;
  }
}

TEST(VectorIndex, DuplicateVectorsOrderByChunkId) {
  std::vector<float> v = {0.6f, 0.8f};
  VectorIndex idx(2, "t", {{"zeta", v}, {"alpha", v}, {"mid", v}, {"other", {1.0f, 0.0f}}});
  auto hits = search_top_k(idx, EmbeddingVector::from_unit({0.6, 0.8}), 3);
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0].chunk_id, "alpha");
  EXPECT_EQ(hits[1].chunk_id, "mid");
  EXPECT_EQ(hits[2].chunk_id, "zeta");
  EXPECT_EQ(hits[0].score, hits[2].score);
}

TEST(VectorIndex, EnlargingKKeepsPrefix) {
  std::mt19937_64 rng(5);
  auto idx = random_index(rng, 150, 16, 20);
  for (int t = 0; t < 50; ++t) {
    auto q = random_query(rng, 16);
    auto small = search_top_k(idx, q, 4);
    for (std::size_t k : {5u, 10u, 40u, 500u}) {
      auto big = search_top_k(idx, q, k);
      ASSERT_EQ(big.size(), std::min<std::size_t>(k, idx.size()));
      for (std::size_t i = 0; i < small.size(); ++i) ASSERT_EQ(big[i], small[i]);
      for (std::size_t i = 1; i < big.size(); ++i) ASSERT_GE(big[i - 1].score, big[i].score);
    }
  }
}

TEST(VectorIndex, FilteredSearchMatchesSubIndex) {
  std::mt19937_64 rng(9);
  auto idx = random_index(rng, 120, 16, 8);
  std::vector<IndexEntry> even;
  for (std::size_t i = 0; i < idx.size(); i += 2) even.push_back(idx.entries()[i]);
  std::set<std::string> keep;
  for (const auto& e : even) keep.insert(e.chunk_id);
  VectorIndex sub(16, "test", even);
  for (int t = 0; t < 50; ++t) {
    auto q = random_query(rng, 16);
    auto filtered = search_top_k(idx, q, 4, [&](std::string_view id) { return keep.count(std::string(id)) > 0; });
    ASSERT_EQ(filtered, search_top_k(sub, q, 4));
  }
}

TEST(BuildIndex, OneEntryPerChunk) {
  FixedEmbedder e;
  std::vector<Chunk> chunks = {chunk("b", "xx"), chunk("a", "x")};
  auto idx = build_index(chunks, e);
  EXPECT_EQ(idx.size(), 2u);
  EXPECT_EQ(idx.dim(), 2u);
  EXPECT_EQ(idx.backend_tag(), "fixed");
  EXPECT_EQ(idx.entries()[0].chunk_id, "a");
}

TEST(BuildIndex, Errors) {
  FixedEmbedder e;
  std::vector<Chunk> none;
  try {
    build_index(none, e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::EmptyCorpus);
  }
  std::vector<Chunk> dup = {chunk("a", "x"), chunk("a", "y")};
  try {
    build_index(dup, e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DuplicateChunkId);
  }
  std::vector<Chunk> bad = {chunk("a", "x"), chunk("broken#3", "bad")};
  try {
    build_index(bad, e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ZeroEmbedding);
    EXPECT_NE(std::string(err.what()).find("broken#3"), std::string::npos) << err.what();
  }
}

TEST(BuildIndex, ThreadedBuildEqualsSerial) {
  HashedBagOfWordsEmbedder e;
  auto docs = load_corpus(pgxrag::testing::data("corpus"), {Source::CPIC, Source::PharmGKB}).documents;
  std::vector<Chunk> chunks;
  for (const auto& d : docs)
    for (auto& c : chunk_document(d).chunks) chunks.push_back(std::move(c));
  EXPECT_EQ(build_index(chunks, e, 1), build_index(chunks, e, 4));
}

TEST(Persistence, RoundTrip) {
  TempDir dir;
  std::mt19937_64 rng(1);
  auto idx = random_index(rng, 50, 32, 3);
  persist_index(idx, dir / "x.idx");
  EXPECT_EQ(open_index(dir / "x.idx"), idx);
}

TEST(Persistence, FlippedByteDetected) {
  TempDir dir;
  std::mt19937_64 rng(2);
  persist_index(random_index(rng, 10, 8, 0), dir / "x.idx");
  auto bytes = pgxrag::testing::read_file(dir / "x.idx");
  bytes[bytes.size() - 40] ^= 0x01;
  pgxrag::testing::write_file(dir / "y.idx", bytes);
  try {
    open_index(dir / "y.idx");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CorruptIndex);
  }
}

TEST(Persistence, BadMagicTruncationAndTrailingBytes) {
  TempDir dir;
  std::mt19937_64 rng(3);
  persist_index(random_index(rng, 10, 8, 0), dir / "x.idx");
  auto bytes = pgxrag::testing::read_file(dir / "x.idx");

  auto magic = bytes;
  magic[0] = 'Q';
  pgxrag::testing::write_file(dir / "m.idx", magic);
  pgxrag::testing::write_file(dir / "t.idx", bytes.substr(0, bytes.size() - 3));
  pgxrag::testing::write_file(dir / "x2.idx", bytes + "zz");
  for (auto name : {"m.idx", "t.idx", "x2.idx"}) {
    try {
      open_index(dir / name);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CorruptIndex) << name;
    }
  }
}

TEST(Persistence, VersionMismatch) {
  TempDir dir;
  std::mt19937_64 rng(4);
  persist_index(random_index(rng, 4, 8, 0), dir / "x.idx");
  auto bytes = pgxrag::testing::read_file(dir / "x.idx");
  bytes[7] = 2;  // u32 version follows the 7-byte magic, little-endian
  pgxrag::testing::write_file(dir / "v.idx", bytes);
  try {
    open_index(dir / "v.idx");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VersionMismatch);
  }
}

TEST(Persistence, MissingOrEmptyPath) {
  EXPECT_THROW(open_index("/nonexistent/idx"), Error);
  EXPECT_THROW(open_index(""), Error);
}
