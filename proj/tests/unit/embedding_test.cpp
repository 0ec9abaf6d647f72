#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "json.hpp"
#include "mock_server.hpp"
#include "pgxrag/embedding.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"

using namespace pgxrag;

namespace {

// Independent bucket computation: walk characters, collect lowercase
// alphanumeric runs, hash each with a hand-written FNV-1a loop.
std::vector<double> oracle_embedding(const std::string& text, std::size_t dim) {
  std::vector<double> counts(dim, 0.0);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : token) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    counts[h % dim] += 1.0;
    token.clear();
  };
  for (char c : text) {
    bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (alnum) {
      token += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    } else {
      flush();
    }
  }
  flush();
  double norm = 0;
  for (double v : counts) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : counts) v /= norm;
  return counts;
}

EmbeddingVector random_unit(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = n(rng);
  return EmbeddingVector::normalize(v);
}

}  // namespace

TEST(Embedding, RepeatedTokenHasOneBucket) {
  HashedBagOfWordsEmbedder e(64);
  auto v = e.embed("clopidogrel clopidogrel");
  int nonzero = 0;
  for (double x : v.values()) {
    if (x != 0.0) {
      ++nonzero;
      EXPECT_DOUBLE_EQ(x, 1.0);
    }
  }
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(v.dim(), 64u);
}

TEST(Embedding, MatchesIndependentOracle) {
  HashedBagOfWordsEmbedder e(64);
  for (std::string t : {"CYP2C19 and clopidogrel", "HLA-B*58:01 allopurinol; SJS/TEN risk!",
                        "warfarin warfarin VKORC1 CYP2C9 CYP4F2"}) {
    auto got = e.embed(t);
    auto want = oracle_embedding(t, 64);
    ASSERT_EQ(got.dim(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got.values()[i], want[i], 1e-12) << t;
  }
}

TEST(Embedding, DeterministicBitwise) {
  HashedBagOfWordsEmbedder e;
  EXPECT_EQ(e.embed("tacrolimus CYP3A5 expresser"), e.embed("tacrolimus CYP3A5 expresser"));
}

TEST(Embedding, TokenPermutationInvariance) {
  HashedBagOfWordsEmbedder e;
  std::mt19937_64 rng(7);
  std::vector<std::string> tokens = {"dpyd", "fluorouracil", "capecitabine", "reduced", "dose",
                                     "activity", "score", "1", "dose", "toxicity"};
  auto join = [](const std::vector<std::string>& t) {
    std::string s;
    for (const auto& x : t) s += x + " ";
    return s;
  };
  auto base = e.embed(join(tokens));
  for (int i = 0; i < 100; ++i) {
    std::shuffle(tokens.begin(), tokens.end(), rng);
    EXPECT_EQ(e.embed(join(tokens)), base);
  }
}

TEST(Embedding, UnitNorm) {
  HashedBagOfWordsEmbedder e(128);
  auto v = e.embed("abacavir hypersensitivity HLA-B*57:01 positive");
  double s = 0;
  for (double x : v.values()) s += x * x;
  EXPECT_NEAR(std::sqrt(s), 1.0, 1e-9);
}

TEST(Embedding, EmptyTextRejected) {
  HashedBagOfWordsEmbedder e;
  try {
    e.embed("   ");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::EmptyText);
  }
}

TEST(Embedding, NoTokensIsZeroEmbedding) {
  HashedBagOfWordsEmbedder e;
  try {
    e.embed("*** ---");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ZeroEmbedding);
  }
}

TEST(Embedding, FromUnitChecksNorm) {
  EXPECT_NO_THROW(EmbeddingVector::from_unit({0.6, 0.8}));
  try {
    EmbeddingVector::from_unit({0.6, 0.9});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotNormalized);
  }
}

TEST(Cosine, IdentityAndOrthogonality) {
  auto e1 = EmbeddingVector::from_unit({1.0, 0.0, 0.0});
  auto e2 = EmbeddingVector::from_unit({0.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(cosine_similarity(e1, e1), 1.0);
  EXPECT_DOUBLE_EQ(cosine_similarity(e1, e2), 0.0);
}

TEST(Cosine, DimensionMismatch) {
  auto a = EmbeddingVector::from_unit({1.0, 0.0});
  auto b = EmbeddingVector::from_unit({1.0, 0.0, 0.0});
  try {
    cosine_similarity(a, b);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Cosine, MatchesExplicitSumOracle) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto a = random_unit(rng, 64);
    auto b = random_unit(rng, 64);
    double s = 0;
    for (std::size_t k = 0; k < 64; ++k) s += a.values()[k] * b.values()[k];
    EXPECT_NEAR(cosine_similarity(a, b), s, 1e-12);
    EXPECT_LE(std::fabs(cosine_similarity(a, b)), 1.0);
  }
}

TEST(RemoteEmbedder, ParsesVectorAndSendsModel) {
  pgxrag::testing::MockServer server;
  std::string seen_model, seen_auth;
  server.post("/v1/embeddings", [&](const httplib::Request& req, httplib::Response& res) {
    auto body = nlohmann::json::parse(req.body);
    seen_model = body["model"].get<std::string>();
    seen_auth = req.get_header_value("Authorization");
    nlohmann::json reply = {{"data", {{{"embedding", {3.0, 4.0, 0.0}}}}}};
    res.set_content(reply.dump(), "application/json");
  });
  server.start();
  RemoteEmbedderConfig cfg;
  cfg.endpoint = server.base_url();
  cfg.dim = 3;
  cfg.api_key = "test-key";
  RemoteEmbedder e(cfg);
  auto v = e.embed("clopidogrel");
  EXPECT_NEAR(v.values()[0], 0.6, 1e-12);
  EXPECT_NEAR(v.values()[1], 0.8, 1e-12);
  EXPECT_EQ(seen_model, "text-embedding-3-small");
  EXPECT_EQ(seen_auth, "Bearer test-key");
  EXPECT_EQ(e.tag(), "remote:text-embedding-3-small/dim=3");
}

TEST(RemoteEmbedder, WrongDimensionRejected) {
  pgxrag::testing::MockServer server;
  server.post("/v1/embeddings", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"data":[{"embedding":[1.0, 0.0]}]})", "application/json");
  });
  server.start();
  RemoteEmbedderConfig cfg;
  cfg.endpoint = server.base_url();
  cfg.dim = 3;
  try {
    RemoteEmbedder(cfg).embed("x");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(RemoteEmbedder, UnreachableEndpointIsBackendUnavailable) {
  RemoteEmbedderConfig cfg;
  cfg.endpoint = "http://127.0.0.1:" + std::to_string(pgxrag::testing::unused_port()) + "/v1";
  cfg.timeout_seconds = 2;
  try {
    RemoteEmbedder(cfg).embed("x");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BackendUnavailable);
  }
}

TEST(RemoteEmbedder, ServerErrorIsBackendUnavailable) {
  pgxrag::testing::MockServer server;
  server.post("/v1/embeddings", [](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
    res.set_content("boom", "text/plain");
  });
  server.start();
  RemoteEmbedderConfig cfg;
  cfg.endpoint = server.base_url();
  try {
    RemoteEmbedder(cfg).embed("x");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BackendUnavailable);
  }
}
