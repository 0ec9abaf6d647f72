#include <gtest/gtest.h>

#include "pgxrag/error.hpp"
#include "pgxrag/knowledge_base.hpp"
#include "test_support.hpp"

using namespace pgxrag;
using pgxrag::testing::TempDir;

namespace {

std::vector<Document> sample_docs() {
  return load_corpus(pgxrag::testing::data("corpus"), {Source::CPIC, Source::PharmGKB}).documents;
}

}  // namespace

TEST(KnowledgeBase, FromDocumentsMatchesExpectedCounts) {
  auto docs = sample_docs();
  auto kb = KnowledgeBase::from_documents(docs);
  EXPECT_EQ(kb.size(), 42u);
  EXPECT_EQ(kb.sources(), (SourceSet{Source::CPIC, Source::PharmGKB}));

  auto cpic = load_corpus(pgxrag::testing::data("corpus"), {Source::CPIC}).documents;
  auto kb1 = KnowledgeBase::from_documents(cpic);
  EXPECT_EQ(kb1.size(), 34u);
  EXPECT_EQ(kb1.sources(), SourceSet{Source::CPIC});
}

TEST(KnowledgeBase, LookupAndProvenance) {
  auto kb = KnowledgeBase::from_documents(sample_docs());
  const auto* c = kb.find("cpic-cyp2c19-clopidogrel#0");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->source, Source::CPIC);
  EXPECT_EQ(c->chunk.doc_id, "cpic-cyp2c19-clopidogrel");
  EXPECT_EQ(kb.find("nope#0"), nullptr);
  try {
    kb.at("nope#0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
}

TEST(KnowledgeBase, SaveLoadRoundTripAndDigest) {
  TempDir dir;
  auto kb = KnowledgeBase::from_documents(sample_docs());
  kb.save(dir / "kb.jsonl");
  auto back = KnowledgeBase::load(dir / "kb.jsonl");
  EXPECT_EQ(back.chunks(), kb.chunks());
  EXPECT_EQ(back.digest(), kb.digest());
  EXPECT_EQ(kb.digest().size(), 64u);
  EXPECT_EQ(kb.plain_chunks().size(), kb.size());
}

TEST(KnowledgeBase, DuplicateIdsRejected) {
  KnowledgeChunk a;
  a.chunk.chunk_id = "x#0";
  a.chunk.doc_id = "x";
  a.chunk.text = "t";
  EXPECT_THROW(KnowledgeBase({a, a}), Error);
}

TEST(KnowledgeBase, LoadErrors) {
  TempDir dir;
  try {
    KnowledgeBase::load(dir / "missing.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingFile);
  }
  pgxrag::testing::write_file(dir / "bad.jsonl", "{\"chunk_id\": 3}\n");
  try {
    KnowledgeBase::load(dir / "bad.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedRecord);
  }
}

TEST(KnowledgeBase, SidecarPath) {
  EXPECT_EQ(chunk_store_path("/a/b/idx.bin"), std::filesystem::path("/a/b/idx.bin.chunks.jsonl"));
}
