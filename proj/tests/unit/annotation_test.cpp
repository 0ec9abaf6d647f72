#include <gtest/gtest.h>

#include <functional>
#include <thread>

#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/annotation.hpp"
#include "test_support.hpp"

using namespace pgxrag;
using pgxrag::testing::TempDir;

namespace {

AnnotationRecord rec(std::string qid, std::string group, int acc, std::string annotator = "ann-1") {
  AnnotationRecord r;
  r.response_ref = {std::move(qid), std::move(group)};
  r.accuracy = acc;
  r.relevance = 5;
  r.completeness = 4;
  r.clarity = 5;
  r.tp = 3;
  r.fn = 1;
  r.annotator_id = std::move(annotator);
  r.timestamp = "2025-02-01T10:00:00Z";
  return r;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(AnnotationRecord, JsonRoundTrip) {
  auto r = rec("q1", "phase1", 4);
  r.fp = 2;
  EXPECT_EQ(parse_annotation(to_json_line(r)), r);
  auto bare = rec("q1", "phase1", 4);
  bare.tp.reset();
  bare.fn.reset();
  EXPECT_EQ(parse_annotation(to_json_line(bare)), bare);
}

TEST(AnnotationRecord, RequestShapeAccepted) {
  auto r = parse_annotation(
      R"({"response_ref":"q9","group":"phase2","scores":{"accuracy":3,"relevance":4,"completeness":5,"clarity":2},)"
      R"("tp":4,"fn":0,"annotator_id":"x"})");
  EXPECT_EQ(r.response_ref.query_id, "q9");
  EXPECT_EQ(r.response_ref.group, "phase2");
  EXPECT_EQ(r.accuracy, 3);
  EXPECT_EQ(r.clarity, 2);
  EXPECT_EQ(r.tp, 4);
  EXPECT_FALSE(r.fp.has_value());
  EXPECT_TRUE(r.timestamp.empty());
}

TEST(AnnotationRecord, RangeAndSchemaViolations) {
  auto base = to_json_line(rec("q", "g", 5));
  for (auto bad : {std::string("{}"), std::string("not json"),
                   std::string(R"({"response_ref":{"query_id":"q","group":"g"},"accuracy":6,"relevance":5,)"
                               R"("completeness":5,"clarity":5,"annotator_id":"a","timestamp":"t"})"),
                   std::string(R"({"response_ref":{"query_id":"q","group":"g"},"accuracy":4.5,"relevance":5,)"
                               R"("completeness":5,"clarity":5,"annotator_id":"a","timestamp":"t"})")}) {
    EXPECT_EQ(code_of([&] { parse_annotation(bad); }), ErrorCode::MalformedRecord) << bad;
  }
  auto r = rec("q", "g", 5);
  r.tp = -1;
  EXPECT_EQ(code_of([&] { validate_annotation(r); }), ErrorCode::MalformedRecord);
  r = rec("q", "g", 0);
  EXPECT_EQ(code_of([&] { validate_annotation(r); }), ErrorCode::MalformedRecord);
}

TEST(AnnotationStore, LastRecordPerAnnotatorWins) {
  TempDir dir;
  {
    AnnotationStore store(dir / "a.jsonl");
    store.append(rec("q1", "phase1", 2));
    store.append(rec("q1", "phase1", 4));
    store.append(rec("q1", "phase1", 3, "ann-2"));
    store.append(rec("q2", "phase2", 5));
    EXPECT_EQ(store.log_lines(), 4u);
    auto rs = store.records();
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_EQ(rs[0].accuracy, 4);
    EXPECT_EQ(rs[1].accuracy, 3);
    EXPECT_EQ(store.groups(), (std::set<std::string>{"phase1", "phase2"}));
    EXPECT_EQ(store.records_for("phase2").size(), 1u);
  }
  AnnotationStore reopened(dir / "a.jsonl");
  EXPECT_EQ(reopened.records().size(), 3u);
  EXPECT_EQ(reopened.records()[0].accuracy, 4);
  EXPECT_EQ(load_annotations(dir / "a.jsonl"), reopened.records());
}

TEST(AnnotationStore, SubmissionTokenIsSingleUseAcrossReopen) {
  TempDir dir;
  {
    AnnotationStore store(dir / "a.jsonl");
    store.append(rec("q1", "g", 5), "tok-1");
    EXPECT_EQ(code_of([&] { store.append(rec("q1", "g", 1), "tok-1"); }), ErrorCode::DuplicateSubmission);
    EXPECT_EQ(store.records()[0].accuracy, 5);
  }
  AnnotationStore again(dir / "a.jsonl");
  EXPECT_EQ(code_of([&] { again.append(rec("q1", "g", 1), "tok-1"); }), ErrorCode::DuplicateSubmission);
  EXPECT_NO_THROW(again.append(rec("q1", "g", 1), "tok-2"));
}

TEST(AnnotationStore, InvalidRecordNotWritten) {
  TempDir dir;
  AnnotationStore store(dir / "a.jsonl");
  EXPECT_THROW(store.append(rec("q1", "g", 9)), Error);
  EXPECT_EQ(store.log_lines(), 0u);
  EXPECT_FALSE(std::filesystem::exists(dir / "a.jsonl"));
}

TEST(AnnotationStore, TornTailDiscardedOnOpen) {
  TempDir dir;
  {
    AnnotationStore store(dir / "a.jsonl");
    store.append(rec("q1", "g", 5));
  }
  auto good = pgxrag::testing::read_file(dir / "a.jsonl");
  pgxrag::testing::write_file(dir / "a.jsonl", good + R"({"response_ref":{"query_id":"q2","gr)");
  AnnotationStore store(dir / "a.jsonl");
  EXPECT_EQ(store.records().size(), 1u);
  EXPECT_EQ(pgxrag::testing::read_file(dir / "a.jsonl"), good);
  store.append(rec("q3", "g", 4));
  AnnotationStore reopened(dir / "a.jsonl");
  EXPECT_EQ(reopened.records().size(), 2u);
}

TEST(AnnotationStore, UnterminatedValidTailKept) {
  TempDir dir;
  auto line = to_json_line(rec("q1", "g", 5));
  pgxrag::testing::write_file(dir / "a.jsonl", line);
  AnnotationStore store(dir / "a.jsonl");
  EXPECT_EQ(store.records().size(), 1u);
  store.append(rec("q2", "g", 4));
  AnnotationStore reopened(dir / "a.jsonl");
  EXPECT_EQ(reopened.records().size(), 2u);
}

TEST(AnnotationStore, CorruptMiddleLineRejected) {
  TempDir dir;
  pgxrag::testing::write_file(dir / "a.jsonl", "garbage\n" + to_json_line(rec("q1", "g", 5)) + "\n");
  EXPECT_EQ(code_of([&] { AnnotationStore s(dir / "a.jsonl"); }), ErrorCode::MalformedRecord);
}

TEST(AnnotationStore, ConcurrentAppendsAllLand) {
  TempDir dir;
  AnnotationStore store(dir / "a.jsonl");
  constexpr int kThreads = 4, kEach = 25;
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < kThreads; ++t) {
      pool.emplace_back([&, t] {
        for (int i = 0; i < kEach; ++i) {
          store.append(rec("q" + std::to_string(i), "g" + std::to_string(t), 1 + i % 5),
                       "t" + std::to_string(t) + "-" + std::to_string(i));
          (void)store.records().size();
        }
      });
    }
  }
  EXPECT_EQ(store.log_lines(), static_cast<std::size_t>(kThreads * kEach));
  AnnotationStore reopened(dir / "a.jsonl");
  EXPECT_EQ(reopened.records().size(), static_cast<std::size_t>(kThreads * kEach));
  EXPECT_EQ(reopened.records(), store.records());
}
