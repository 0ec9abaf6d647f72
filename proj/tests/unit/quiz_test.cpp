#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/quiz.hpp"
#include "test_support.hpp"

using namespace pgxrag;

namespace {

std::vector<QuizItem> key() { return load_quiz(pgxrag::testing::data("fixtures/quiz/quiz20.json")); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

QuizAnswers perfect(const std::vector<QuizItem>& items) {
  QuizAnswers a;
  for (const auto& it : items) a.emplace_back(it.item_id, *it.correct.begin());
  return a;
}

}  // namespace

TEST(Quiz, ShippedKeyShape) {
  auto items = key();
  ASSERT_EQ(items.size(), 20u);
  bool multi = false;
  for (const auto& it : items) {
    EXPECT_EQ(it.choices.size(), kChoicesPerItem);
    EXPECT_FALSE(it.correct.empty());
    multi |= it.correct.size() > 1;
  }
  EXPECT_TRUE(multi) << "fixture should exercise a multi-correct item";
}

TEST(Quiz, PerfectScore) {
  auto items = key();
  auto r = score_quiz(perfect(items), items);
  EXPECT_EQ(r.correct_count, 20u);
  EXPECT_EQ(r.accuracy, 1.0);
}

TEST(Quiz, ShippedAnswerSheetsReproduceLadder) {
  auto items = key();
  struct Want {
    const char* file;
    std::size_t correct;
    double accuracy;
  };
  for (auto w : {Want{"answers_sherpa_phase3.json", 18, 0.90}, Want{"answers_claude37.json", 17, 0.85},
                 Want{"answers_gemini20.json", 16, 0.80}, Want{"answers_gpt4omini.json", 14, 0.70}}) {
    auto r = score_quiz(load_answers(pgxrag::testing::data(std::string("fixtures/quiz/") + w.file)), items);
    EXPECT_EQ(r.correct_count, w.correct) << w.file;
    EXPECT_EQ(r.total, 20u);
    EXPECT_DOUBLE_EQ(r.accuracy, w.accuracy) << w.file;
  }
}

TEST(Quiz, AnyKeyedChoiceOnMultiCorrectItem) {
  auto items = key();
  for (const auto& it : items) {
    if (it.correct.size() < 2) continue;
    for (int choice : it.correct) {
      auto r = score_quiz({{it.item_id, choice}}, items);
      EXPECT_EQ(r.correct_count, 1u);
    }
    for (int choice = 0; choice < 5; ++choice) {
      if (it.correct.count(choice)) continue;
      EXPECT_EQ(score_quiz({{it.item_id, choice}}, items).correct_count, 0u);
    }
  }
}

TEST(Quiz, UnansweredCountsAsWrong) {
  auto items = key();
  auto a = perfect(items);
  a.resize(14);
  auto r = score_quiz(a, items);
  EXPECT_EQ(r.correct_count, 14u);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.70);
  EXPECT_FALSE(r.items.back().selected.has_value());
  EXPECT_FALSE(r.items.back().correct);
}

TEST(Quiz, AccuracyTimesTotalIsInteger) {
  auto items = key();
  for (std::size_t k = 0; k <= items.size(); ++k) {
    auto a = perfect(items);
    a.resize(k);
    auto r = score_quiz(a, items);
    double scaled = r.accuracy * static_cast<double>(r.total);
    EXPECT_EQ(scaled, std::round(scaled));
    EXPECT_EQ(static_cast<std::size_t>(std::round(scaled)), r.correct_count);
  }
}

TEST(Quiz, Errors) {
  auto items = key();
  EXPECT_EQ(code_of([&] { score_quiz({{"nope", 0}}, items); }), ErrorCode::UnknownItem);
  EXPECT_EQ(code_of([&] { score_quiz({{"q01", 7}}, items); }), ErrorCode::InvalidChoice);
  EXPECT_EQ(code_of([&] { score_quiz({{"q01", 0}, {"q01", 1}}, items); }), ErrorCode::DuplicateAnswer);
  EXPECT_EQ(code_of([] { parse_answers(R"({"q01": 1, "q01": 2})"); }), ErrorCode::DuplicateAnswer);
  EXPECT_EQ(code_of([] { parse_answers(R"({"q01": [1, 2]})"); }), ErrorCode::DuplicateAnswer);
  EXPECT_EQ(parse_answers(R"({"q02": [3], "q01": 1})"), (QuizAnswers{{"q02", 3}, {"q01", 1}}));
  EXPECT_EQ(code_of([] { parse_quiz(R"([{"item_id":"a","stem":"s","choices":["x"],"correct":[0]}])"); }),
            ErrorCode::MalformedRecord);
}
