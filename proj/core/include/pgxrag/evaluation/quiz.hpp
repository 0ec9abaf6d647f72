#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgxrag {

inline constexpr std::size_t kChoicesPerItem = 5;

struct QuizItem {
  std::string item_id;
  std::string stem;
  std::vector<std::string> choices;  // exactly kChoicesPerItem
  std::set<int> correct;             // nonempty subset of 0..4

  bool operator==(const QuizItem&) const = default;
};

// JSON array of items. Shape violations raise MalformedRecord.
std::vector<QuizItem> parse_quiz(std::string_view json_text);
std::vector<QuizItem> load_quiz(const std::filesystem::path& path);

// item_id -> selected choice, in file order.
using QuizAnswers = std::vector<std::pair<std::string, int>>;

// JSON object mapping item_id to a choice index (or a one-element array).
// A repeated item_id or several selections for one item raise DuplicateAnswer.
QuizAnswers parse_answers(std::string_view json_text);
QuizAnswers load_answers(const std::filesystem::path& path);

struct ItemOutcome {
  std::string item_id;
  std::optional<int> selected;
  bool correct = false;
};

struct QuizResult {
  std::size_t correct_count = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
  std::vector<ItemOutcome> items;  // key order
};

// Unanswered items count as incorrect. Throws UnknownItem, DuplicateAnswer
// and InvalidChoice (index outside 0..4).
QuizResult score_quiz(const QuizAnswers& answers, std::span<const QuizItem> key);

}  // namespace pgxrag
