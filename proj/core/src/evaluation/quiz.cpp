#include "pgxrag/evaluation/quiz.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pgxrag/error.hpp"

namespace pgxrag {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, std::string(what) + " not found: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<QuizItem> parse_quiz(std::string_view json_text) {
  std::vector<QuizItem> items;
  try {
    auto j = json::parse(json_text);
    if (!j.is_array()) fail(ErrorCode::MalformedRecord, "quiz must be a JSON array");
    std::set<std::string> ids;
    for (const auto& e : j) {
      QuizItem item;
      item.item_id = e.at("item_id").get<std::string>();
      item.stem = e.value("stem", std::string{});
      item.choices = e.at("choices").get<std::vector<std::string>>();
      for (int c : e.at("correct").get<std::vector<int>>()) item.correct.insert(c);
      if (item.item_id.empty()) fail(ErrorCode::MalformedRecord, "empty item_id");
      if (!ids.insert(item.item_id).second) fail(ErrorCode::MalformedRecord, "duplicate item " + item.item_id);
      if (item.choices.size() != kChoicesPerItem)
        fail(ErrorCode::MalformedRecord, item.item_id + ": expected 5 choices, got " +
                                             std::to_string(item.choices.size()));
      if (item.correct.empty()) fail(ErrorCode::MalformedRecord, item.item_id + ": no correct choice");
      if (*item.correct.begin() < 0 || *item.correct.rbegin() >= static_cast<int>(kChoicesPerItem))
        fail(ErrorCode::MalformedRecord, item.item_id + ": correct index outside 0..4");
      items.push_back(std::move(item));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedRecord, std::string("bad quiz: ") + e.what());
  }
  return items;
}

std::vector<QuizItem> load_quiz(const std::filesystem::path& path) {
  return parse_quiz(read_file(path, "quiz"));
}

QuizAnswers parse_answers(std::string_view json_text) {
  // nlohmann keeps only the last of repeated keys, so repeats are caught
  // while parsing.
  std::set<std::string> keys;
  std::string duplicate;
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text, [&](int depth, nlohmann::ordered_json::parse_event_t event, nlohmann::ordered_json& parsed) {
      if (event == nlohmann::ordered_json::parse_event_t::key && depth == 1) {
        auto k = parsed.get<std::string>();
        if (!keys.insert(k).second && duplicate.empty()) duplicate = k;
      }
      return true;
    });
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedRecord, std::string("bad answers: ") + e.what());
  }
  if (!duplicate.empty()) fail(ErrorCode::DuplicateAnswer, "item " + duplicate + " answered more than once");
  if (!j.is_object()) fail(ErrorCode::MalformedRecord, "answers must be a JSON object");

  QuizAnswers out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_number_integer()) {
      out.emplace_back(it.key(), v.get<int>());
    } else if (v.is_array() && v.size() == 1 && v[0].is_number_integer()) {
      out.emplace_back(it.key(), v[0].get<int>());
    } else if (v.is_array() && v.size() > 1) {
      fail(ErrorCode::DuplicateAnswer, "item " + it.key() + " has several selected choices");
    } else {
      fail(ErrorCode::MalformedRecord, "item " + it.key() + ": answer must be a choice index");
    }
  }
  return out;
}

QuizAnswers load_answers(const std::filesystem::path& path) {
  return parse_answers(read_file(path, "answers"));
}

QuizResult score_quiz(const QuizAnswers& answers, std::span<const QuizItem> key) {
  std::map<std::string, const QuizItem*, std::less<>> by_id;
  for (const auto& item : key) by_id[item.item_id] = &item;

  std::map<std::string, int, std::less<>> selected;
  for (const auto& [id, choice] : answers) {
    if (!by_id.contains(id)) fail(ErrorCode::UnknownItem, "no quiz item '" + id + "'");
    if (choice < 0 || choice >= static_cast<int>(kChoicesPerItem))
      fail(ErrorCode::InvalidChoice, "item " + id + ": choice " + std::to_string(choice) + " outside 0..4");
    if (!selected.emplace(id, choice).second)
      fail(ErrorCode::DuplicateAnswer, "item " + id + " answered more than once");
  }

  QuizResult r;
  r.total = key.size();
  for (const auto& item : key) {
    ItemOutcome o;
    o.item_id = item.item_id;
    if (auto it = selected.find(item.item_id); it != selected.end()) {
      o.selected = it->second;
      o.correct = item.correct.contains(it->second);
    }
    if (o.correct) ++r.correct_count;
    r.items.push_back(std::move(o));
  }
  r.accuracy = r.total ? static_cast<double>(r.correct_count) / static_cast<double>(r.total) : 0.0;
  return r;
}

}  // namespace pgxrag
