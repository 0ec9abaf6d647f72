#include "pgxrag/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace pgxrag::text {
namespace {

bool is_space(char c) noexcept { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_alnum(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Sorted; looked up with binary_search.
constexpr std::array<std::string_view, 64> kStopwords = {
    "a",     "about", "after", "all",   "also",  "an",    "and",   "any",   "are",   "as",
    "at",    "based", "be",    "been",  "before", "by",   "can",   "could", "do",    "does",
    "for",   "from",  "has",   "have",  "how",   "i",     "if",    "in",    "into",  "is",
    "it",    "its",   "may",   "me",    "my",    "no",    "not",   "of",    "on",    "or",
    "our",   "should", "so",   "such",  "than",  "that",  "the",   "their", "there", "these",
    "they",  "this",  "to",    "was",   "we",    "were",  "what",  "when",  "which", "who",
    "will",  "with",  "would", "you",
};
static_assert(std::is_sorted(kStopwords.begin(), kStopwords.end()));

}  // namespace

std::string_view trim(std::string_view s) noexcept {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::vector<std::string> alnum_tokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && !is_alnum(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && is_alnum(s[i])) ++i;
    if (i > start) tokens.push_back(to_lower(s.substr(start, i - start)));
  }
  return tokens;
}

std::size_t whitespace_token_count(std::string_view s) noexcept {
  std::size_t count = 0;
  bool in_token = false;
  for (char c : s) {
    if (is_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::string> split_sentences(std::string_view s) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    auto piece = trim(s.substr(b, e - b));
    if (!piece.empty()) out.emplace_back(piece);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\n') {
      emit(start, i);
      start = i + 1;
    } else if ((c == '.' || c == '!' || c == '?') && (i + 1 == s.size() || is_space(s[i + 1]))) {
      emit(start, i + 1);
      start = i + 1;
    }
  }
  if (start < s.size()) emit(start, s.size());
  return out;
}

bool is_stopword(std::string_view w) noexcept {
  return std::binary_search(kStopwords.begin(), kStopwords.end(), w);
}

std::vector<std::string> content_words(std::string_view s) {
  auto tokens = alnum_tokens(s);
  std::erase_if(tokens, [](const std::string& t) { return is_stopword(t); });
  return tokens;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace pgxrag::text
