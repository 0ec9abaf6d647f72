#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pgxrag::text {

std::string_view trim(std::string_view s) noexcept;
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

// Maximal runs of ASCII [A-Za-z0-9], lowercased. Everything else separates.
std::vector<std::string> alnum_tokens(std::string_view s);

std::size_t whitespace_token_count(std::string_view s) noexcept;

// Sentences end at '.', '!' or '?' followed by whitespace or end of text, and
// at every line break. Returned sentences are trimmed and nonempty.
std::vector<std::string> split_sentences(std::string_view s);

bool is_stopword(std::string_view lowercase_word) noexcept;

// alnum_tokens minus stopwords.
std::vector<std::string> content_words(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace pgxrag::text
