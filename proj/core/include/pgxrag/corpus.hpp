#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgxrag {

enum class Source { CPIC, PharmGKB, Other };

std::string_view to_string(Source source) noexcept;
Source parse_source(std::string_view name);

using SourceSet = std::set<Source>;

// "CPIC,PharmGKB" -> {CPIC, PharmGKB}
SourceSet parse_source_list(std::string_view csv);
std::string to_string(const SourceSet& sources);

struct Document {
  std::string doc_id;
  Source source = Source::Other;
  std::string guideline_key;
  std::string title;
  std::string body;
  std::vector<std::string> drugs;  // lowercase, no duplicates
  std::vector<std::string> genes;  // uppercase, no duplicates

  bool operator==(const Document&) const = default;
};

struct CorpusLoad {
  std::vector<Document> documents;
  std::size_t excluded = 0;  // valid records whose source was not expected
};

// Reads a JSON Lines corpus file, or every *.jsonl file in a directory in
// lexical order. Any invalid record rejects the whole load.
CorpusLoad load_corpus(const std::filesystem::path& path, const SourceSet& expected_sources);

// Parses and validates every record of one stream. `origin` prefixes error
// messages ("file.jsonl:12: ...").
std::vector<Document> parse_corpus(std::istream& in, std::string_view origin);

std::string to_json_line(const Document& doc);
void write_corpus(std::ostream& out, std::span<const Document> docs);

inline constexpr std::size_t kDefaultMaxChunkTokens = 512;
inline constexpr std::size_t kMinChunkTokens = 32;

struct Chunk {
  std::string chunk_id;  // doc_id + "#" + ordinal
  std::string doc_id;
  std::size_t ordinal = 0;
  std::string text;
  std::size_t token_estimate = 0;

  bool operator==(const Chunk&) const = default;
};

struct ChunkedDocument {
  std::vector<Chunk> chunks;
  // Ordinals of chunks holding a single paragraph longer than the budget.
  std::vector<std::size_t> oversized;
};

// Paragraphs are maximal runs of non-blank lines, trimmed.
std::vector<std::string> split_paragraphs(std::string_view body);

// Paragraphs joined by single newlines. Joining a document's chunk texts with
// "\n" reproduces this string.
std::string normalize_body(std::string_view body);

// Greedy paragraph packing under a whitespace-token budget.
ChunkedDocument chunk_document(const Document& doc,
                               std::size_t max_chunk_tokens = kDefaultMaxChunkTokens);

}  // namespace pgxrag
