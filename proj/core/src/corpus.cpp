#include "pgxrag/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(std::string_view origin, std::size_t line, const std::string& why) {
  fail(ErrorCode::MalformedRecord,
       std::string(origin) + ":" + std::to_string(line) + ": " + why);
}

std::string require_string(const json& obj, const char* key, std::string_view origin,
                           std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    malformed(origin, line, std::string("missing or non-string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::vector<std::string> require_names(const json& obj, const char* key, bool upper,
                                       std::string_view origin, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    malformed(origin, line, std::string("missing or non-array field '") + key + "'");
  }
  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  for (const auto& v : *it) {
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
      malformed(origin, line, std::string("'") + key + "' must hold nonempty strings");
    }
    auto name = v.get<std::string>();
    auto canonical = upper ? text::to_upper(name) : text::to_lower(name);
    if (name != canonical) {
      malformed(origin, line,
                std::string("'") + key + "' entry '" + name + "' must be " +
                    (upper ? "uppercase" : "lowercase"));
    }
    if (!seen.insert(name).second) {
      malformed(origin, line, std::string("duplicate entry '") + name + "' in '" + key + "'");
    }
    names.push_back(std::move(name));
  }
  return names;
}

Document parse_document(std::string_view raw, std::string_view origin, std::size_t line) {
  json obj;
  try {
    obj = json::parse(raw);
  } catch (const json::parse_error& e) {
    malformed(origin, line, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) malformed(origin, line, "record is not a JSON object");

  Document doc;
  doc.doc_id = require_string(obj, "doc_id", origin, line);
  if (text::trim(doc.doc_id).empty()) malformed(origin, line, "empty doc_id");
  try {
    doc.source = parse_source(require_string(obj, "source", origin, line));
  } catch (const Error& e) {
    malformed(origin, line, e.what());
  }
  doc.guideline_key = require_string(obj, "guideline_key", origin, line);
  doc.title = require_string(obj, "title", origin, line);
  doc.body = require_string(obj, "body", origin, line);
  doc.drugs = require_names(obj, "drugs", false, origin, line);
  doc.genes = require_names(obj, "genes", true, origin, line);
  return doc;
}

void flush_paragraph(std::vector<std::string>& out, std::string_view body, std::size_t begin,
                     std::size_t end) {
  auto p = text::trim(body.substr(begin, end - begin));
  if (!p.empty()) out.emplace_back(p);
}

}  // namespace

std::string_view to_string(Source source) noexcept {
  switch (source) {
    case Source::CPIC: return "CPIC";
    case Source::PharmGKB: return "PharmGKB";
    case Source::Other: return "Other";
  }
  return "Other";
}

Source parse_source(std::string_view name) {
  if (name == "CPIC") return Source::CPIC;
  if (name == "PharmGKB") return Source::PharmGKB;
  if (name == "Other") return Source::Other;
  fail(ErrorCode::InvalidArgument, "unknown source '" + std::string(name) + "'");
}

SourceSet parse_source_list(std::string_view csv) {
  SourceSet out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    auto piece = text::trim(csv.substr(start, comma == std::string_view::npos ? csv.npos
                                                                              : comma - start));
    if (!piece.empty()) out.insert(parse_source(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) fail(ErrorCode::InvalidArgument, "empty source list");
  return out;
}

std::string to_string(const SourceSet& sources) {
  std::string out;
  for (auto s : sources) {
    if (!out.empty()) out += ',';
    out += to_string(s);
  }
  return out;
}

std::vector<Document> parse_corpus(std::istream& in, std::string_view origin) {
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    docs.push_back(parse_document(line, origin, line_no));
  }
  return docs;
}

CorpusLoad load_corpus(const std::filesystem::path& path, const SourceSet& expected_sources) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path, ec)) {
    files.push_back(path);
  } else {
    fail(ErrorCode::MissingFile, "corpus not found: " + path.string());
  }

  CorpusLoad result;
  std::unordered_set<std::string> ids;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) fail(ErrorCode::MissingFile, "cannot open corpus file: " + file.string());
    for (auto& doc : parse_corpus(in, file.string())) {
      if (!ids.insert(doc.doc_id).second) {
        fail(ErrorCode::DuplicateDocId, "duplicate doc_id '" + doc.doc_id + "'");
      }
      if (expected_sources.contains(doc.source)) {
        result.documents.push_back(std::move(doc));
      } else {
        ++result.excluded;
      }
    }
  }
  return result;
}

std::string to_json_line(const Document& doc) {
  json obj = {
      {"doc_id", doc.doc_id},
      {"source", std::string(to_string(doc.source))},
      {"guideline_key", doc.guideline_key},
      {"title", doc.title},
      {"body", doc.body},
      {"drugs", doc.drugs},
      {"genes", doc.genes},
  };
  return obj.dump();
}

void write_corpus(std::ostream& out, std::span<const Document> docs) {
  for (const auto& d : docs) out << to_json_line(d) << '\n';
}

std::vector<std::string> split_paragraphs(std::string_view body) {
  std::vector<std::string> paragraphs;
  std::size_t para_begin = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto nl = body.find('\n', pos);
    auto line_end = nl == std::string_view::npos ? body.size() : nl;
    if (text::trim(body.substr(pos, line_end - pos)).empty()) {
      flush_paragraph(paragraphs, body, para_begin, pos);
      para_begin = line_end + 1;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (para_begin < body.size()) flush_paragraph(paragraphs, body, para_begin, body.size());
  return paragraphs;
}

std::string normalize_body(std::string_view body) { return text::join(split_paragraphs(body), "\n"); }

ChunkedDocument chunk_document(const Document& doc, std::size_t max_chunk_tokens) {
  if (max_chunk_tokens < kMinChunkTokens) {
    fail(ErrorCode::InvalidArgument,
         "max_chunk_tokens must be >= " + std::to_string(kMinChunkTokens));
  }
  auto paragraphs = split_paragraphs(doc.body);
  if (paragraphs.empty()) fail(ErrorCode::EmptyDocument, "document '" + doc.doc_id + "' is empty");

  ChunkedDocument out;
  std::vector<std::string> pending;
  std::size_t pending_tokens = 0;

  auto emit = [&](std::vector<std::string> parts, std::size_t tokens, bool oversized) {
    Chunk c;
    c.ordinal = out.chunks.size();
    c.doc_id = doc.doc_id;
    c.chunk_id = doc.doc_id + "#" + std::to_string(c.ordinal);
    c.text = text::join(parts, "\n");
    c.token_estimate = tokens;
    if (oversized) out.oversized.push_back(c.ordinal);
    out.chunks.push_back(std::move(c));
  };

  for (auto& p : paragraphs) {
    auto tokens = text::whitespace_token_count(p);
    if (tokens > max_chunk_tokens) {
      if (!pending.empty()) emit(std::exchange(pending, {}), std::exchange(pending_tokens, 0), false);
      emit({std::move(p)}, tokens, true);
      continue;
    }
    if (!pending.empty() && pending_tokens + tokens > max_chunk_tokens) {
      emit(std::exchange(pending, {}), std::exchange(pending_tokens, 0), false);
    }
    pending.push_back(std::move(p));
    pending_tokens += tokens;
  }
  if (!pending.empty()) emit(std::move(pending), pending_tokens, false);
  return out;
}

}  // namespace pgxrag
