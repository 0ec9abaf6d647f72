#include "pgxrag/knowledge_base.hpp"

#include <fstream>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/hashing.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {
namespace {

using nlohmann::json;

json to_json(const KnowledgeChunk& k) {
  return {
      {"chunk_id", k.chunk.chunk_id},
      {"doc_id", k.chunk.doc_id},
      {"ordinal", k.chunk.ordinal},
      {"text", k.chunk.text},
      {"token_estimate", k.chunk.token_estimate},
      {"source", std::string(to_string(k.source))},
      {"guideline_key", k.guideline_key},
      {"title", k.title},
  };
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::vector<KnowledgeChunk> chunks) : chunks_(std::move(chunks)) {
  for (std::size_t i = 0; i < chunks_.size(); ++i) {
    if (!by_id_.emplace(chunks_[i].chunk.chunk_id, i).second) {
      fail(ErrorCode::DuplicateChunkId, "duplicate chunk_id '" + chunks_[i].chunk.chunk_id + "'");
    }
  }
}

KnowledgeBase KnowledgeBase::from_documents(std::span<const Document> docs,
                                            std::size_t max_chunk_tokens) {
  std::vector<KnowledgeChunk> out;
  for (const auto& doc : docs) {
    for (auto& c : chunk_document(doc, max_chunk_tokens).chunks) {
      out.push_back({std::move(c), doc.source, doc.guideline_key, doc.title});
    }
  }
  return KnowledgeBase(std::move(out));
}

KnowledgeBase KnowledgeBase::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, "chunk store not found: " + path.string());
  std::vector<KnowledgeChunk> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      auto j = json::parse(line);
      KnowledgeChunk k;
      k.chunk.chunk_id = j.at("chunk_id").get<std::string>();
      k.chunk.doc_id = j.at("doc_id").get<std::string>();
      k.chunk.ordinal = j.at("ordinal").get<std::size_t>();
      k.chunk.text = j.at("text").get<std::string>();
      k.chunk.token_estimate = j.at("token_estimate").get<std::size_t>();
      k.source = parse_source(j.at("source").get<std::string>());
      k.guideline_key = j.at("guideline_key").get<std::string>();
      k.title = j.at("title").get<std::string>();
      out.push_back(std::move(k));
    } catch (const json::exception& e) {
      fail(ErrorCode::MalformedRecord,
           path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return KnowledgeBase(std::move(out));
}

void KnowledgeBase::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot write chunk store: " + path.string());
  for (const auto& k : chunks_) out << to_json(k).dump() << '\n';
  if (!out.flush()) fail(ErrorCode::IoFailure, "failed writing chunk store: " + path.string());
}

std::vector<Chunk> KnowledgeBase::plain_chunks() const {
  std::vector<Chunk> out;
  out.reserve(chunks_.size());
  for (const auto& k : chunks_) out.push_back(k.chunk);
  return out;
}

const KnowledgeChunk* KnowledgeBase::find(std::string_view chunk_id) const {
  auto it = by_id_.find(chunk_id);
  return it == by_id_.end() ? nullptr : &chunks_[it->second];
}

const KnowledgeChunk& KnowledgeBase::at(std::string_view chunk_id) const {
  const auto* k = find(chunk_id);
  if (!k) fail(ErrorCode::NotFound, "unknown chunk_id '" + std::string(chunk_id) + "'");
  return *k;
}

SourceSet KnowledgeBase::sources() const {
  SourceSet out;
  for (const auto& k : chunks_) out.insert(k.source);
  return out;
}

std::string KnowledgeBase::digest() const {
  std::string all;
  for (const auto& k : chunks_) {
    all += to_json(k).dump();
    all += '\n';
  }
  return sha256_hex(all);
}

std::filesystem::path chunk_store_path(const std::filesystem::path& index_path) {
  auto p = index_path;
  p += ".chunks.jsonl";
  return p;
}

}  // namespace pgxrag
