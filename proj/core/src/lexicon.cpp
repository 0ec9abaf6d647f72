#include "pgxrag/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

GuidelineLexicon::GuidelineLexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.guideline_key.empty()) fail(ErrorCode::MalformedRecord, "lexicon entry without key");
    if (!by_key_.emplace(e.guideline_key, i).second) {
      fail(ErrorCode::MalformedRecord, "duplicate lexicon key '" + e.guideline_key + "'");
    }
    for (const auto& g : e.genes) {
      if (g.empty() || g != text::to_upper(g)) {
        fail(ErrorCode::MalformedRecord, "gene symbol must be uppercase: '" + g + "'");
      }
      genes_.insert(g);
    }
    for (const auto& d : e.drugs) {
      if (d.empty() || d != text::to_lower(d)) {
        fail(ErrorCode::MalformedRecord, "drug name must be lowercase: '" + d + "'");
      }
      drugs_.insert(d);
      drug_genes_[d].insert(e.genes.begin(), e.genes.end());
    }
  }
}

GuidelineLexicon GuidelineLexicon::parse(std::string_view json_text, bool require_complete) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::MalformedRecord, std::string("lexicon: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) fail(ErrorCode::MalformedRecord, "lexicon: expected a JSON array");
  std::vector<LexiconEntry> entries;
  for (const auto& row : doc) {
    try {
      LexiconEntry e;
      e.guideline_key = row.at("guideline_key").get<std::string>();
      e.title = row.value("title", e.guideline_key);
      e.genes = row.at("genes").get<std::vector<std::string>>();
      e.drugs = row.at("drugs").get<std::vector<std::string>>();
      entries.push_back(std::move(e));
    } catch (const json::exception& e) {
      fail(ErrorCode::MalformedRecord, std::string("lexicon entry: ") + e.what());
    }
  }
  if (require_complete && entries.size() != kGuidelineCount) {
    fail(ErrorCode::MalformedRecord, "lexicon must hold " + std::to_string(kGuidelineCount) +
                                         " guidelines, found " + std::to_string(entries.size()));
  }
  return GuidelineLexicon(std::move(entries));
}

GuidelineLexicon GuidelineLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, "lexicon not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), true);
}

const LexiconEntry* GuidelineLexicon::find(std::string_view guideline_key) const {
  auto it = by_key_.find(guideline_key);
  return it == by_key_.end() ? nullptr : &entries_[it->second];
}

bool GuidelineLexicon::contains_drug(std::string_view drug) const {
  return drugs_.contains(std::string(drug));
}

bool GuidelineLexicon::contains_gene(std::string_view gene) const {
  return genes_.contains(std::string(gene));
}

std::set<std::string> GuidelineLexicon::genes_for_drug(std::string_view drug) const {
  auto it = drug_genes_.find(drug);
  return it == drug_genes_.end() ? std::set<std::string>{} : it->second;
}

}  // namespace pgxrag
