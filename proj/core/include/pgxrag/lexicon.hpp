#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pgxrag {

struct LexiconEntry {
  std::string guideline_key;
  std::string title;
  std::vector<std::string> genes;  // uppercase symbols
  std::vector<std::string> drugs;  // lowercase names, possibly multi-word
};

// Guideline -> genes/drugs table used for targeted retrieval and dataset
// validation. The shipped lexicon has one entry per benchmark guideline.
class GuidelineLexicon {
 public:
  static constexpr std::size_t kGuidelineCount = 26;

  // Validates unique keys and name casing; does not require kGuidelineCount.
  explicit GuidelineLexicon(std::vector<LexiconEntry> entries);

  // Strict: the file must hold exactly kGuidelineCount entries.
  static GuidelineLexicon load(const std::filesystem::path& path);
  static GuidelineLexicon parse(std::string_view json_text, bool require_complete = true);

  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  const LexiconEntry* find(std::string_view guideline_key) const;
  bool contains_guideline(std::string_view key) const { return find(key) != nullptr; }
  bool contains_drug(std::string_view drug) const;
  bool contains_gene(std::string_view gene) const;

  // Union of genes over every guideline listing the drug.
  std::set<std::string> genes_for_drug(std::string_view drug) const;

  const std::set<std::string>& all_drugs() const noexcept { return drugs_; }
  const std::set<std::string>& all_genes() const noexcept { return genes_; }

 private:
  std::vector<LexiconEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_key_;
  std::map<std::string, std::set<std::string>, std::less<>> drug_genes_;
  std::set<std::string> drugs_;
  std::set<std::string> genes_;
};

}  // namespace pgxrag
