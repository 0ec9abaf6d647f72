#include "pgxrag/targets.hpp"

#include <algorithm>
#include <set>

#include "pgxrag/text.hpp"

namespace pgxrag {
namespace {

bool contains_run(const std::vector<std::string>& haystack, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

TargetEntities extract_targets(std::string_view query_text, const GuidelineLexicon& lexicon) {
  auto tokens = text::alnum_tokens(query_text);
  std::set<std::string> drugs;
  std::set<std::string> genes;
  for (const auto& drug : lexicon.all_drugs()) {
    if (contains_run(tokens, text::alnum_tokens(drug))) {
      drugs.insert(drug);
      auto pulled = lexicon.genes_for_drug(drug);
      genes.insert(pulled.begin(), pulled.end());
    }
  }
  for (const auto& gene : lexicon.all_genes()) {
    if (contains_run(tokens, text::alnum_tokens(gene))) genes.insert(gene);
  }
  return {{drugs.begin(), drugs.end()}, {genes.begin(), genes.end()}};
}

}  // namespace pgxrag
