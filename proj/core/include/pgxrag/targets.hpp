#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/lexicon.hpp"

namespace pgxrag {

struct TargetEntities {
  std::vector<std::string> drugs;  // sorted, unique
  std::vector<std::string> genes;  // sorted, unique

  bool empty() const noexcept { return drugs.empty() && genes.empty(); }
  bool operator==(const TargetEntities&) const = default;
};

// Case-insensitive whole-word match of lexicon drug names and gene symbols
// against the query (multi-word names match as contiguous token runs). A
// matched drug also pulls in the genes of its guidelines; genes never pull in
// drugs.
TargetEntities extract_targets(std::string_view query_text, const GuidelineLexicon& lexicon);

}  // namespace pgxrag
