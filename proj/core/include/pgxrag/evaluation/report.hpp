#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgxrag/evaluation/annotation.hpp"
#include "pgxrag/evaluation/metrics.hpp"
#include "pgxrag/evaluation/quiz.hpp"
#include "pgxrag/evaluation/wilcoxon.hpp"

namespace pgxrag {

inline constexpr double kDefaultAlpha = 0.05;

struct WilcoxonSpec {
  std::string a_group;
  std::string b_group;
  std::string metric = "accuracy";  // accuracy|relevance|completeness|clarity|recall|precision|f1
  Alternative alternative = Alternative::Greater;
};

struct PairedComparison {
  WilcoxonSpec spec;
  std::vector<std::string> query_ids;  // sorted, present in both groups
  WilcoxonResult result;
  bool significant = false;
};

struct ComparisonReport {
  std::vector<GroupAggregate> groups;
  std::vector<PairedComparison> tests;
  std::map<std::string, QuizResult> quiz;
  double alpha = kDefaultAlpha;
};

// Per-query (a, b) values of `metric`, paired by query_id. Multiple
// annotators of one response are averaged; records with an undefined ratio
// are skipped. Throws UnknownGroup for a group with no records and NoPairs
// when the groups share no query.
PairedComparison run_paired_test(std::span<const AnnotationRecord> annotations, const WilcoxonSpec& spec,
                                 double alpha = kDefaultAlpha, MethodChoice method = MethodChoice::Auto);

// Throws UnknownGroup naming the first requested group without annotations.
ComparisonReport build_comparison(const std::vector<std::string>& groups,
                                  std::span<const AnnotationRecord> annotations,
                                  const std::map<std::string, QuizResult>& quiz_results,
                                  const std::vector<WilcoxonSpec>& specs, double alpha = kDefaultAlpha);

std::string to_json(const ComparisonReport& report, int indent = 2);
MethodChoice parse_method_choice(std::string_view text);  // auto|exact|normal

std::string render_table(const ComparisonReport& report);

}  // namespace pgxrag
