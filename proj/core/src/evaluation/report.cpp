#include "pgxrag/evaluation/report.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pgxrag/error.hpp"

namespace pgxrag {

using nlohmann::ordered_json;

namespace {

std::optional<double> metric_value(const AnnotationRecord& r, std::string_view metric) {
  if (metric == "accuracy") return r.accuracy;
  if (metric == "relevance") return r.relevance;
  if (metric == "completeness") return r.completeness;
  if (metric == "clarity") return r.clarity;
  std::optional<double> recall, precision;
  if (r.tp && r.fn && *r.tp + *r.fn > 0) recall = compute_recall(*r.tp, *r.fn);
  if (r.tp && r.fp && *r.tp + *r.fp > 0) precision = compute_precision(*r.tp, *r.fp);
  if (metric == "recall") return recall;
  if (metric == "precision") return precision;
  if (metric == "f1") {
    if (recall && precision && *recall + *precision > 0.0) return compute_f1(*precision, *recall);
    return std::nullopt;
  }
  fail(ErrorCode::InvalidArgument, "unknown metric '" + std::string(metric) + "'");
}

std::map<std::string, double> per_query(std::span<const AnnotationRecord> annotations,
                                        const std::string& group, std::string_view metric) {
  std::map<std::string, std::pair<double, int>> acc;
  bool any = false;
  for (const auto& r : annotations) {
    if (r.response_ref.group != group) continue;
    any = true;
    if (auto v = metric_value(r, metric)) {
      auto& slot = acc[r.response_ref.query_id];
      slot.first += *v;
      ++slot.second;
    }
  }
  if (!any) fail(ErrorCode::UnknownGroup, "no annotations for group '" + group + "'");
  std::map<std::string, double> out;
  for (const auto& [id, s] : acc) out[id] = s.first / s.second;
  return out;
}

ordered_json ratio_json(const RatioMean& m) {
  if (!m.defined()) return {{"mean", nullptr}, {"n", 0}, {"excluded", m.excluded}};
  return {{"mean", m.mean}, {"n", m.n}, {"excluded", m.excluded}};
}

std::string ratio_cell(const RatioMean& m) { return m.defined() ? format_mean(m.mean) : "n/a"; }

}  // namespace

PairedComparison run_paired_test(std::span<const AnnotationRecord> annotations, const WilcoxonSpec& spec,
                                 double alpha, MethodChoice method) {
  metric_value(AnnotationRecord{}, spec.metric);  // rejects unknown metric names early
  auto a = per_query(annotations, spec.a_group, spec.metric);
  auto b = per_query(annotations, spec.b_group, spec.metric);
  PairedComparison pc;
  pc.spec = spec;
  std::vector<std::pair<double, double>> pairs;
  for (const auto& [id, va] : a) {
    auto it = b.find(id);
    if (it == b.end()) continue;
    pc.query_ids.push_back(id);
    pairs.emplace_back(va, it->second);
  }
  if (pairs.empty())
    fail(ErrorCode::NoPairs, "groups '" + spec.a_group + "' and '" + spec.b_group + "' share no query");
  pc.result = wilcoxon_signed_rank(pairs, spec.alternative, method);
  pc.significant = pc.result.significant(alpha);
  return pc;
}

ComparisonReport build_comparison(const std::vector<std::string>& groups,
                                  std::span<const AnnotationRecord> annotations,
                                  const std::map<std::string, QuizResult>& quiz_results,
                                  const std::vector<WilcoxonSpec>& specs, double alpha) {
  ComparisonReport report;
  report.alpha = alpha;
  for (const auto& g : groups) {
    std::vector<AnnotationRecord> mine;
    for (const auto& r : annotations)
      if (r.response_ref.group == g) mine.push_back(r);
    if (mine.empty()) fail(ErrorCode::UnknownGroup, "no annotations for group '" + g + "'");
    report.groups.push_back(aggregate_group(mine, g));
  }
  for (const auto& spec : specs) report.tests.push_back(run_paired_test(annotations, spec, alpha));
  report.quiz = quiz_results;
  return report;
}

std::string to_json(const ComparisonReport& report, int indent) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : report.groups) {
    groups.push_back({{"group", g.group},
                      {"n", g.n},
                      {"accuracy", g.accuracy},
                      {"relevance", g.relevance},
                      {"completeness", g.completeness},
                      {"clarity", g.clarity},
                      {"recall", ratio_json(g.recall)},
                      {"precision", ratio_json(g.precision)},
                      {"f1", ratio_json(g.f1)},
                      {"rendered",
                       {{"accuracy", format_mean(g.accuracy)},
                        {"relevance", format_mean(g.relevance)},
                        {"completeness", format_mean(g.completeness)},
                        {"clarity", format_mean(g.clarity)},
                        {"recall", ratio_cell(g.recall)},
                        {"precision", ratio_cell(g.precision)},
                        {"f1", ratio_cell(g.f1)}}}});
  }
  ordered_json tests = ordered_json::array();
  for (const auto& t : report.tests) {
    tests.push_back({{"a_group", t.spec.a_group},
                     {"b_group", t.spec.b_group},
                     {"metric", t.spec.metric},
                     {"alternative", to_string(t.spec.alternative)},
                     {"n_input", t.result.n_input},
                     {"n_effective", t.result.n_effective},
                     {"w_statistic", t.result.w_statistic},
                     {"w_plus", t.result.w_plus},
                     {"w_minus", t.result.w_minus},
                     {"p_value", t.result.p_value},
                     {"method", to_string(t.result.method)},
                     {"significant", t.significant},
                     {"query_ids", t.query_ids}});
  }
  ordered_json quiz = ordered_json::object();
  for (const auto& [group, q] : report.quiz) {
    quiz[group] = {{"correct", q.correct_count}, {"total", q.total}, {"accuracy", q.accuracy}};
  }
  ordered_json j = {{"alpha", report.alpha}, {"groups", groups}, {"wilcoxon", tests}, {"quiz", quiz}};
  return j.dump(indent);
}

MethodChoice parse_method_choice(std::string_view text) {
  if (text == "auto") return MethodChoice::Auto;
  if (text == "exact") return MethodChoice::Exact;
  if (text == "normal") return MethodChoice::Normal;
  fail(ErrorCode::InvalidArgument, "method must be auto, exact or normal");
}

std::string render_table(const ComparisonReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %5s %9s %10s %13s %8s %7s %10s %6s\n", "Group", "N", "Accuracy",
                "Relevance", "Completeness", "Clarity", "Recall", "Precision", "F1");
  out << line;
  for (const auto& g : report.groups) {
    std::snprintf(line, sizeof line, "%-14s %5zu %9s %10s %13s %8s %7s %10s %6s\n", g.group.c_str(), g.n,
                  format_mean(g.accuracy).c_str(), format_mean(g.relevance).c_str(),
                  format_mean(g.completeness).c_str(), format_mean(g.clarity).c_str(),
                  ratio_cell(g.recall).c_str(), ratio_cell(g.precision).c_str(), ratio_cell(g.f1).c_str());
    out << line;
  }
  if (!report.tests.empty()) {
    out << "\nWilcoxon signed-rank (one-tailed, alpha " << format_mean(report.alpha) << ")\n";
    for (const auto& t : report.tests) {
      std::snprintf(line, sizeof line, "%s vs %s [%s, %s]: W = %.1f, n = %zu, p = %.4f, %s\n",
                    t.spec.a_group.c_str(), t.spec.b_group.c_str(), t.spec.metric.c_str(),
                    std::string(to_string(t.spec.alternative)).c_str(), t.result.w_statistic,
                    t.result.n_effective, t.result.p_value, t.significant ? "significant" : "not significant");
      out << line;
    }
  }
  if (!report.quiz.empty()) {
    out << "\nQuiz accuracy\n";
    for (const auto& [group, q] : report.quiz) {
      std::snprintf(line, sizeof line, "%-14s %zu/%zu (%.0f%%)\n", group.c_str(), q.correct_count, q.total,
                    q.accuracy * 100.0);
      out << line;
    }
  }
  return out.str();
}

}  // namespace pgxrag
