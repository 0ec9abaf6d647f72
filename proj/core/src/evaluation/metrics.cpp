#include "pgxrag/evaluation/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "pgxrag/error.hpp"

namespace pgxrag {
namespace {

void check_counts(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) fail(ErrorCode::InvalidArgument, "counts must be non-negative");
}

}  // namespace

double compute_recall(std::int64_t tp, std::int64_t fn) {
  check_counts(tp, fn);
  if (tp + fn == 0) fail(ErrorCode::UndefinedMetric, "recall undefined: tp + fn == 0");
  return static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double compute_precision(std::int64_t tp, std::int64_t fp) {
  check_counts(tp, fp);
  if (tp + fp == 0) fail(ErrorCode::UndefinedMetric, "precision undefined: tp + fp == 0");
  return static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double compute_f1(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0 && recall >= 0.0 && recall <= 1.0))
    fail(ErrorCode::InvalidArgument, "precision and recall must lie in [0, 1]");
  if (precision + recall == 0.0) fail(ErrorCode::UndefinedMetric, "f1 undefined: precision + recall == 0");
  return 2.0 * (precision * recall) / (precision + recall);
}

namespace {

RatioMean mean_of(std::vector<double> values, std::size_t excluded) {
  RatioMean m;
  m.excluded = excluded;
  m.n = values.size();
  if (values.empty()) return m;
  // Summing in sorted order makes the mean independent of input order.
  std::sort(values.begin(), values.end());
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  return m;
}

}  // namespace

GroupAggregate aggregate_group(std::span<const AnnotationRecord> records, std::string_view group) {
  if (records.empty()) fail(ErrorCode::EmptyGroup, "group '" + std::string(group) + "' has no annotations");
  GroupAggregate g;
  g.group = std::string(group);
  g.n = records.size();
  std::int64_t acc = 0, rel = 0, comp = 0, clar = 0;
  std::vector<double> recalls, precisions, f1s;
  std::size_t recall_excluded = 0, precision_excluded = 0, f1_excluded = 0;
  for (const auto& r : records) {
    if (r.response_ref.group != group)
      fail(ErrorCode::GroupMismatch, "record for " + r.response_ref.query_id + " is tagged '" +
                                         r.response_ref.group + "', expected '" + std::string(group) + "'");
    acc += r.accuracy;
    rel += r.relevance;
    comp += r.completeness;
    clar += r.clarity;

    std::optional<double> recall, precision;
    if (r.tp && r.fn) {
      if (*r.tp + *r.fn > 0) {
        recall = compute_recall(*r.tp, *r.fn);
        recalls.push_back(*recall);
      } else {
        ++recall_excluded;
      }
    }
    if (r.tp && r.fp) {
      if (*r.tp + *r.fp > 0) {
        precision = compute_precision(*r.tp, *r.fp);
        precisions.push_back(*precision);
      } else {
        ++precision_excluded;
      }
    }
    if (r.tp && r.fp && r.fn) {
      if (recall && precision && *recall + *precision > 0.0) {
        f1s.push_back(compute_f1(*precision, *recall));
      } else {
        ++f1_excluded;
      }
    }
  }
  auto n = static_cast<double>(records.size());
  g.accuracy = static_cast<double>(acc) / n;
  g.relevance = static_cast<double>(rel) / n;
  g.completeness = static_cast<double>(comp) / n;
  g.clarity = static_cast<double>(clar) / n;
  g.recall = mean_of(std::move(recalls), recall_excluded);
  g.precision = mean_of(std::move(precisions), precision_excluded);
  g.f1 = mean_of(std::move(f1s), f1_excluded);
  return g;
}

std::string format_mean(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace pgxrag
