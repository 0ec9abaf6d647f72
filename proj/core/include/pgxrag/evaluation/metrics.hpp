#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "pgxrag/evaluation/annotation.hpp"

namespace pgxrag {

// tp / (tp + fn). UndefinedMetric when tp + fn == 0; InvalidArgument for
// negative counts.
double compute_recall(std::int64_t tp, std::int64_t fn);

// tp / (tp + fp). UndefinedMetric when tp + fp == 0.
double compute_precision(std::int64_t tp, std::int64_t fp);

// Harmonic mean. UndefinedMetric when precision + recall == 0.
double compute_f1(double precision, double recall);

struct RatioMean {
  double mean = 0.0;
  std::size_t n = 0;         // records contributing
  std::size_t excluded = 0;  // records with counts but an undefined ratio

  bool defined() const noexcept { return n > 0; }
};

struct GroupAggregate {
  std::string group;
  std::size_t n = 0;
  double accuracy = 0.0;
  double relevance = 0.0;
  double completeness = 0.0;
  double clarity = 0.0;
  RatioMean recall;
  RatioMean precision;  // only records carrying fp
  RatioMean f1;         // only records where both ratios are defined
};

// Arithmetic means over one group. Throws EmptyGroup for no records and
// GroupMismatch when a record carries another group tag. The result does not
// depend on record order.
GroupAggregate aggregate_group(std::span<const AnnotationRecord> records, std::string_view group);

// Two-decimal rendering used by reports ("4.90").
std::string format_mean(double value);

}  // namespace pgxrag
