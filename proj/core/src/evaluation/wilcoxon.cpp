#include "pgxrag/evaluation/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "pgxrag/error.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

std::string_view to_string(Alternative alt) noexcept {
  return alt == Alternative::Greater ? "greater" : "less";
}

std::string_view to_string(WilcoxonMethod method) noexcept {
  return method == WilcoxonMethod::ExactEnumeration ? "exact" : "normal";
}

Alternative parse_alternative(std::string_view text) {
  auto t = text::to_lower(text::trim(text));
  if (t == "greater") return Alternative::Greater;
  if (t == "less") return Alternative::Less;
  fail(ErrorCode::InvalidArgument, "alternative must be 'greater' or 'less', got '" + std::string(text) + "'");
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

namespace {

// P(T <= observed) where T sums a random subset of the ranks. Ranks are
// multiples of 0.5, so the DP runs over doubled integer ranks.
double exact_lower_tail(const std::vector<double>& ranks, double observed) {
  std::vector<std::int64_t> doubled;
  doubled.reserve(ranks.size());
  std::int64_t total = 0;
  for (double r : ranks) {
    doubled.push_back(std::llround(r * 2.0));
    total += doubled.back();
  }
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  std::int64_t reach = 0;
  for (auto r : doubled) {
    for (std::int64_t s = reach; s >= 0; --s) {
      if (ways[static_cast<std::size_t>(s)]) ways[static_cast<std::size_t>(s + r)] += ways[static_cast<std::size_t>(s)];
    }
    reach += r;
  }
  std::int64_t limit = std::llround(observed * 2.0);
  std::uint64_t hits = 0;
  for (std::int64_t s = 0; s <= std::min(limit, total); ++s) hits += ways[static_cast<std::size_t>(s)];
  return std::ldexp(static_cast<double>(hits), -static_cast<int>(ranks.size()));
}

double normal_lower_tail(const std::vector<double>& abs_d, double observed) {
  auto n = static_cast<double>(abs_d.size());
  double mean = n * (n + 1.0) / 4.0;
  double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  std::vector<double> sorted(abs_d);
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    auto t = static_cast<double>(j - i + 1);
    var -= (t * t * t - t) / 48.0;
    i = j + 1;
  }
  double z = (observed + 0.5 - mean) / std::sqrt(var);
  double p = 0.5 * std::erfc(-z / std::sqrt(2.0));
  return std::clamp(p, std::nextafter(0.0, 1.0), 1.0);
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> pairs,
                                    Alternative alternative, MethodChoice method) {
  if (pairs.empty()) fail(ErrorCode::NoPairs, "wilcoxon test needs at least one pair");
  std::vector<double> d;
  for (const auto& [a, b] : pairs) {
    if (!std::isfinite(a) || !std::isfinite(b)) fail(ErrorCode::InvalidArgument, "non-finite score");
    if (b - a != 0.0) d.push_back(b - a);
  }
  if (d.empty()) fail(ErrorCode::AllZeroDifferences, "all " + std::to_string(pairs.size()) + " differences are zero");

  std::vector<double> abs_d(d.size());
  std::transform(d.begin(), d.end(), abs_d.begin(), [](double x) { return std::fabs(x); });
  auto ranks = average_ranks(abs_d);

  WilcoxonResult r;
  r.n_input = pairs.size();
  r.n_effective = d.size();
  r.alternative = alternative;
  for (std::size_t i = 0; i < d.size(); ++i) (d[i] > 0 ? r.w_plus : r.w_minus) += ranks[i];
  r.w_statistic = alternative == Alternative::Greater ? r.w_minus : r.w_plus;

  bool exact = method == MethodChoice::Exact ||
               (method == MethodChoice::Auto && r.n_effective <= kExactMaxEffective);
  if (method == MethodChoice::Exact && r.n_effective > kExactMaxEffective)
    fail(ErrorCode::InvalidArgument, "exact enumeration is limited to " +
                                         std::to_string(kExactMaxEffective) + " nonzero differences");
  if (exact) {
    r.method = WilcoxonMethod::ExactEnumeration;
    r.p_value = exact_lower_tail(ranks, r.w_statistic);
  } else {
    r.method = WilcoxonMethod::NormalApproximation;
    r.p_value = normal_lower_tail(abs_d, r.w_statistic);
  }
  return r;
}

}  // namespace pgxrag
