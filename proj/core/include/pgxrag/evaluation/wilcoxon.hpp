#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace pgxrag {

// Direction of the one-tailed test on d = b - a. Greater: b tends to exceed a.
enum class Alternative { Greater, Less };

enum class WilcoxonMethod { ExactEnumeration, NormalApproximation };

// Auto picks exact enumeration up to kExactMaxEffective nonzero differences.
enum class MethodChoice { Auto, Exact, Normal };

inline constexpr std::size_t kExactMaxEffective = 20;

std::string_view to_string(Alternative alt) noexcept;
std::string_view to_string(WilcoxonMethod method) noexcept;
Alternative parse_alternative(std::string_view text);

struct WilcoxonResult {
  double w_statistic = 0.0;  // W- for Greater, W+ for Less
  double w_plus = 0.0;
  double w_minus = 0.0;
  std::size_t n_input = 0;
  std::size_t n_effective = 0;
  double p_value = 1.0;
  WilcoxonMethod method = WilcoxonMethod::ExactEnumeration;
  Alternative alternative = Alternative::Greater;

  bool significant(double alpha = 0.05) const noexcept { return p_value < alpha; }
};

// 1-based ranks of `values` in ascending order; tied values share the mean
// of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Signed-rank test on pairs (a, b). Zero differences are dropped before
// ranking. p is P(T <= observed) for the tail statistic T under the null.
// Throws NoPairs for empty input and AllZeroDifferences when every pair ties.
// MethodChoice::Exact above kExactMaxEffective raises InvalidArgument.
WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> pairs,
                                    Alternative alternative, MethodChoice method = MethodChoice::Auto);

}  // namespace pgxrag
