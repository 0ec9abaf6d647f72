#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "oracles.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/wilcoxon.hpp"
#include "test_support.hpp"

using namespace pgxrag;
using Pairs = std::vector<std::pair<double, double>>;

namespace {

Pairs from_diffs(const std::vector<double>& d) {
  Pairs p;
  for (double x : d) p.emplace_back(0.0, x);
  return p;
}

Pairs fixture_pairs(const std::string& name, nlohmann::json* expected = nullptr) {
  auto j = nlohmann::json::parse(pgxrag::testing::read_file(pgxrag::testing::data("fixtures/" + name)));
  Pairs p;
  for (const auto& pr : j["pairs"]) p.emplace_back(pr[0].get<double>(), pr[1].get<double>());
  if (expected) *expected = j["expected"];
  return p;
}

}  // namespace

TEST(Wilcoxon, ThreePositiveDifferences) {
  auto r = wilcoxon_signed_rank(from_diffs({1, 2, 3}), Alternative::Greater);
  EXPECT_EQ(r.w_statistic, 0.0);
  EXPECT_EQ(r.w_plus, 6.0);
  EXPECT_EQ(r.p_value, 0.125);
  EXPECT_EQ(r.method, WilcoxonMethod::ExactEnumeration);
  EXPECT_EQ(r.n_effective, 3u);
}

TEST(Wilcoxon, SixPositiveDifferences) {
  auto r = wilcoxon_signed_rank(from_diffs({1, 2, 3, 4, 5, 6}), Alternative::Greater);
  EXPECT_EQ(r.w_statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0 / 64);
}

TEST(Wilcoxon, LessUsesPositiveTail) {
  auto r = wilcoxon_signed_rank(from_diffs({1, 2, 3}), Alternative::Less);
  EXPECT_EQ(r.w_statistic, 6.0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(Wilcoxon, ZerosDroppedAndErrors) {
  auto r = wilcoxon_signed_rank(from_diffs({0, 0, 1, 2, 3}), Alternative::Greater);
  EXPECT_EQ(r.n_input, 5u);
  EXPECT_EQ(r.n_effective, 3u);
  EXPECT_EQ(r.p_value, 0.125);
  try {
    wilcoxon_signed_rank(from_diffs({0, 0}), Alternative::Greater);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllZeroDifferences);
  }
  try {
    wilcoxon_signed_rank(Pairs{}, Alternative::Greater);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPairs);
  }
  std::vector<double> d(25, 1.0);
  EXPECT_THROW(wilcoxon_signed_rank(from_diffs(d), Alternative::Greater, MethodChoice::Exact), Error);
}

TEST(Wilcoxon, AverageRanks) {
  std::vector<double> v = {3, 1, 3, 2, 3};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{4, 1, 4, 2, 4}));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> u(0, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(1 + t % 15);
    for (auto& e : x) e = u(rng);
    ASSERT_EQ(average_ranks(x), oracle::pairwise_ranks(x));
  }
}

TEST(WilcoxonProperty, ExactMatchesBruteForce) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> score(1, 5);
  std::uniform_int_distribution<int> len(1, 14);
  int tested = 0;
  while (tested < 300) {
    Pairs p(static_cast<std::size_t>(len(rng)));
    for (auto& [a, b] : p) {
      a = score(rng);
      b = score(rng);
    }
    auto brute = oracle::brute_wilcoxon(p, true);
    if (brute.n_eff == 0 || brute.n_eff > 10) continue;
    ++tested;
    for (bool greater : {true, false}) {
      auto want = oracle::brute_wilcoxon(p, greater);
      auto got = wilcoxon_signed_rank(p, greater ? Alternative::Greater : Alternative::Less);
      ASSERT_EQ(got.method, WilcoxonMethod::ExactEnumeration);
      ASSERT_EQ(got.p_value, want.p);
      ASSERT_EQ(got.w_statistic, want.tail);
      ASSERT_EQ(got.w_plus, want.w_plus);
      ASSERT_EQ(got.w_minus, want.w_minus);
    }
  }
}

TEST(WilcoxonProperty, RankSumIdentityWithTies) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 2000; ++t) {
    Pairs p(static_cast<std::size_t>(1 + t % 40));
    bool any = false;
    for (auto& [a, b] : p) {
      b = d(rng);
      any |= b != 0;
    }
    if (!any) continue;
    auto r = wilcoxon_signed_rank(p, Alternative::Greater);
    double n = static_cast<double>(r.n_effective);
    ASSERT_NEAR(r.w_plus + r.w_minus, n * (n + 1) / 2, 1e-9);
    ASSERT_GE(r.w_statistic, 0.0);
    ASSERT_GT(r.p_value, 0.0);
    ASSERT_LE(r.p_value, 1.0);
  }
}

TEST(WilcoxonProperty, NormalCloseToExactForMidSizedSamples) {
  std::mt19937_64 rng(123);
  std::normal_distribution<double> shift(0.0, 1.0);
  double worst = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 15 + t % 6;
    double mu = 0.6 * shift(rng);
    Pairs p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(0.0, mu + shift(rng));
    auto exact = wilcoxon_signed_rank(p, Alternative::Greater, MethodChoice::Exact);
    auto normal = wilcoxon_signed_rank(p, Alternative::Greater, MethodChoice::Normal);
    ASSERT_EQ(normal.method, WilcoxonMethod::NormalApproximation);
    worst = std::max(worst, std::fabs(exact.p_value - normal.p_value));
  }
  EXPECT_LE(worst, 0.01);
}

TEST(WilcoxonFixture, Phase1VersusPhase2) {
  nlohmann::json want;
  auto p = fixture_pairs("wilcoxon_p1p2.json", &want);
  auto r = wilcoxon_signed_rank(p, Alternative::Greater);
  EXPECT_EQ(r.w_statistic, 10.5);
  EXPECT_EQ(r.n_effective, want["n_effective"].get<std::size_t>());
  EXPECT_EQ(r.p_value, want["p_value"].get<double>());
  EXPECT_GT(r.p_value, 0.05);
  EXPECT_FALSE(r.significant(0.05));
}

TEST(WilcoxonFixture, Phase2VersusGpt) {
  nlohmann::json want;
  auto p = fixture_pairs("wilcoxon_p2gpt.json", &want);
  auto r = wilcoxon_signed_rank(p, Alternative::Greater);
  EXPECT_EQ(r.w_statistic, want["w_statistic"].get<double>());
  EXPECT_EQ(r.p_value, want["p_value"].get<double>());
  EXPECT_TRUE(r.significant(0.05));
}

TEST(Wilcoxon, Names) {
  EXPECT_EQ(parse_alternative("greater"), Alternative::Greater);
  EXPECT_EQ(parse_alternative("less"), Alternative::Less);
  EXPECT_THROW(parse_alternative("two-sided"), Error);
}
