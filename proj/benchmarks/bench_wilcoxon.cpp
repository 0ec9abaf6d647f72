#include <benchmark/benchmark.h>

#include <random>

#include "pgxrag/evaluation/wilcoxon.hpp"

namespace {

// Likert-style pairs, so ties and zero differences are common.
std::vector<std::pair<double, double>> likert_pairs(std::size_t n) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> score(1, 5);
  std::vector<std::pair<double, double>> pairs(n);
  for (auto& [a, b] : pairs) {
    a = score(rng);
    b = score(rng);
  }
  return pairs;
}

void BM_WilcoxonExact(benchmark::State& state) {
  auto pairs = likert_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pgxrag::wilcoxon_signed_rank(pairs, pgxrag::Alternative::Greater, pgxrag::MethodChoice::Exact));
}
BENCHMARK(BM_WilcoxonExact)->Arg(10)->Arg(20);

void BM_WilcoxonNormal(benchmark::State& state) {
  auto pairs = likert_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pgxrag::wilcoxon_signed_rank(pairs, pgxrag::Alternative::Greater, pgxrag::MethodChoice::Normal));
}
BENCHMARK(BM_WilcoxonNormal)->Arg(260);

}  // namespace

BENCHMARK_MAIN();
