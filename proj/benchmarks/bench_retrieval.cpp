#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>

#include "pgxrag/embedding.hpp"
#include "pgxrag/vector_index.hpp"

namespace {

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  std::vector<double> v(dim);
  double s = 0;
  for (auto& x : v) {
    x = normal(rng);
    s += x * x;
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

pgxrag::VectorIndex random_index(std::size_t n, std::size_t dim) {
  std::mt19937_64 rng(1);
  std::vector<pgxrag::IndexEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = random_unit(rng, dim);
    entries.push_back({"chunk-" + std::to_string(i), std::vector<float>(v.begin(), v.end())});
  }
  return pgxrag::VectorIndex(dim, "bench", std::move(entries));
}

void BM_SearchTopK(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto index = random_index(n, 64);
  std::mt19937_64 rng(2);
  auto q = pgxrag::EmbeddingVector::from_unit(random_unit(rng, 64));
  for (auto _ : state) benchmark::DoNotOptimize(pgxrag::search_top_k(index, q, 4));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchTopK)->Arg(200)->Arg(2000)->Arg(20000);

void BM_HashedEmbed(benchmark::State& state) {
  pgxrag::HashedBagOfWordsEmbedder embedder;
  std::string text =
      "Patients who are CYP2C19 poor metabolizers have reduced formation of the active clopidogrel "
      "metabolite; an alternative antiplatelet agent is recommended when no contraindication exists.";
  for (auto _ : state) benchmark::DoNotOptimize(embedder.embed(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_HashedEmbed);

}  // namespace
