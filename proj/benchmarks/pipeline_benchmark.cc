#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <string>

#include "mcdm/ahp.h"
#include "mcdm/dataset.h"
#include "mcdm/fuzzy_ahp.h"
#include "mcdm/ranking.h"

namespace {

std::string SyntheticReviews(int reviewers, int categories) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> cents(0, 400);
  std::ostringstream out;
  out << "User ID";
  for (int k = 1; k <= categories; ++k) out << ",Category " << k;
  out << '\n';
  for (int r = 1; r <= reviewers; ++r) {
    out << "User " << r;
    for (int k = 0; k < categories; ++k) out << ',' << cents(rng) / 100.0;
    out << '\n';
  }
  return out.str();
}

mcdm::ScoreVector RandomScores(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> score(0.5, 4.0);
  mcdm::ScoreVector s;
  for (std::size_t i = 0; i < n; ++i) {
    s.alternatives.push_back("alt" + std::to_string(i));
    s.scores.push_back(score(rng));
  }
  return s;
}

void BM_LoadReviews(benchmark::State& state) {
  const std::string text = SyntheticReviews(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(mcdm::LoadReviews(in));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_LoadReviews)->Arg(980)->Arg(10000);

void BM_PrincipalEigenvector(benchmark::State& state) {
  const auto p = mcdm::BuildPairwise(RandomScores(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mcdm::PrincipalEigenvector(p));
}
BENCHMARK(BM_PrincipalEigenvector)->DenseRange(3, 15, 4);

void BM_FuzzyWeights(benchmark::State& state) {
  const auto p = mcdm::BuildPairwise(RandomScores(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcdm::FuzzyWeights(mcdm::BuildFuzzyPairwise(p)));
  }
}
BENCHMARK(BM_FuzzyWeights)->DenseRange(3, 15, 4);

void BM_CompareMethods(benchmark::State& state) {
  std::istringstream in(SyntheticReviews(980, 10));
  const mcdm::ReviewMatrix data = mcdm::LoadReviews(in);
  for (auto _ : state) benchmark::DoNotOptimize(mcdm::CompareMethods(data));
}
BENCHMARK(BM_CompareMethods);

}  // namespace

BENCHMARK_MAIN();
