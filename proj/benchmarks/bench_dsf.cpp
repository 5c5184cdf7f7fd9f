#include <divisive/dsf.hpp>
#include <divisive/generators.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace divisive;

namespace {

Profile random_profile(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProposalIndex> order(m);
  std::vector<Ranking> rankings;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < m; ++x) order[x] = x;
    std::shuffle(order.begin(), order.end(), rng);
    rankings.emplace_back(order);
  }
  return Profile(ProposalSet::letters(m), rankings);
}

void BM_ScoreExactGray(benchmark::State& state) {
  const auto r = random_profile(5, static_cast<std::size_t>(state.range(0)), 1);
  const auto scheme = ScoringScheme::normalized_borda();
  for (auto _ : state) benchmark::DoNotOptimize(score_based_dsf(r, scheme, DecompositionScheme::exact_uniform()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bipartition_count(r.size())));
}
BENCHMARK(BM_ScoreExactGray)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

void BM_ScoreExactCounting(benchmark::State& state) {
  const auto r = random_profile(4, static_cast<std::size_t>(state.range(0)), 2);
  const auto scheme = ScoringScheme::normalized_borda();
  for (auto _ : state) benchmark::DoNotOptimize(score_based_dsf(r, scheme, DecompositionScheme::exact_uniform(0)));
}
BENCHMARK(BM_ScoreExactCounting)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ScfExactGray(benchmark::State& state) {
  const auto r = random_profile(5, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::exact_uniform()));
}
BENCHMARK(BM_ScfExactGray)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ScoreMonteCarlo(benchmark::State& state) {
  const auto r = random_profile(5, 200, 4);
  const auto samples = static_cast<std::size_t>(state.range(0));
  const auto scheme = ScoringScheme::normalized_borda();
  for (auto _ : state)
    benchmark::DoNotOptimize(score_based_dsf(r, scheme, DecompositionScheme::monte_carlo(samples, 9)));
}
BENCHMARK(BM_ScoreMonteCarlo)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_Navarrete(benchmark::State& state) {
  const auto r = random_profile(static_cast<std::size_t>(state.range(0)), 500, 5);
  const auto scheme = ScoringScheme::normalized_borda();
  for (auto _ : state) benchmark::DoNotOptimize(navarrete_dsf(r, scheme));
}
BENCHMARK(BM_Navarrete)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_IndexKendall(benchmark::State& state) {
  const auto r = random_profile(8, static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(index_based_dsf(r, ProfileIndex::avg_kendall_tau()));
}
BENCHMARK(BM_IndexKendall)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SearchWeakPositionUnanimity(benchmark::State& state) {
  const auto dsf = make_score_based_dsf(ScoringScheme::normalized_borda());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        search_counterexample(dsf, AxiomId::weak_position_unanimity, GeneratorSpec::exhaustive(4, 3)));
}
BENCHMARK(BM_SearchWeakPositionUnanimity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
