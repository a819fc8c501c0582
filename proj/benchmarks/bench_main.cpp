#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "smellvuln/corpus.hpp"
#include "smellvuln/graph.hpp"
#include "smellvuln/metrics.hpp"
#include "smellvuln/pipeline.hpp"
#include "smellvuln/smells.hpp"
#include "smellvuln/stats.hpp"

using namespace smellvuln;

namespace {

const std::filesystem::path kFixtures = SMELLVULN_FIXTURES;

void BM_FisherLargeTable(benchmark::State& state)
{
    const ContingencyTable t{293, 0, 209853, 5926};
    for (auto _ : state) benchmark::DoNotOptimize(fisher_exact_two_sided(t));
}
BENCHMARK(BM_FisherLargeTable);

void BM_RunTests(benchmark::State& state)
{
    const ContingencyTable t{56, 0, 35956, 676};
    for (auto _ : state) benchmark::DoNotOptimize(run_tests(t));
}
BENCHMARK(BM_RunTests);

// Sparse random digraph with about four out-edges per node.
void BM_StronglyConnected(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (auto& targets : adjacency) {
        for (int k = 0; k < 4; ++k) targets.push_back(pick(rng));
    }
    for (auto _ : state) benchmark::DoNotOptimize(strongly_connected_components(adjacency));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StronglyConnected)->RangeMultiplier(8)->Range(64, 32768)->Complexity();

void BM_ParseFixtureCorpus(benchmark::State& state)
{
    const ParseOptions options{static_cast<unsigned>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(parse_corpus(kFixtures / "smells", "fx", "1", options));
}
BENCHMARK(BM_ParseFixtureCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MetricsAndSmells(benchmark::State& state)
{
    const auto model = parse_corpus(kFixtures / "smells", "fx", "1");
    for (auto _ : state) {
        const auto metrics = compute_metrics(model);
        benchmark::DoNotOptimize(detect_smells(metrics, model, ThresholdConfig{}));
    }
}
BENCHMARK(BM_MetricsAndSmells)->Unit(benchmark::kMicrosecond);

void BM_MiniPipeline(benchmark::State& state)
{
    const auto config = load_run_config(kFixtures / "mini" / "run.conf");
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(config, std::nullopt, 1));
}
BENCHMARK(BM_MiniPipeline)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
