#include <benchmark/benchmark.h>

#include "celebnet/centrality.hpp"

#include "bench_util.hpp"

namespace {

void BM_Betweenness(benchmark::State& state) {
    const celebnet::EngagementGraph graph =
        benchutil::random_graph(static_cast<int>(state.range(0)), 0.1, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::betweenness(graph));
    }
}
BENCHMARK(BM_Betweenness)->Arg(64)->Arg(128)->Arg(256);

void BM_Closeness(benchmark::State& state) {
    const celebnet::EngagementGraph graph =
        benchutil::random_graph(static_cast<int>(state.range(0)), 0.1, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::closeness(graph));
    }
}
BENCHMARK(BM_Closeness)->Arg(64)->Arg(256);

void BM_ClusteringCoefficient(benchmark::State& state) {
    const celebnet::EngagementGraph graph =
        benchutil::random_graph(static_cast<int>(state.range(0)), 0.1, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::clustering_coefficient(graph));
    }
}
BENCHMARK(BM_ClusteringCoefficient)->Arg(64)->Arg(256);

void BM_Pagerank(benchmark::State& state) {
    const celebnet::EngagementGraph graph =
        benchutil::random_graph(static_cast<int>(state.range(0)), 0.1, 11);
    const celebnet::PagerankOptions options;
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::pagerank(graph, options));
    }
}
BENCHMARK(BM_Pagerank)->Arg(64)->Arg(256)->Arg(512);

void BM_CentralityReport(benchmark::State& state) {
    const celebnet::EngagementGraph graph =
        benchutil::random_graph(static_cast<int>(state.range(0)), 0.1, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::centrality_report(graph));
    }
}
BENCHMARK(BM_CentralityReport)->Arg(128)->Arg(324);

} // namespace
