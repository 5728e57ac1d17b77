#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "celebnet/corpus.hpp"
#include "celebnet/engagement_graph.hpp"
#include "celebnet/rng.hpp"

#include "bench_util.hpp"

namespace {

celebnet::Corpus engagement_corpus(int celebrities, int users, double p) {
    celebnet::Rng rng(2017);
    celebnet::Corpus corpus;
    for (int i = 0; i < celebrities; ++i) {
        celebnet::CelebrityProfile profile;
        profile.handle = benchutil::node_name(i);
        profile.category = celebnet::Category::Movies;
        profile.followers_future = 1000 + i;
        corpus.roster.push_back(std::move(profile));
    }
    int id = 0;
    for (int u = 0; u < users; ++u) {
        const std::string user = "user" + std::to_string(u);
        for (int c = 0; c < celebrities; ++c) {
            if (rng.unit() >= p) {
                continue;
            }
            celebnet::TweetRecord tweet;
            tweet.id = "t" + std::to_string(id++);
            tweet.author = user;
            tweet.timestamp = "2017-06-01T12:00:00Z";
            tweet.epoch_seconds = 1496318400;
            tweet.retweet_of = corpus.roster[static_cast<std::size_t>(c)].handle;
            corpus.tweets.push_back(std::move(tweet));
        }
    }
    return corpus;
}

void BM_BuildRetweetGraph(benchmark::State& state) {
    const int celebrities = static_cast<int>(state.range(0));
    const int users = static_cast<int>(state.range(1));
    const celebnet::Corpus corpus = engagement_corpus(celebrities, users, 0.08);
    celebnet::GraphOptions options;
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::build_retweet_graph(corpus, options));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.tweets.size()));
}
BENCHMARK(BM_BuildRetweetGraph)->Args({50, 500})->Args({100, 1000})->Args({300, 500});

void BM_GraphFromCounts(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    celebnet::Rng rng(7);
    std::vector<std::tuple<std::string, std::string, std::int64_t>> counts;
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) {
        nodes.push_back(benchutil::node_name(i));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.unit() < 0.2) {
                counts.emplace_back(nodes[static_cast<std::size_t>(i)],
                                    nodes[static_cast<std::size_t>(j)],
                                    5 + static_cast<std::int64_t>(rng.below(20)));
            }
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            celebnet::graph_from_counts(celebnet::GraphFlavor::Retweet, 5, counts, nodes));
    }
}
BENCHMARK(BM_GraphFromCounts)->Arg(100)->Arg(400);

} // namespace
