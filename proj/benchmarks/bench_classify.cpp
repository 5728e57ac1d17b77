#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "celebnet/classify.hpp"
#include "celebnet/rng.hpp"

namespace {

struct Planted {
    celebnet::FeatureMatrix x;
    std::vector<celebnet::Bucket> y;
};

Planted planted_clusters(int per_class, int features) {
    celebnet::Rng rng(42);
    Planted data;
    for (int j = 0; j < features; ++j) {
        data.x.feature_names.push_back("f" + std::to_string(j));
    }
    const celebnet::Bucket buckets[] = {celebnet::Bucket::High, celebnet::Bucket::Mid,
                                        celebnet::Bucket::Low};
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < per_class; ++i) {
            data.x.handles.push_back("h" + std::to_string(c) + "_" + std::to_string(i));
            std::vector<double> row;
            for (int j = 0; j < features; ++j) {
                row.push_back(2.0 * c + rng.normal());
            }
            data.x.values.push_back(std::move(row));
            data.y.push_back(buckets[c]);
        }
    }
    return data;
}

void BM_GnbFit(benchmark::State& state) {
    const Planted data = planted_clusters(static_cast<int>(state.range(0)), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::gaussian_nb_fit(data.x, data.y));
    }
}
BENCHMARK(BM_GnbFit)->Arg(100)->Arg(500);

void BM_SgdFit(benchmark::State& state) {
    const Planted data = planted_clusters(static_cast<int>(state.range(0)), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::sgd_logistic_fit(data.x, data.y));
    }
}
BENCHMARK(BM_SgdFit)->Arg(100);

void BM_ForestFit(benchmark::State& state) {
    const Planted data = planted_clusters(static_cast<int>(state.range(0)), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::random_forest_fit(data.x, data.y));
    }
}
BENCHMARK(BM_ForestFit)->Arg(100);

void BM_GnbCrossValidate(benchmark::State& state) {
    const Planted data = planted_clusters(100, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::cross_validate(data.x, data.y, "gnb", 10, 42));
    }
}
BENCHMARK(BM_GnbCrossValidate);

void BM_StratifiedFolds(benchmark::State& state) {
    const Planted data = planted_clusters(108, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::stratified_folds(data.y, 10, 42));
    }
}
BENCHMARK(BM_StratifiedFolds);

} // namespace
