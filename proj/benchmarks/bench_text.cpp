#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "celebnet/porter.hpp"
#include "celebnet/text.hpp"

namespace {

const char* const kSample =
    "Watching the premiere tonight!! http://t.co/abc123 with @filmcrew... "
    "absolutely wonderful evening, the #screening was moving and the music "
    "unforgettable \xE2\x80\xA6 tickets for tomorrow available now";

const celebnet::StopwordSet& stopwords() {
    static const celebnet::StopwordSet words = {"the", "a", "an", "and", "was", "for",
                                                "with", "of",  "in", "to",  "is"};
    return words;
}

void BM_CleanText(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::clean_text(kSample));
    }
}
BENCHMARK(BM_CleanText);

void BM_PreprocessText(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(celebnet::preprocess_text(kSample, stopwords()));
    }
}
BENCHMARK(BM_PreprocessText);

void BM_PorterStem(benchmark::State& state) {
    const std::vector<std::string> words = {
        "caresses",  "ponies",   "relational",     "conditional", "digitizer",
        "radicalli", "operator", "vietnamization", "decisiveness", "hopefulness",
        "troubled",  "hopping",  "conflated",      "plastered",   "motoring"};
    for (auto _ : state) {
        for (const std::string& word : words) {
            benchmark::DoNotOptimize(celebnet::porter_stem(word));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_PorterStem);

} // namespace
