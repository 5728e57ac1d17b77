#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "celebnet/centrality.hpp"
#include "celebnet/classify.hpp"
#include "celebnet/corpus.hpp"
#include "celebnet/engagement_graph.hpp"
#include "celebnet/features.hpp"
#include "celebnet/lexicon.hpp"
#include "celebnet/linguistic.hpp"
#include "celebnet/stats.hpp"
#include "celebnet/text.hpp"

namespace celebnet {

struct PipelineOptions {
    GraphOptions graph;
    PagerankOptions pagerank;
    ProfileOptions profile;
    int k_folds = 10;
    std::uint64_t seed = 42;
    std::vector<std::string> classifiers = {"gnb", "sgd", "forest"};
    // Named column subsets to cross-validate; empty means all of them.
    std::vector<std::string> feature_sets;
};

struct PipelineResult {
    EngagementGraph retweet_graph;
    EngagementGraph mention_graph;
    std::vector<CentralityVector> retweet_centrality;
    std::vector<CentralityVector> mention_centrality;
    std::vector<LinguisticProfile> profiles;
    FeatureMatrix features;
    std::vector<double> followers;
    std::vector<BucketLabel> labels;
    std::vector<CorrelationEntry> correlations;
    std::map<Bucket, std::map<std::string, double>> bucket_means;
    std::vector<CvReport> cv_reports;
};

/// Runs the whole analysis over one corpus: both co-engagement networks,
/// centrality extraction, linguistic profiles, follower correlations,
/// per-bucket means, and cross-validated classification for every
/// classifier/feature-set combination. Needs at least three celebrities
/// present in both networks and k_folds members per bucket.
PipelineResult run_pipeline(const Corpus& corpus, const Lexicon& lexicon,
                            const SentimentLexicon& sentiment_lex,
                            const std::unordered_set<std::string>& dictionary,
                            const StopwordSet& stopwords, const PipelineOptions& options = {});

/// Markdown report over a pipeline result: corpus and network summaries,
/// per-network follower correlations, strongest and weakest lexicon
/// categories, per-bucket feature means, and the accuracy grid.
std::string markdown_report(const Corpus& corpus, const PipelineResult& result);

} // namespace celebnet
