#include "celebnet/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <unordered_map>

#include "celebnet/errors.hpp"
#include "celebnet/markdown.hpp"
#include "celebnet/pos_tagger.hpp"

namespace celebnet {

namespace {

std::string fixed4(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

std::vector<CorrelationEntry> with_prefix(const std::vector<CorrelationEntry>& entries,
                                          const std::string& prefix) {
    std::vector<CorrelationEntry> out;
    for (const CorrelationEntry& entry : entries) {
        if (entry.feature.rfind(prefix, 0) == 0) {
            out.push_back(entry);
        }
    }
    return out;
}

std::vector<CorrelationEntry> lexicon_extremes(const std::vector<CorrelationEntry>& entries,
                                               bool top, std::size_t count) {
    std::vector<CorrelationEntry> out = with_prefix(entries, "liwc_");
    std::sort(out.begin(), out.end(), [top](const CorrelationEntry& a, const CorrelationEntry& b) {
        if (a.rho != b.rho) {
            return top ? a.rho > b.rho : a.rho < b.rho;
        }
        return a.feature < b.feature;
    });
    if (out.size() > count) {
        out.resize(count);
    }
    return out;
}

std::vector<std::string> present_columns(const FeatureMatrix& matrix,
                                         const std::vector<std::string>& wanted) {
    std::vector<std::string> out;
    for (const std::string& name : wanted) {
        if (matrix.column_index(name) >= 0) {
            out.push_back(name);
        }
    }
    return out;
}

} // namespace

PipelineResult run_pipeline(const Corpus& corpus, const Lexicon& lexicon,
                            const SentimentLexicon& sentiment_lex,
                            const std::unordered_set<std::string>& dictionary,
                            const StopwordSet& stopwords, const PipelineOptions& options) {
    PipelineResult result;
    result.retweet_graph = build_retweet_graph(corpus, options.graph);
    result.mention_graph = build_mention_graph(corpus, options.graph);
    result.retweet_centrality = centrality_report(result.retweet_graph, options.pagerank);
    result.mention_centrality = centrality_report(result.mention_graph, options.pagerank);

    LexiconMatcher matcher(lexicon);
    PosTagger tagger;
    std::vector<std::string> roster_handles;
    roster_handles.reserve(corpus.roster.size());
    for (const CelebrityProfile& profile : corpus.roster) {
        roster_handles.push_back(profile.handle);
    }
    result.profiles = linguistic_profiles(corpus, roster_handles, matcher, sentiment_lex,
                                          dictionary, tagger, stopwords, options.profile);

    const std::vector<std::string> handles =
        eligible_handles(result.retweet_graph, result.mention_graph, result.profiles);
    if (handles.size() < 3) {
        throw ValidationError("pipeline needs at least three celebrities in both networks");
    }
    result.features = assemble_features(result.retweet_centrality, result.mention_centrality,
                                        result.profiles, handles);
    result.followers = follower_targets(result.features, corpus.roster);
    result.labels =
        assign_buckets(corpus.roster, std::set<std::string>(handles.begin(), handles.end()));
    result.correlations = correlation_report(result.features, result.followers);
    result.bucket_means = aggregate_by_bucket(result.features, result.labels);

    const std::vector<Bucket> y = align_labels(result.features, result.labels);
    const std::vector<std::string> subsets =
        options.feature_sets.empty() ? feature_subset_names() : options.feature_sets;
    for (const std::string& classifier : options.classifiers) {
        for (const std::string& subset : subsets) {
            const FeatureMatrix sub =
                select_columns(result.features, feature_subset_columns(subset, result.features));
            result.cv_reports.push_back(
                cross_validate(sub, y, classifier, options.k_folds, options.seed, subset));
        }
    }
    return result;
}

std::string markdown_report(const Corpus& corpus, const PipelineResult& result) {
    std::string out = "# Celebrity engagement analysis\n\n";

    out += "## Corpus\n\n";
    out += "- tweets: " + std::to_string(corpus.tweets.size()) + "\n";
    out += "- roster: " + std::to_string(corpus.roster.size()) + "\n";
    out += "- analyzed (in both networks, with profiles): " +
           std::to_string(result.features.rows()) + "\n\n";

    std::unordered_map<std::string, Category> author_category;
    for (const CelebrityProfile& profile : corpus.roster) {
        author_category.emplace(profile.handle, profile.category);
    }
    std::map<Category, long long> roster_count;
    std::map<Category, long long> tweet_count;
    for (const CelebrityProfile& profile : corpus.roster) {
        ++roster_count[profile.category];
    }
    for (const TweetRecord& tweet : corpus.tweets) {
        auto it = author_category.find(tweet.author);
        if (it != author_category.end()) {
            ++tweet_count[it->second];
        }
    }
    std::vector<std::vector<std::string>> category_rows;
    for (Category category : {Category::Movies, Category::Music, Category::News, Category::Tech,
                              Category::Sports}) {
        if (roster_count.find(category) == roster_count.end()) {
            continue;
        }
        std::string density = "-";
        try {
            density = fixed4(average_retweet_density(corpus, category));
        } catch (const UndefinedError&) {
        }
        category_rows.push_back({to_string(category), std::to_string(roster_count[category]),
                                 std::to_string(tweet_count[category]), density});
    }
    out += markdown_table({"category", "celebrities", "tweets", "avg retweet density"},
                          category_rows);
    out += "\n## Networks\n\n";
    out += markdown_table(
        {"network", "nodes", "edges"},
        {{"retweet", std::to_string(result.retweet_graph.node_count()),
          std::to_string(result.retweet_graph.edge_count())},
         {"mention", std::to_string(result.mention_graph.node_count()),
          std::to_string(result.mention_graph.edge_count())}});

    out += "\n## Follower correlations\n\n";
    out += "### Retweet network features\n\n";
    out += markdown_correlation_table(with_prefix(result.correlations, "rt_"));
    out += "\n### Mention network features\n\n";
    out += markdown_correlation_table(with_prefix(result.correlations, "men_"));
    out += "\n### Strongest lexicon categories\n\n";
    out += markdown_correlation_table(lexicon_extremes(result.correlations, true, 10));
    out += "\n### Weakest lexicon categories\n\n";
    out += markdown_correlation_table(lexicon_extremes(result.correlations, false, 10));

    out += "\n## Bucket means\n\n";
    out += "### Network features\n\n";
    out += markdown_bucket_table(
        result.bucket_means,
        present_columns(result.features,
                        {"rt_c_bet", "rt_c_clo", "rt_c_deg", "rt_clust_coff", "rt_c_pr",
                         "men_c_bet", "men_c_clo", "men_c_deg", "men_clust_coff", "men_c_pr"}));
    out += "\n### Linguistic features\n\n";
    out += markdown_bucket_table(
        result.bucket_means,
        present_columns(result.features,
                        {"in_vocab", "sent_comp", "pos_entropy", "ttr", "wps", "ari"}));

    out += "\n## Classification accuracy\n\n";
    out += markdown_accuracy_grid(result.cv_reports);
    return out;
}

} // namespace celebnet
