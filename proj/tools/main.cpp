#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "celebnet/celebnet.hpp"

namespace {

struct CliConfig {
    std::string tweets;
    std::string roster;
    std::string lexicon;
    std::string sentiment;
    std::string dictionary;
    std::string stopwords;
    std::string out = ".";
    int threshold = 5;
    double damping = 0.85;
    std::uint64_t seed = 42;
    int k_folds = 10;
    bool weighted = false;
    bool distinct_tweets = false;
    bool include_roster_engagers = false;
    bool per_tweet_mean = false;
    double log_base = 0.0;
};

void merge_config_file(CliConfig& cfg, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw celebnet::IoError("cannot open config: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw celebnet::ValidationError(std::string("config: ") + e.what());
    }
    try {
        if (doc.contains("paths")) {
            const auto& paths = doc["paths"];
            auto get_path = [&paths](const char* key, std::string& into) {
                if (paths.contains(key)) {
                    into = paths[key].get<std::string>();
                }
            };
            get_path("tweets", cfg.tweets);
            get_path("roster", cfg.roster);
            get_path("lexicon", cfg.lexicon);
            get_path("sentiment", cfg.sentiment);
            get_path("dictionary", cfg.dictionary);
            get_path("stopwords", cfg.stopwords);
            get_path("out", cfg.out);
        }
        if (doc.contains("threshold")) cfg.threshold = doc["threshold"].get<int>();
        if (doc.contains("damping")) cfg.damping = doc["damping"].get<double>();
        if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("k_folds")) cfg.k_folds = doc["k_folds"].get<int>();
        if (doc.contains("weighted")) cfg.weighted = doc["weighted"].get<bool>();
        if (doc.contains("distinct_tweets")) cfg.distinct_tweets = doc["distinct_tweets"].get<bool>();
        if (doc.contains("include_roster_engagers"))
            cfg.include_roster_engagers = doc["include_roster_engagers"].get<bool>();
        if (doc.contains("per_tweet_mean")) cfg.per_tweet_mean = doc["per_tweet_mean"].get<bool>();
        if (doc.contains("log_base")) cfg.log_base = doc["log_base"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw celebnet::ValidationError(std::string("config: ") + e.what());
    }
}

void validate_config(const CliConfig& cfg) {
    if (cfg.threshold < 1) {
        throw celebnet::ValidationError("threshold must be at least 1");
    }
    if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) {
        throw celebnet::ValidationError("damping must lie in (0,1)");
    }
    if (cfg.k_folds < 2) {
        throw celebnet::ValidationError("k_folds must be at least 2");
    }
}

std::string require(const std::string& value, const char* what) {
    if (value.empty()) {
        throw celebnet::ValidationError(std::string("missing required path: ") + what);
    }
    return value;
}

celebnet::Corpus load(const CliConfig& cfg, celebnet::LoadReport* report = nullptr) {
    return celebnet::load_corpus(require(cfg.tweets, "--tweets"), require(cfg.roster, "--roster"),
                                 report);
}

struct LinguisticInputs {
    celebnet::Lexicon lexicon;
    celebnet::SentimentLexicon sentiment;
    std::unordered_set<std::string> dictionary;
    celebnet::StopwordSet stopwords;
};

LinguisticInputs load_linguistic(const CliConfig& cfg) {
    LinguisticInputs inputs;
    inputs.lexicon = celebnet::load_lexicon(require(cfg.lexicon, "--lexicon"));
    inputs.sentiment = celebnet::load_sentiment_lexicon(require(cfg.sentiment, "--sentiment"));
    inputs.dictionary = celebnet::load_dictionary(require(cfg.dictionary, "--dictionary"));
    inputs.stopwords = celebnet::load_stopwords(require(cfg.stopwords, "--stopwords"));
    return inputs;
}

celebnet::PipelineOptions pipeline_options(const CliConfig& cfg) {
    celebnet::PipelineOptions options;
    options.graph.threshold = cfg.threshold;
    options.graph.distinct_tweets = cfg.distinct_tweets;
    options.graph.include_roster_engagers = cfg.include_roster_engagers;
    options.pagerank.damping = cfg.damping;
    options.pagerank.weighted = cfg.weighted;
    options.profile.log_base = cfg.log_base;
    options.profile.sentiment_per_tweet_mean = cfg.per_tweet_mean;
    options.k_folds = cfg.k_folds;
    options.seed = cfg.seed;
    return options;
}

std::string out_path(const CliConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out);
    return (std::filesystem::path(cfg.out) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw celebnet::IoError("cannot write: " + path);
    }
    out << text;
}

std::string ard_csv(const celebnet::Corpus& corpus) {
    std::string csv = "category,avg_retweet_density\n";
    for (celebnet::Category category :
         {celebnet::Category::Movies, celebnet::Category::Music, celebnet::Category::News,
          celebnet::Category::Tech, celebnet::Category::Sports}) {
        try {
            const double density = celebnet::average_retweet_density(corpus, category);
            csv += std::string(celebnet::to_string(category)) + "," +
                   celebnet::format_double(density) + "\n";
        } catch (const celebnet::UndefinedError&) {
        }
    }
    return csv;
}

int run_ingest(const CliConfig& cfg) {
    celebnet::LoadReport report;
    const celebnet::Corpus corpus = load(cfg, &report);
    std::printf("tweets: %zu\n", corpus.tweets.size());
    std::printf("celebrities: %zu\n", corpus.roster.size());
    std::printf("dropped_invalid: %zu\n", report.invalid);
    std::printf("dropped_duplicates: %zu\n", report.duplicates);
    const std::string csv = ard_csv(corpus);
    std::fputs(csv.c_str(), stdout);
    write_text(out_path(cfg, "ard.csv"), csv);
    return 0;
}

int run_graph(const CliConfig& cfg, const std::string& flavor) {
    const celebnet::Corpus corpus = load(cfg);
    celebnet::PipelineOptions options = pipeline_options(cfg);
    const celebnet::EngagementGraph graph =
        flavor == "retweet" ? celebnet::build_retweet_graph(corpus, options.graph)
                            : celebnet::build_mention_graph(corpus, options.graph);
    celebnet::write_graph_csv(graph, out_path(cfg, flavor + "_edges.csv"));
    celebnet::write_graph_header_json(graph, out_path(cfg, flavor + "_graph.json"));
    std::printf("flavor: %s\nnodes: %zu\nedges: %zu\n", flavor.c_str(), graph.node_count(),
                graph.edge_count());
    return 0;
}

int run_centrality(const CliConfig& cfg) {
    const celebnet::Corpus corpus = load(cfg);
    celebnet::PipelineOptions options = pipeline_options(cfg);
    const celebnet::EngagementGraph retweet = celebnet::build_retweet_graph(corpus, options.graph);
    const celebnet::EngagementGraph mention = celebnet::build_mention_graph(corpus, options.graph);
    const auto retweet_rows = celebnet::centrality_report(retweet, options.pagerank);
    const auto mention_rows = celebnet::centrality_report(mention, options.pagerank);
    celebnet::write_centrality_csv(out_path(cfg, "retweet_centrality.csv"), retweet_rows);
    celebnet::write_centrality_csv(out_path(cfg, "mention_centrality.csv"), mention_rows);
    std::printf("retweet_nodes: %zu\nmention_nodes: %zu\n", retweet_rows.size(),
                mention_rows.size());
    return 0;
}

int run_features(const CliConfig& cfg) {
    const celebnet::Corpus corpus = load(cfg);
    const LinguisticInputs inputs = load_linguistic(cfg);
    celebnet::PipelineOptions options = pipeline_options(cfg);
    const celebnet::LexiconMatcher matcher(inputs.lexicon);
    const celebnet::PosTagger tagger;
    std::vector<std::string> handles;
    handles.reserve(corpus.roster.size());
    for (const celebnet::CelebrityProfile& profile : corpus.roster) {
        handles.push_back(profile.handle);
    }
    const auto profiles =
        celebnet::linguistic_profiles(corpus, handles, matcher, inputs.sentiment,
                                      inputs.dictionary, tagger, inputs.stopwords, options.profile);
    celebnet::write_profiles_csv(out_path(cfg, "linguistic_profiles.csv"), profiles);
    std::printf("profiles: %zu\n", profiles.size());
    return 0;
}

void write_pipeline_artifacts(const CliConfig& cfg, const celebnet::PipelineResult& result) {
    celebnet::write_graph_csv(result.retweet_graph, out_path(cfg, "retweet_edges.csv"));
    celebnet::write_graph_header_json(result.retweet_graph, out_path(cfg, "retweet_graph.json"));
    celebnet::write_graph_csv(result.mention_graph, out_path(cfg, "mention_edges.csv"));
    celebnet::write_graph_header_json(result.mention_graph, out_path(cfg, "mention_graph.json"));
    celebnet::write_centrality_csv(out_path(cfg, "retweet_centrality.csv"),
                                   result.retweet_centrality);
    celebnet::write_centrality_csv(out_path(cfg, "mention_centrality.csv"),
                                   result.mention_centrality);
    celebnet::write_profiles_csv(out_path(cfg, "linguistic_profiles.csv"), result.profiles);
    celebnet::write_features_csv(out_path(cfg, "features.csv"), result.features);
    celebnet::write_correlations_csv(out_path(cfg, "correlations.csv"), result.correlations);
}

int run_correlate(const CliConfig& cfg) {
    const celebnet::Corpus corpus = load(cfg);
    const LinguisticInputs inputs = load_linguistic(cfg);
    celebnet::PipelineOptions options = pipeline_options(cfg);
    options.classifiers.clear();
    const celebnet::PipelineResult result = celebnet::run_pipeline(
        corpus, inputs.lexicon, inputs.sentiment, inputs.dictionary, inputs.stopwords, options);
    write_pipeline_artifacts(cfg, result);
    std::string buckets = "## Network features by bucket\n\n";
    buckets += celebnet::markdown_bucket_table(
        result.bucket_means, {"rt_c_bet", "rt_c_clo", "rt_c_deg", "rt_clust_coff", "rt_c_pr"});
    buckets += "\n## Linguistic features by bucket\n\n";
    buckets += celebnet::markdown_bucket_table(
        result.bucket_means, {"in_vocab", "sent_comp", "pos_entropy", "ttr", "wps", "ari"});
    write_text(out_path(cfg, "bucket_means.md"), buckets);
    std::printf("rows: %zu\nfeatures: %zu\ncorrelations: %zu\n", result.features.rows(),
                result.features.cols(), result.correlations.size());
    return 0;
}

int run_classify(const CliConfig& cfg, const std::string& classifier, const std::string& subset) {
    const celebnet::Corpus corpus = load(cfg);
    const LinguisticInputs inputs = load_linguistic(cfg);
    celebnet::PipelineOptions options = pipeline_options(cfg);
    options.classifiers = {classifier};
    options.feature_sets = {subset};
    const celebnet::PipelineResult result = celebnet::run_pipeline(
        corpus, inputs.lexicon, inputs.sentiment, inputs.dictionary, inputs.stopwords, options);
    const celebnet::CvReport& report = result.cv_reports.front();
    celebnet::write_cv_report_json(out_path(cfg, "cv_" + classifier + "_" + subset + ".json"),
                                   report);
    std::printf("classifier: %s\nfeature_set: %s\n", report.classifier.c_str(),
                report.feature_set.c_str());
    std::string folds;
    for (double accuracy : report.fold_accuracies) {
        if (!folds.empty()) {
            folds += ' ';
        }
        folds += celebnet::format_double(accuracy, "%.4f");
    }
    std::printf("fold_accuracies: %s\n", folds.c_str());
    std::printf("mean_accuracy: %s\n", celebnet::format_double(report.mean_accuracy, "%.4f").c_str());
    return 0;
}

int run_report(const CliConfig& cfg) {
    const celebnet::Corpus corpus = load(cfg);
    const LinguisticInputs inputs = load_linguistic(cfg);
    const celebnet::PipelineOptions options = pipeline_options(cfg);
    const celebnet::PipelineResult result = celebnet::run_pipeline(
        corpus, inputs.lexicon, inputs.sentiment, inputs.dictionary, inputs.stopwords, options);
    write_pipeline_artifacts(cfg, result);
    for (const celebnet::CvReport& report : result.cv_reports) {
        celebnet::write_cv_report_json(
            out_path(cfg, "cv_" + report.classifier + "_" + report.feature_set + ".json"), report);
    }
    const std::string markdown = celebnet::markdown_report(corpus, result);
    write_text(out_path(cfg, "report.md"), markdown);
    std::printf("report: %s\n", out_path(cfg, "report.md").c_str());
    return 0;
}

int run_synth(const CliConfig& cfg, const std::string& spec_path, int celebrities, int users,
              bool seed_given) {
    celebnet::SynthSpec spec =
        spec_path.empty() ? celebnet::default_synth_spec() : celebnet::load_synth_spec(spec_path);
    if (celebrities > 0) {
        spec.n_celebrities = celebrities;
    }
    if (users > 0) {
        spec.n_users = users;
    }
    if (seed_given) {
        spec.seed = cfg.seed;
    }
    const celebnet::Lexicon lexicon = celebnet::load_lexicon(require(cfg.lexicon, "--lexicon"));
    const celebnet::SynthResult result = celebnet::generate(spec, lexicon);
    celebnet::write_corpus(result.corpus, out_path(cfg, "tweets.jsonl"),
                           out_path(cfg, "roster.csv"));
    std::ofstream labels(out_path(cfg, "labels.csv"), std::ios::binary);
    labels << "handle,bucket\n";
    for (const celebnet::BucketLabel& label : result.labels) {
        labels << label.handle << ',' << celebnet::to_string(label.bucket) << '\n';
    }
    std::printf("tweets: %zu\ncelebrities: %zu\n", result.corpus.tweets.size(),
                result.corpus.roster.size());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Co-engagement networks, linguistic profiles, and follower-bucket classification"};
    app.require_subcommand(1);

    std::string config_path;
    CliConfig parsed;
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    app.add_option("--tweets", parsed.tweets, "Tweet JSONL file");
    app.add_option("--roster", parsed.roster, "Roster CSV file");
    app.add_option("--lexicon", parsed.lexicon, "Category lexicon JSON file");
    app.add_option("--sentiment", parsed.sentiment, "Sentiment valence TSV file");
    app.add_option("--dictionary", parsed.dictionary, "Dictionary word list");
    app.add_option("--stopwords", parsed.stopwords, "Stopword list");
    app.add_option("--out", parsed.out, "Output directory");
    app.add_option("--threshold", parsed.threshold, "Common-engager edge threshold");
    app.add_option("--damping", parsed.damping, "PageRank damping factor");
    app.add_option("--seed", parsed.seed, "Random seed");
    app.add_option("--k-folds", parsed.k_folds, "Cross-validation folds");
    app.add_flag("--weighted", parsed.weighted, "Weight-aware PageRank");
    app.add_flag("--distinct-tweets", parsed.distinct_tweets,
                 "Mention engagement needs two distinct tweets");
    app.add_flag("--include-roster-engagers", parsed.include_roster_engagers,
                 "Count roster members as mention engagers");
    app.add_flag("--per-tweet-mean", parsed.per_tweet_mean,
                 "Average sentiment per tweet instead of pooling tokens");
    app.add_option("--log-base", parsed.log_base, "Entropy log base (<=0 for natural)");

    CLI::App* ingest = app.add_subcommand("ingest", "Validate inputs and print a corpus summary");
    CLI::App* graph = app.add_subcommand("graph", "Build one co-engagement network");
    std::string flavor = "retweet";
    graph->add_option("--flavor", flavor, "retweet or mention")
        ->check(CLI::IsMember({"retweet", "mention"}));
    CLI::App* centrality =
        app.add_subcommand("centrality", "Emit centrality vectors for both networks");
    CLI::App* features = app.add_subcommand("features", "Emit per-celebrity linguistic profiles");
    CLI::App* correlate =
        app.add_subcommand("correlate", "Correlate every feature with future follower counts");
    CLI::App* classify = app.add_subcommand("classify", "Cross-validated bucket classification");
    std::string subset = "combined";
    std::string classifier = "gnb";
    classify->add_option("--features", subset, "Named feature subset");
    classify->add_option("--classifier", classifier, "gnb, sgd, or forest")
        ->check(CLI::IsMember({"gnb", "sgd", "forest"}));
    CLI::App* report =
        app.add_subcommand("report", "Run the full pipeline and write a markdown report");
    CLI::App* synth = app.add_subcommand("synth", "Generate a deterministic synthetic corpus");
    std::string synth_spec_path;
    int synth_celebrities = 0;
    int synth_users = 0;
    synth->add_option("--spec", synth_spec_path, "Generator spec JSON");
    synth->add_option("--celebrities", synth_celebrities, "Override roster size");
    synth->add_option("--users", synth_users, "Override engaging-user count");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CliConfig cfg;
        if (!config_path.empty()) {
            merge_config_file(cfg, config_path);
        }
        auto apply = [&](const char* name, auto member) {
            if (app.count(name) > 0) {
                cfg.*member = parsed.*member;
            }
        };
        apply("--tweets", &CliConfig::tweets);
        apply("--roster", &CliConfig::roster);
        apply("--lexicon", &CliConfig::lexicon);
        apply("--sentiment", &CliConfig::sentiment);
        apply("--dictionary", &CliConfig::dictionary);
        apply("--stopwords", &CliConfig::stopwords);
        apply("--out", &CliConfig::out);
        apply("--threshold", &CliConfig::threshold);
        apply("--damping", &CliConfig::damping);
        apply("--seed", &CliConfig::seed);
        apply("--k-folds", &CliConfig::k_folds);
        apply("--weighted", &CliConfig::weighted);
        apply("--distinct-tweets", &CliConfig::distinct_tweets);
        apply("--include-roster-engagers", &CliConfig::include_roster_engagers);
        apply("--per-tweet-mean", &CliConfig::per_tweet_mean);
        apply("--log-base", &CliConfig::log_base);
        validate_config(cfg);

        if (ingest->parsed()) {
            return run_ingest(cfg);
        }
        if (graph->parsed()) {
            return run_graph(cfg, flavor);
        }
        if (centrality->parsed()) {
            return run_centrality(cfg);
        }
        if (features->parsed()) {
            return run_features(cfg);
        }
        if (correlate->parsed()) {
            return run_correlate(cfg);
        }
        if (classify->parsed()) {
            return run_classify(cfg, classifier, subset);
        }
        if (report->parsed()) {
            return run_report(cfg);
        }
        if (synth->parsed()) {
            return run_synth(cfg, synth_spec_path, synth_celebrities, synth_users,
                             app.count("--seed") > 0);
        }
        return 2;
    } catch (const celebnet::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
