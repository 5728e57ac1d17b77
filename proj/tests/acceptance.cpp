// Acceptance gate for the whole library and tool. Run as
//   acceptance <path-to-celebnet> <path-to-data-dir>
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <celebnet/celebnet.hpp>

#include "test_util.hpp"

using namespace celebnet;

namespace {

std::string g_cli;
std::string g_data;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int run_command(const std::string& args, const std::string& capture) {
    const std::string command = "\"" + g_cli + "\" " + args + " > \"" + capture + "\" 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

// 1. 324 celebrities split into terciles of exactly 108, in under 1 ms.
bool bucket_protocol(std::string& detail) {
    std::vector<CelebrityProfile> roster;
    std::set<std::string> eligible;
    for (int i = 0; i < 324; ++i) {
        char handle[16];
        std::snprintf(handle, sizeof(handle), "c%03d", i);
        CelebrityProfile profile;
        profile.handle = handle;
        profile.category = Category::Movies;
        profile.followers_future = 5000 + i * 3;
        roster.push_back(std::move(profile));
        eligible.insert(handle);
    }

    const auto start = Clock::now();
    const std::vector<BucketLabel> labels = assign_buckets(roster, eligible);
    const double elapsed = ms_since(start);

    std::map<Bucket, int> counts;
    for (const BucketLabel& label : labels) {
        ++counts[label.bucket];
    }
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer), "%d/%d/%d in %.3f ms", counts[Bucket::High],
                  counts[Bucket::Mid], counts[Bucket::Low], elapsed);
    detail = buffer;
    return counts[Bucket::High] == 108 && counts[Bucket::Mid] == 108 &&
           counts[Bucket::Low] == 108 && labels.size() == 324 && elapsed < 1.0;
}

// 2. Betweenness, closeness, degree, clustering and PageRank against
//    independent oracles on 30 seeded random graphs.
bool centrality_oracles(std::string& detail) {
    const auto start = Clock::now();
    bool ok = true;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + (trial * 7) % 36;
        const EngagementGraph graph = testutil::random_graph(n, 0.2, 9000 + trial);
        const testutil::RefGraph ref = testutil::ref_graph(graph);

        const auto ref_bet = testutil::naive_betweenness(ref);
        const auto ref_clo = testutil::bfs_closeness(ref);
        const auto ref_clust = testutil::brute_clustering(ref);
        const auto ref_pr = testutil::dense_pagerank(ref, 0.85);

        const auto bet = betweenness(graph);
        const auto clo = closeness(graph);
        const auto clust = clustering_coefficient(graph);
        const PagerankResult pr = pagerank(graph);

        double pr_sum = 0.0;
        for (const std::string& handle : graph.nodes()) {
            const auto i = static_cast<std::size_t>(graph.node_index(handle));
            ok = ok && std::abs(bet.at(handle) - ref_bet[i]) <= 1e-9;
            ok = ok && std::abs(clo.at(handle) - ref_clo[i]) <= 1e-12;
            ok = ok && clust.at(handle) == ref_clust[i];
            ok = ok && std::abs(pr.scores.at(handle) - ref_pr[i]) <= 1e-8;
            pr_sum += pr.scores.at(handle);
        }
        ok = ok && pr.converged;
        if (!graph.nodes().empty()) {
            ok = ok && std::abs(pr_sum - 1.0) <= 1e-9;
        }
    }
    const double elapsed = ms_since(start);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "30 graphs in %.0f ms", elapsed);
    detail = buffer;
    return ok && elapsed < 10'000.0;
}

// 3. Hand-enumerated co-engagement fixture: 3 celebrities, 20 users, with
//    5 / 10 / 2 common retweeters on (a,b) / (b,c) / (a,c).
bool graph_fixture(std::string& detail) {
    Corpus corpus;
    corpus.roster = {testutil::make_celebrity("a", 30), testutil::make_celebrity("b", 20),
                     testutil::make_celebrity("c", 10)};
    int id = 0;
    auto add = [&](const std::string& user, const std::string& of) {
        corpus.tweets.push_back(testutil::make_retweet("r" + std::to_string(id++), user, of));
    };
    for (int i = 0; i < 5; ++i) {
        add("u" + std::to_string(i), "a");
        add("u" + std::to_string(i), "b");
    }
    for (int i = 0; i < 10; ++i) {
        add("v" + std::to_string(i), "b");
        add("v" + std::to_string(i), "c");
    }
    for (int i = 0; i < 2; ++i) {
        add("w" + std::to_string(i), "a");
        add("w" + std::to_string(i), "c");
    }
    // Three engagers of a single celebrity each; no pair sees them.
    add("x0", "a");
    add("x1", "b");
    add("x2", "c");

    bool ok = true;

    GraphOptions options;
    options.threshold = 5;
    const EngagementGraph graph = build_retweet_graph(corpus, options);
    ok = ok && graph.edge_count() == 2 && graph.node_count() == 3;
    double weight_sum = 0.0;
    for (const GraphEdge& edge : graph.edges()) {
        weight_sum += edge.weight;
        if (edge.source == "a" && edge.target == "b") {
            ok = ok && edge.raw_count == 5 && edge.weight == 5.0 / 15.0;
        } else if (edge.source == "b" && edge.target == "c") {
            ok = ok && edge.raw_count == 10 && edge.weight == 10.0 / 15.0;
        } else {
            ok = false;
        }
    }
    ok = ok && std::abs(weight_sum - 1.0) <= 1e-12;

    // Raising the threshold only removes edges; raw counts never change.
    std::map<std::pair<std::string, std::string>, std::int64_t> previous;
    for (int threshold = 1; threshold <= 12; ++threshold) {
        options.threshold = threshold;
        const EngagementGraph swept = build_retweet_graph(corpus, options);
        std::map<std::pair<std::string, std::string>, std::int64_t> counts;
        double sum = 0.0;
        for (const GraphEdge& edge : swept.edges()) {
            counts[{edge.source, edge.target}] = edge.raw_count;
            sum += edge.weight;
            ok = ok && edge.raw_count >= threshold;
        }
        if (threshold == 1) {
            ok = ok && counts.size() == 3;
        } else {
            for (const auto& [pair, raw] : counts) {
                const auto it = previous.find(pair);
                ok = ok && it != previous.end() && it->second == raw;
            }
        }
        if (!counts.empty()) {
            ok = ok && std::abs(sum - 1.0) <= 1e-12;
        }
        previous = std::move(counts);
    }
    ok = ok && previous.empty(); // threshold 12 clears the last edge (max raw 10)

    detail = "thresholds 1..12";
    return ok;
}

// 4. Spearman endpoints exact; 200 tied random pairs against the
//    rank-then-Pearson oracle.
bool spearman_oracle_suite(std::string& detail) {
    bool ok = true;

    const std::vector<double> base = {3.0, 1.0, 4.0, 1.5, 9.0, 2.0, 6.0};
    std::vector<double> monotone;
    std::vector<double> reversed_rank(base.size());
    for (double v : base) {
        monotone.push_back(v * v * v + 2.0);
    }
    std::vector<double> descending = base;
    std::sort(descending.begin(), descending.end());
    std::vector<double> ascending = descending;
    std::reverse(descending.begin(), descending.end());
    (void)reversed_rank;
    ok = ok && spearman_values(base, monotone) == 1.0;
    ok = ok && spearman_values(ascending, descending) == -1.0;

    Rng rng(20260815);
    int done = 0;
    while (done < 200) {
        const std::size_t n = 2 + rng.below(29);
        std::vector<double> x;
        std::vector<double> y;
        for (std::size_t i = 0; i < n; ++i) {
            x.push_back(static_cast<double>(rng.below(6))); // small range plants ties
            y.push_back(static_cast<double>(rng.below(6)));
        }
        const bool x_constant = std::all_of(x.begin(), x.end(),
                                            [&](double v) { return v == x.front(); });
        const bool y_constant = std::all_of(y.begin(), y.end(),
                                            [&](double v) { return v == y.front(); });
        if (x_constant || y_constant) {
            continue;
        }
        const double expected = static_cast<double>(testutil::spearman_oracle(x, y));
        ok = ok && std::abs(spearman_values(x, y) - expected) <= 1e-12;
        ++done;
    }
    detail = "endpoints exact, 200 tied pairs";
    return ok;
}

// 5. Readability on 100 chars / 20 words / 2 sentences; tag-entropy
//    identities; sentiment channels summing to one.
bool linguistic_formulas(std::string& detail) {
    bool ok = true;

    std::string sentence;
    for (int i = 0; i < 10; ++i) {
        if (!sentence.empty()) {
            sentence += ' ';
        }
        sentence += "abcde";
    }
    sentence += '.';
    const std::vector<TweetRecord> ari_tweets = {
        testutil::make_tweet("t1", "a", sentence + ' ' + sentence)};
    const double value = ari(ari_tweets);
    ok = ok && value == 4.17 * 5.0 + 0.15 * 10.0 - 21.53;
    ok = ok && std::abs(value - 0.82) <= 1e-12;

    const Tagger identity = [](const std::string& token) { return token; };
    const std::vector<TweetRecord> uniform = {
        testutil::make_tweet("t2", "a", "aa bb cc dd aa bb cc dd")};
    ok = ok && std::abs(pos_entropy(uniform, identity) - std::log(4.0)) <= 1e-12;
    const std::vector<TweetRecord> single = {testutil::make_tweet("t3", "a", "aa aa aa")};
    ok = ok && pos_entropy(single, identity) == 0.0;

    const SentimentLexicon lex = load_sentiment_lexicon(g_data + "/sentiment_valence.tsv");
    std::vector<std::string> pool = {"stadium", "camera", "window", "bridge"};
    {
        std::vector<std::string> scored;
        for (const auto& [token, valence] : lex.valences) {
            scored.push_back(token);
        }
        std::sort(scored.begin(), scored.end());
        pool.insert(pool.end(), scored.begin(),
                    scored.begin() + std::min<std::size_t>(scored.size(), 12));
    }
    Rng rng(20170815);
    for (int stream = 0; stream < 100; ++stream) {
        std::vector<TweetRecord> tweets;
        const int n_tweets = 1 + static_cast<int>(rng.below(3));
        for (int t = 0; t < n_tweets; ++t) {
            std::string text;
            const int n_tokens = 3 + static_cast<int>(rng.below(6));
            for (int w = 0; w < n_tokens; ++w) {
                if (!text.empty()) {
                    text += ' ';
                }
                text += pool[rng.below(pool.size())];
            }
            tweets.push_back(testutil::make_tweet("s" + std::to_string(stream) + "_" +
                                                      std::to_string(t),
                                                  "a", text));
        }
        const SentimentScores scores = sentiment(tweets, lex);
        ok = ok && std::abs(scores.pos + scores.neg + scores.neu - 1.0) <= 1e-9;
    }

    detail = "ari, entropy, 100 sentiment streams";
    return ok;
}

// 6. The 1980 suffix-stripping algorithm against 40 published
//    vocabulary pairs.
bool porter_reference(std::string& detail) {
    const std::pair<const char*, const char*> pairs[] = {
        {"caresses", "caress"},   {"ponies", "poni"},         {"ties", "ti"},
        {"caress", "caress"},     {"cats", "cat"},            {"feed", "feed"},
        {"agreed", "agre"},       {"plastered", "plaster"},   {"bled", "bled"},
        {"motoring", "motor"},    {"sing", "sing"},           {"conflated", "conflat"},
        {"troubled", "troubl"},   {"sized", "size"},          {"hopping", "hop"},
        {"tanned", "tan"},        {"falling", "fall"},        {"hissing", "hiss"},
        {"fizzed", "fizz"},       {"failing", "fail"},        {"filing", "file"},
        {"happy", "happi"},       {"sky", "sky"},             {"relational", "relat"},
        {"conditional", "condit"}, {"rational", "ration"},    {"valenci", "valenc"},
        {"hesitanci", "hesit"},   {"digitizer", "digit"},     {"conformabli", "conform"},
        {"radicalli", "radic"},   {"differentli", "differ"},  {"vileli", "vile"},
        {"analogousli", "analog"}, {"vietnamization", "vietnam"}, {"predication", "predic"},
        {"operator", "oper"},     {"feudalism", "feudal"},    {"decisiveness", "decis"},
        {"hopefulness", "hope"},
    };
    bool ok = true;
    for (const auto& [word, stem] : pairs) {
        ok = ok && porter_stem(word) == stem;
    }
    detail = "40 reference pairs";
    return ok;
}

// 7. Ten-fold GNB on three 4-sigma-separated Gaussian clusters, n = 300.
bool gnb_sanity(std::string& detail) {
    FeatureMatrix x;
    x.feature_names = {"f0", "f1"};
    std::vector<Bucket> y;
    Rng rng(42);
    const Bucket buckets[] = {Bucket::High, Bucket::Mid, Bucket::Low};
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 100; ++i) {
            x.handles.push_back("h" + std::to_string(c) + "_" + std::to_string(i));
            x.values.push_back({4.0 * c + rng.normal(), 4.0 * c + rng.normal()});
            y.push_back(buckets[c]);
        }
    }

    const auto start = Clock::now();
    const CvReport report = cross_validate(x, y, "gnb", 10, 42);
    const double elapsed = ms_since(start);

    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "accuracy %.4f in %.0f ms", report.mean_accuracy,
                  elapsed);
    detail = buffer;
    return report.mean_accuracy >= 0.95 && elapsed < 1000.0;
}

struct EndToEnd {
    testutil::TempDir dir;
    bool synth_ok = false;
    bool report_ok = false;
    double report_ms = 0.0;
    std::string out;

    explicit EndToEnd(const std::string& tag) {
        const std::string base = dir.file("");
        const int synth_code = run_command("--seed 42 --out \"" + base + "\" synth --lexicon \"" +
                                               g_data + "/lexicon_demo.json\"",
                                           dir.file("synth_" + tag + ".log"));
        synth_ok = synth_code == 0;
        if (!synth_ok) {
            return;
        }
        out = dir.file("out");
        const std::string args =
            "--out \"" + out + "\" report --tweets \"" + dir.file("tweets.jsonl") +
            "\" --roster \"" + dir.file("roster.csv") + "\" --lexicon \"" + g_data +
            "/lexicon_demo.json\" --sentiment \"" + g_data + "/sentiment_valence.tsv\"" +
            " --dictionary \"" + g_data + "/english_words.txt\" --stopwords \"" + g_data +
            "/stopwords_en.txt\"";
        const auto start = Clock::now();
        report_ok = run_command(args, dir.file("report_" + tag + ".log")) == 0;
        report_ms = ms_since(start);
    }

    double mean_accuracy(const std::string& subset) const {
        const std::string path = out + "/cv_gnb_" + subset + ".json";
        const nlohmann::json doc = nlohmann::json::parse(testutil::read_file(path));
        return doc.at("mean_accuracy").get<double>();
    }
};

// 8. Planted-signal corpus, full report under a minute, combined-feature
//    GNB at or above 0.80, and combined >= linguistic >= network.
bool end_to_end(const EndToEnd& run, std::string& detail) {
    if (!run.synth_ok || !run.report_ok) {
        detail = "pipeline command failed";
        return false;
    }
    const std::string report = testutil::read_file(run.out + "/report.md");
    bool ok = report.find("## Classification accuracy") != std::string::npos;
    ok = ok && run.report_ms < 60'000.0;

    const double combined = run.mean_accuracy("combined");
    const double linguistic = run.mean_accuracy("all-linguistic");
    const double network = run.mean_accuracy("all-network");
    ok = ok && combined >= 0.80;
    ok = ok && combined >= linguistic && linguistic >= network;

    char buffer[128];
    std::snprintf(buffer, sizeof(buffer),
                  "report %.1f s; gnb %.4f >= %.4f >= %.4f", run.report_ms / 1000.0, combined,
                  linguistic, network);
    detail = buffer;
    return ok;
}

// 9. Two identically seeded runs hash to the same bytes, file for file.
bool determinism(const EndToEnd& first, const EndToEnd& second, std::string& detail) {
    if (!first.report_ok || !second.report_ok) {
        detail = "pipeline command failed";
        return false;
    }
    auto listing = [](const std::string& root) {
        std::vector<std::string> names;
        for (const auto& entry : std::filesystem::directory_iterator(root)) {
            names.push_back(entry.path().filename().string());
        }
        std::sort(names.begin(), names.end());
        return names;
    };
    const auto names = listing(first.out);
    if (names != listing(second.out) || names.empty()) {
        detail = "artifact sets differ";
        return false;
    }
    bool ok = true;
    for (const char* corpus_file : {"tweets.jsonl", "roster.csv", "labels.csv"}) {
        ok = ok && testutil::read_file(first.dir.file(corpus_file)) ==
                       testutil::read_file(second.dir.file(corpus_file));
    }
    for (const std::string& name : names) {
        const std::string a = testutil::read_file(first.out + "/" + name);
        const std::string b = testutil::read_file(second.out + "/" + name);
        ok = ok && fnv1a(a) == fnv1a(b) && a == b;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%zu artifacts identical", names.size() + 3);
    detail = buffer;
    return ok;
}

// 10. Fold sizes {32,33} and per-class counts {10,11} on 324 = 3 x 108.
bool stratification_arithmetic(std::string& detail) {
    std::vector<Bucket> y;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 108; ++i) {
            y.push_back(static_cast<Bucket>(c));
        }
    }
    const std::vector<int> folds = stratified_folds(y, 10, 42);
    bool ok = folds.size() == 324;

    std::map<int, int> sizes;
    std::map<int, std::map<Bucket, int>> per_class;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ok = ok && folds[i] >= 0 && folds[i] < 10;
        ++sizes[folds[i]];
        ++per_class[folds[i]][y[i]];
    }
    ok = ok && sizes.size() == 10;
    for (const auto& [fold, size] : sizes) {
        ok = ok && (size == 32 || size == 33);
        for (const auto& [bucket, count] : per_class[fold]) {
            ok = ok && (count == 10 || count == 11);
        }
    }
    detail = "folds {32,33}, classes {10,11}";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <celebnet-binary> <data-dir>\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    g_data = argv[2];

    int failures = 0;
    auto record = [&](int number, const char* label, bool ok, const std::string& detail) {
        std::printf("[%2d] %s  %s (%s)\n", number, ok ? "PASS" : "FAIL", label, detail.c_str());
        if (!ok) {
            ++failures;
        }
    };
    auto check = [&](int number, const char* label, bool (*criterion)(std::string&)) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        record(number, label, ok, detail);
    };

    check(1, "bucket terciles over 324 celebrities", bucket_protocol);
    check(2, "centrality oracles on 30 random graphs", centrality_oracles);
    check(3, "hand-enumerated co-engagement fixture", graph_fixture);
    check(4, "spearman endpoints and tied-pair oracle", spearman_oracle_suite);
    check(5, "readability, entropy and sentiment identities", linguistic_formulas);
    check(6, "porter stemmer reference vocabulary", porter_reference);
    check(7, "gnb on planted 4-sigma gaussians", gnb_sanity);

    {
        std::string detail;
        bool ok = false;
        EndToEnd first("a");
        try {
            ok = end_to_end(first, detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        record(8, "planted-signal end-to-end report", ok, detail);

        detail.clear();
        ok = false;
        try {
            EndToEnd second("b");
            ok = determinism(first, second, detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        record(9, "byte-identical reruns", ok, detail);
    }

    check(10, "stratified fold arithmetic", stratification_arithmetic);

    if (failures > 0) {
        std::printf("%d of 10 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
