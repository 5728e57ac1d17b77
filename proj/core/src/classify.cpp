#include "celebnet/classify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"
#include "celebnet/markdown.hpp"
#include "celebnet/rng.hpp"

namespace celebnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Bucket> present_classes(const std::vector<Bucket>& y) {
    bool seen[3] = {false, false, false};
    for (Bucket b : y) {
        seen[static_cast<int>(b)] = true;
    }
    std::vector<Bucket> classes;
    for (int c = 0; c < 3; ++c) {
        if (seen[c]) {
            classes.push_back(static_cast<Bucket>(c));
        }
    }
    return classes;
}

void check_xy(const FeatureMatrix& x, const std::vector<Bucket>& y) {
    if (x.rows() != y.size()) {
        throw ValidationError("label count does not match matrix rows");
    }
    if (x.rows() == 0) {
        throw ValidationError("empty training set");
    }
}

double population_variance(const std::vector<std::vector<double>>& values, std::size_t col) {
    double mean = 0.0;
    for (const auto& row : values) {
        mean += row[col];
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (const auto& row : values) {
        const double d = row[col] - mean;
        var += d * d;
    }
    return var / static_cast<double>(values.size());
}

} // namespace

std::vector<BucketLabel> assign_buckets(const std::vector<CelebrityProfile>& roster,
                                        const std::set<std::string>& eligible) {
    std::vector<const CelebrityProfile*> rows;
    rows.reserve(eligible.size());
    for (const CelebrityProfile& profile : roster) {
        if (eligible.count(profile.handle) > 0) {
            rows.push_back(&profile);
        }
    }
    if (rows.size() != eligible.size()) {
        std::unordered_set<std::string> known;
        for (const CelebrityProfile* row : rows) {
            known.insert(row->handle);
        }
        for (const std::string& handle : eligible) {
            if (known.count(handle) == 0) {
                throw ValidationError("eligible handle not in roster: " + handle);
            }
        }
    }
    if (rows.size() < 3) {
        throw ValidationError("bucket assignment needs at least three celebrities");
    }

    std::sort(rows.begin(), rows.end(),
              [](const CelebrityProfile* a, const CelebrityProfile* b) {
                  if (a->followers_future != b->followers_future) {
                      return a->followers_future > b->followers_future;
                  }
                  return a->handle < b->handle;
              });

    const std::size_t third = rows.size() / 3;
    std::vector<BucketLabel> labels;
    labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Bucket bucket = Bucket::Low;
        if (i < third) {
            bucket = Bucket::High;
        } else if (i < 2 * third) {
            bucket = Bucket::Mid;
        }
        labels.push_back({rows[i]->handle, bucket});
    }
    return labels;
}

GnbModel gaussian_nb_fit(const FeatureMatrix& x, const std::vector<Bucket>& y) {
    check_xy(x, y);
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();

    GnbModel model;
    model.classes = present_classes(y);

    double max_var = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        max_var = std::max(max_var, population_variance(x.values, j));
    }
    const double eps = 1e-9 * max_var;

    for (Bucket cls : model.classes) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] == cls) {
                members.push_back(i);
            }
        }
        if (members.size() < 2) {
            throw ValidationError(std::string("class ") + to_string(cls) +
                                  " has fewer than two training rows");
        }
        std::vector<double> mean(d, 0.0);
        for (std::size_t i : members) {
            for (std::size_t j = 0; j < d; ++j) {
                mean[j] += x.values[i][j];
            }
        }
        for (double& m : mean) {
            m /= static_cast<double>(members.size());
        }
        std::vector<double> var(d, 0.0);
        for (std::size_t i : members) {
            for (std::size_t j = 0; j < d; ++j) {
                const double dev = x.values[i][j] - mean[j];
                var[j] += dev * dev;
            }
        }
        for (double& v : var) {
            v = std::max(v / static_cast<double>(members.size()) + eps, 1e-300);
        }
        model.log_priors.push_back(
            std::log(static_cast<double>(members.size()) / static_cast<double>(n)));
        model.means.push_back(std::move(mean));
        model.variances.push_back(std::move(var));
    }
    return model;
}

Bucket gaussian_nb_predict(const GnbModel& model, const std::vector<double>& row) {
    if (model.classes.empty() || row.size() != model.means.front().size()) {
        throw ValidationError("row width does not match the fitted model");
    }
    Bucket best = model.classes.front();
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        double score = model.log_priors[c];
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double v = model.variances[c][j];
            const double dev = row[j] - model.means[c][j];
            score -= 0.5 * std::log(2.0 * kPi * v) + dev * dev / (2.0 * v);
        }
        if (score > best_score) {
            best_score = score;
            best = model.classes[c];
        }
    }
    return best;
}

SgdModel sgd_logistic_fit(const FeatureMatrix& x, const std::vector<Bucket>& y,
                          const SgdOptions& options) {
    check_xy(x, y);
    if (x.rows() < 3) {
        throw ValidationError("logistic fit needs at least three rows");
    }
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();

    SgdModel model;
    model.classes = present_classes(y);
    if (model.classes.size() < 2) {
        throw ValidationError("training fold has a single class");
    }

    model.feature_means.assign(d, 0.0);
    model.feature_stds.assign(d, 1.0);
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mean += x.values[i][j];
        }
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = x.values[i][j] - mean;
            var += dev * dev;
        }
        var /= static_cast<double>(n);
        model.feature_means[j] = mean;
        model.feature_stds[j] = var > 0.0 ? std::sqrt(var) : 1.0;
    }

    std::vector<std::vector<double>> z(n, std::vector<double>(d));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            z[i][j] = (x.values[i][j] - model.feature_means[j]) / model.feature_stds[j];
        }
    }

    const std::size_t n_classes = model.classes.size();
    model.weights.assign(n_classes, std::vector<double>(d, 0.0));
    model.bias.assign(n_classes, 0.0);
    std::vector<int> targets(n);
    for (std::size_t i = 0; i < n; ++i) {
        targets[i] = static_cast<int>(
            std::find(model.classes.begin(), model.classes.end(), y[i]) -
            model.classes.begin());
    }

    Rng rng(options.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int epoch = 0; epoch < options.epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
            for (std::size_t c = 0; c < n_classes; ++c) {
                double raw = model.bias[c];
                for (std::size_t j = 0; j < d; ++j) {
                    raw += model.weights[c][j] * z[i][j];
                }
                const double p = 1.0 / (1.0 + std::exp(-raw));
                const double grad = p - (targets[i] == static_cast<int>(c) ? 1.0 : 0.0);
                for (std::size_t j = 0; j < d; ++j) {
                    model.weights[c][j] -= options.lr * grad * z[i][j];
                }
                model.bias[c] -= options.lr * grad;
            }
        }
    }
    return model;
}

Bucket sgd_predict(const SgdModel& model, const std::vector<double>& row) {
    if (row.size() != model.feature_means.size()) {
        throw ValidationError("row width does not match the fitted model");
    }
    Bucket best = model.classes.front();
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        double score = model.bias[c];
        for (std::size_t j = 0; j < row.size(); ++j) {
            score += model.weights[c][j] *
                     ((row[j] - model.feature_means[j]) / model.feature_stds[j]);
        }
        if (score > best_score) {
            best_score = score;
            best = model.classes[c];
        }
    }
    return best;
}

namespace {

struct TreeBuilder {
    const FeatureMatrix& x;
    const std::vector<int>& targets; // class index per row
    std::size_t n_classes;
    int max_depth;
    std::size_t mtry;
    Rng& rng;
    const std::vector<Bucket>& classes;
    DecisionTree tree;

    int majority(const std::vector<long long>& counts) const {
        int best = 0;
        for (std::size_t c = 1; c < counts.size(); ++c) {
            if (counts[c] > counts[best]) {
                best = static_cast<int>(c);
            }
        }
        return best;
    }

    int build(std::vector<std::size_t>& samples, int depth) {
        std::vector<long long> counts(n_classes, 0);
        for (std::size_t i : samples) {
            ++counts[targets[i]];
        }
        const int node_index = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes[node_index].leaf = classes[majority(counts)];

        const bool pure =
            std::count_if(counts.begin(), counts.end(), [](long long c) { return c > 0; }) <= 1;
        if (depth >= max_depth || samples.size() < 2 || pure) {
            return node_index;
        }

        const std::size_t d = x.cols();
        std::vector<std::size_t> features(d);
        std::iota(features.begin(), features.end(), 0);
        for (std::size_t i = 0; i < mtry; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(d - i));
            std::swap(features[i], features[j]);
        }

        double best_gini = std::numeric_limits<double>::infinity();
        std::size_t best_feature = 0;
        double best_threshold = 0.0;
        bool found = false;

        std::vector<std::size_t> sorted = samples;
        std::vector<long long> left(n_classes);
        for (std::size_t f = 0; f < mtry; ++f) {
            const std::size_t feature = features[f];
            std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
                return x.values[a][feature] < x.values[b][feature];
            });
            std::fill(left.begin(), left.end(), 0);
            for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
                ++left[targets[sorted[i]]];
                const double lo = x.values[sorted[i]][feature];
                const double hi = x.values[sorted[i + 1]][feature];
                if (lo == hi) {
                    continue;
                }
                const auto nl = static_cast<double>(i + 1);
                const auto nr = static_cast<double>(sorted.size() - i - 1);
                double gini_l = 1.0;
                double gini_r = 1.0;
                for (std::size_t c = 0; c < n_classes; ++c) {
                    const double pl = static_cast<double>(left[c]) / nl;
                    const double pr = static_cast<double>(counts[c] - left[c]) / nr;
                    gini_l -= pl * pl;
                    gini_r -= pr * pr;
                }
                const double weighted =
                    (nl * gini_l + nr * gini_r) / static_cast<double>(sorted.size());
                if (weighted < best_gini) {
                    best_gini = weighted;
                    best_feature = feature;
                    best_threshold = lo + (hi - lo) / 2.0;
                    found = true;
                }
            }
        }
        if (!found) {
            return node_index;
        }

        std::vector<std::size_t> left_samples;
        std::vector<std::size_t> right_samples;
        for (std::size_t i : samples) {
            if (x.values[i][best_feature] <= best_threshold) {
                left_samples.push_back(i);
            } else {
                right_samples.push_back(i);
            }
        }
        tree.nodes[node_index].is_leaf = false;
        tree.nodes[node_index].feature = static_cast<int>(best_feature);
        tree.nodes[node_index].threshold = best_threshold;
        const int left_index = build(left_samples, depth + 1);
        tree.nodes[node_index].left = left_index;
        const int right_index = build(right_samples, depth + 1);
        tree.nodes[node_index].right = right_index;
        return node_index;
    }
};

} // namespace

ForestModel random_forest_fit(const FeatureMatrix& x, const std::vector<Bucket>& y,
                              const ForestOptions& options) {
    check_xy(x, y);
    if (x.rows() < 3) {
        throw ValidationError("forest fit needs at least three rows");
    }
    if (options.trees < 1) {
        throw ValidationError("forest needs at least one tree");
    }

    ForestModel model;
    model.classes = present_classes(y);
    std::vector<int> targets(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        targets[i] = static_cast<int>(
            std::find(model.classes.begin(), model.classes.end(), y[i]) -
            model.classes.begin());
    }

    const std::size_t n = x.rows();
    const auto mtry = static_cast<std::size_t>(
        std::max(1.0, std::floor(std::sqrt(static_cast<double>(x.cols())))));

    model.trees.reserve(static_cast<std::size_t>(options.trees));
    for (int t = 0; t < options.trees; ++t) {
        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> bootstrap(n);
        for (std::size_t i = 0; i < n; ++i) {
            bootstrap[i] = static_cast<std::size_t>(rng.below(n));
        }
        TreeBuilder builder{x,    targets, model.classes.size(), options.max_depth,
                            mtry, rng,     model.classes,        {}};
        builder.build(bootstrap, 0);
        model.trees.push_back(std::move(builder.tree));
    }
    return model;
}

Bucket forest_predict(const ForestModel& model, const std::vector<double>& row) {
    long long votes[3] = {0, 0, 0};
    for (const DecisionTree& tree : model.trees) {
        int node = 0;
        while (!tree.nodes[node].is_leaf) {
            node = row[static_cast<std::size_t>(tree.nodes[node].feature)] <=
                           tree.nodes[node].threshold
                       ? tree.nodes[node].left
                       : tree.nodes[node].right;
        }
        ++votes[static_cast<int>(tree.nodes[node].leaf)];
    }
    int best = 0;
    for (int c = 1; c < 3; ++c) {
        if (votes[c] > votes[best]) {
            best = c;
        }
    }
    return static_cast<Bucket>(best);
}

std::vector<int> stratified_folds(const std::vector<Bucket>& y, int k, std::uint64_t seed) {
    if (k < 2) {
        throw ValidationError("cross-validation needs at least two folds");
    }
    std::vector<int> folds(y.size(), 0);
    std::size_t position = 0;
    for (int c = 0; c < 3; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (static_cast<int>(y[i]) == c) {
                members.push_back(i);
            }
        }
        if (members.empty()) {
            continue;
        }
        if (members.size() < static_cast<std::size_t>(k)) {
            throw ValidationError(std::string("class ") + to_string(static_cast<Bucket>(c)) +
                                  " has fewer rows than folds");
        }
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
        rng.shuffle(members);
        for (std::size_t index : members) {
            folds[index] = static_cast<int>(position % static_cast<std::size_t>(k));
            ++position;
        }
    }
    return folds;
}

CvReport cross_validate(const FeatureMatrix& x, const std::vector<Bucket>& y,
                        const std::string& classifier, int k, std::uint64_t seed,
                        const std::string& feature_set) {
    check_xy(x, y);
    if (classifier != "gnb" && classifier != "sgd" && classifier != "forest") {
        throw ValidationError("unknown classifier: " + classifier);
    }
    const std::vector<int> folds = stratified_folds(y, k, seed);

    CvReport report;
    report.classifier = classifier;
    report.feature_set = feature_set;
    report.seed = seed;

    long long correct_total = 0;
    for (int f = 0; f < k; ++f) {
        FeatureMatrix train;
        train.feature_names = x.feature_names;
        std::vector<Bucket> train_y;
        std::vector<std::size_t> test_rows;
        for (std::size_t i = 0; i < x.rows(); ++i) {
            if (folds[i] == f) {
                test_rows.push_back(i);
            } else {
                train.handles.push_back(x.handles[i]);
                train.values.push_back(x.values[i]);
                train_y.push_back(y[i]);
            }
        }

        const std::uint64_t fold_seed = derive_seed(seed, 3 + static_cast<std::uint64_t>(f));
        std::function<Bucket(const std::vector<double>&)> predict;
        GnbModel gnb;
        SgdModel sgd;
        ForestModel forest;
        if (classifier == "gnb") {
            gnb = gaussian_nb_fit(train, train_y);
            predict = [&gnb](const std::vector<double>& row) {
                return gaussian_nb_predict(gnb, row);
            };
        } else if (classifier == "sgd") {
            SgdOptions options;
            options.seed = fold_seed;
            sgd = sgd_logistic_fit(train, train_y, options);
            predict = [&sgd](const std::vector<double>& row) { return sgd_predict(sgd, row); };
        } else {
            ForestOptions options;
            options.seed = fold_seed;
            forest = random_forest_fit(train, train_y, options);
            predict = [&forest](const std::vector<double>& row) {
                return forest_predict(forest, row);
            };
        }

        long long correct = 0;
        for (std::size_t i : test_rows) {
            const Bucket predicted = predict(x.values[i]);
            ++report.confusion[static_cast<int>(y[i])][static_cast<int>(predicted)];
            if (predicted == y[i]) {
                ++correct;
            }
        }
        correct_total += correct;
        report.fold_accuracies.push_back(static_cast<double>(correct) /
                                         static_cast<double>(test_rows.size()));
    }
    report.mean_accuracy = static_cast<double>(correct_total) / static_cast<double>(x.rows());
    return report;
}

std::vector<std::string> feature_subset_names() {
    return {"all-network",         "few-network",           "all-linguistic",
            "liwc-only",           "non-liwc-linguistic",   "handpicked-linguistic",
            "combined"};
}

std::vector<std::string> feature_subset_columns(const std::string& subset,
                                                const FeatureMatrix& matrix) {
    auto is_network = [](const std::string& name) {
        return name.rfind("rt_", 0) == 0 || name.rfind("men_", 0) == 0;
    };
    auto is_liwc = [](const std::string& name) { return name.rfind("liwc_", 0) == 0; };
    auto filtered = [&](auto&& keep) {
        std::vector<std::string> names;
        for (const std::string& name : matrix.feature_names) {
            if (keep(name)) {
                names.push_back(name);
            }
        }
        return names;
    };

    if (subset == "all-network") {
        return filtered(is_network);
    }
    if (subset == "few-network") {
        return filtered([&](const std::string& name) {
            return is_network(name) && name.find("c_clo") == std::string::npos;
        });
    }
    if (subset == "all-linguistic") {
        return filtered([&](const std::string& name) { return !is_network(name); });
    }
    if (subset == "liwc-only") {
        return filtered(is_liwc);
    }
    if (subset == "non-liwc-linguistic") {
        return filtered(
            [&](const std::string& name) { return !is_network(name) && !is_liwc(name); });
    }
    if (subset == "handpicked-linguistic") {
        return {"liwc_posemo", "liwc_affect", "liwc_funct", "liwc_cogmech", "liwc_social"};
    }
    if (subset == "combined") {
        std::vector<std::string> names = filtered([&](const std::string& name) {
            return is_network(name) && name.find("c_clo") == std::string::npos;
        });
        for (const char* extra :
             {"liwc_affect", "liwc_funct", "liwc_cogmech", "liwc_social", "sent_comp"}) {
            names.emplace_back(extra);
        }
        return names;
    }
    throw ValidationError("unknown feature subset: " + subset);
}

void write_cv_report_json(const std::string& path, const CvReport& report) {
    nlohmann::json doc;
    doc["classifier"] = report.classifier;
    doc["feature_set"] = report.feature_set;
    doc["seed"] = report.seed;
    doc["fold_accuracies"] = report.fold_accuracies;
    doc["mean_accuracy"] = report.mean_accuracy;
    doc["confusion"] = report.confusion;

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << doc.dump(2) << "\n";
}

std::string markdown_accuracy_grid(const std::vector<CvReport>& reports) {
    std::vector<std::string> feature_sets;
    std::vector<std::string> classifiers;
    std::map<std::pair<std::string, std::string>, double> cells;
    for (const CvReport& report : reports) {
        if (std::find(feature_sets.begin(), feature_sets.end(), report.feature_set) ==
            feature_sets.end()) {
            feature_sets.push_back(report.feature_set);
        }
        if (std::find(classifiers.begin(), classifiers.end(), report.classifier) ==
            classifiers.end()) {
            classifiers.push_back(report.classifier);
        }
        cells[{report.classifier, report.feature_set}] = report.mean_accuracy;
    }

    std::vector<std::string> headers{"Classifier"};
    headers.insert(headers.end(), feature_sets.begin(), feature_sets.end());
    std::vector<std::vector<std::string>> rows;
    for (const std::string& classifier : classifiers) {
        std::vector<std::string> row{classifier};
        for (const std::string& feature_set : feature_sets) {
            auto it = cells.find({classifier, feature_set});
            row.push_back(it == cells.end() ? "-" : format_double(it->second, "%.4f"));
        }
        rows.push_back(std::move(row));
    }
    return markdown_table(headers, rows);
}

} // namespace celebnet
