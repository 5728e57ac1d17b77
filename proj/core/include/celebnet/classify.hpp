#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "celebnet/corpus.hpp"
#include "celebnet/features.hpp"

namespace celebnet {

/// Sorts the eligible celebrities by future follower count (descending,
/// ties by handle) and labels the first third HIGH, the next third MID,
/// and the rest LOW.
std::vector<BucketLabel> assign_buckets(const std::vector<CelebrityProfile>& roster,
                                        const std::set<std::string>& eligible);

struct GnbModel {
    std::vector<Bucket> classes;
    std::vector<double> log_priors;
    std::vector<std::vector<double>> means;     // class x feature
    std::vector<std::vector<double>> variances; // class x feature, floored
};

/// Per-class Gaussian fit with population variances plus a floor of
/// 1e-9 times the largest overall feature variance.
GnbModel gaussian_nb_fit(const FeatureMatrix& x, const std::vector<Bucket>& y);
Bucket gaussian_nb_predict(const GnbModel& model, const std::vector<double>& row);

struct SgdOptions {
    int epochs = 100;
    double lr = 0.01;
    std::uint64_t seed = 42;
};

struct SgdModel {
    std::vector<Bucket> classes;
    std::vector<double> feature_means;
    std::vector<double> feature_stds;
    std::vector<std::vector<double>> weights; // class x feature
    std::vector<double> bias;
};

/// One-vs-rest logistic regression trained by SGD on standardized
/// features; the per-epoch sample order comes from the seed alone.
SgdModel sgd_logistic_fit(const FeatureMatrix& x, const std::vector<Bucket>& y,
                          const SgdOptions& options = {});
Bucket sgd_predict(const SgdModel& model, const std::vector<double>& row);

struct ForestOptions {
    int trees = 100;
    int max_depth = 8;
    std::uint64_t seed = 42;
};

struct TreeNode {
    bool is_leaf = true;
    Bucket leaf = Bucket::High;
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
};

struct ForestModel {
    std::vector<Bucket> classes;
    std::vector<DecisionTree> trees;
};

/// Bootstrap CART trees with Gini splits over sqrt(d) random features per
/// node; each tree's generator is derived from (seed, tree index).
ForestModel random_forest_fit(const FeatureMatrix& x, const std::vector<Bucket>& y,
                              const ForestOptions& options = {});
Bucket forest_predict(const ForestModel& model, const std::vector<double>& row);

struct CvReport {
    std::string classifier;
    std::string feature_set;
    std::uint64_t seed = 0;
    std::vector<double> fold_accuracies;
    double mean_accuracy = 0.0;
    std::array<std::array<long long, 3>, 3> confusion{}; // [true][predicted]
};

/// Fold index per row: per-class index lists are shuffled, concatenated in
/// bucket order, and dealt round-robin, so per-fold class counts differ by
/// at most one row.
std::vector<int> stratified_folds(const std::vector<Bucket>& y, int k, std::uint64_t seed);

/// Stratified k-fold cross-validation. `classifier` is one of "gnb",
/// "sgd", "forest". mean_accuracy is the overall fraction of correct
/// predictions (the confusion trace over n).
CvReport cross_validate(const FeatureMatrix& x, const std::vector<Bucket>& y,
                        const std::string& classifier, int k = 10, std::uint64_t seed = 42,
                        const std::string& feature_set = "");

/// The seven named column subsets used in the experiments.
std::vector<std::string> feature_subset_names();

/// Column names of a named subset, in matrix order for the filter-style
/// subsets. Unknown subset names are an error.
std::vector<std::string> feature_subset_columns(const std::string& subset,
                                                const FeatureMatrix& matrix);

void write_cv_report_json(const std::string& path, const CvReport& report);

/// Classifier rows by feature-set columns, mean accuracy per cell.
std::string markdown_accuracy_grid(const std::vector<CvReport>& reports);

} // namespace celebnet
