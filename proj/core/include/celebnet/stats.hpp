#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "celebnet/features.hpp"

namespace celebnet {

/// Values paired with their descending ranks (rank 1 = largest value; ties
/// share the average of the ranks they span). Entry order mirrors the
/// input.
struct RankList {
    std::vector<std::pair<std::string, double>> entries;
    std::vector<double> ranks;
};

struct CorrelationEntry {
    std::string feature;
    double rho;
};

RankList rank(const std::vector<std::pair<std::string, double>>& values);

/// Descending average-tie ranks, aligned with the input.
std::vector<double> rank_values(const std::vector<double>& values);

/// Pearson correlation of the two rank vectors (tie-correct). The lists
/// must cover the same handles; a constant list has no correlation.
double spearman(const RankList& x, const RankList& y);

/// Spearman over two aligned value vectors.
double spearman_values(const std::vector<double>& x, const std::vector<double>& y);

/// Per-column Spearman against the target, sorted by |rho| descending
/// (ties by feature name). Columns with no variation are omitted; a
/// constant target is an error.
std::vector<CorrelationEntry> correlation_report(const FeatureMatrix& features,
                                                 const std::vector<double>& target);

/// Per-bucket arithmetic feature means. Buckets with no rows are absent.
std::map<Bucket, std::map<std::string, double>> aggregate_by_bucket(
    const FeatureMatrix& features, const std::vector<BucketLabel>& labels);

/// CSV `feature,rho`.
void write_correlations_csv(const std::string& path,
                            const std::vector<CorrelationEntry>& entries);

std::string markdown_correlation_table(const std::vector<CorrelationEntry>& entries);

/// One row per present bucket, one column per requested feature.
std::string markdown_bucket_table(
    const std::map<Bucket, std::map<std::string, double>>& aggregates,
    const std::vector<std::string>& features);

} // namespace celebnet
