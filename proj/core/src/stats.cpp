#include "celebnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"
#include "celebnet/markdown.hpp"

namespace celebnet {

namespace {

// Both rank vectors of a common length n have mean (n + 1) / 2 exactly
// (tied ranks average the positions they span), so centering uses the
// analytic mean; identical and reversed orderings then come out at
// exactly +1 and -1.
double pearson_on_ranks(const std::vector<double>& a, const std::vector<double>& b) {
    const double mean = (static_cast<double>(a.size()) + 1.0) / 2.0;
    double num = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean;
        const double db = b[i] - mean;
        num += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) {
        throw UndefinedError("correlation of a constant list");
    }
    return std::clamp(num / std::sqrt(var_a * var_b), -1.0, 1.0);
}

} // namespace

std::vector<double> rank_values(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // Positions i..j (0-based) share the average of ranks i+1..j+1.
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

RankList rank(const std::vector<std::pair<std::string, double>>& values) {
    RankList list;
    list.entries = values;
    std::vector<double> bare;
    bare.reserve(values.size());
    for (const auto& [handle, value] : values) {
        bare.push_back(value);
    }
    list.ranks = rank_values(bare);
    return list;
}

double spearman(const RankList& x, const RankList& y) {
    if (x.entries.size() != y.entries.size()) {
        throw ValidationError("rank lists differ in size");
    }
    if (x.entries.size() < 2) {
        throw ValidationError("correlation needs at least two entries");
    }
    std::unordered_map<std::string, double> y_rank;
    y_rank.reserve(y.entries.size());
    for (std::size_t i = 0; i < y.entries.size(); ++i) {
        if (!y_rank.emplace(y.entries[i].first, y.ranks[i]).second) {
            throw ValidationError("duplicate handle in rank list: " + y.entries[i].first);
        }
    }
    std::unordered_set<std::string> seen;
    std::vector<double> rx;
    std::vector<double> ry;
    rx.reserve(x.entries.size());
    ry.reserve(x.entries.size());
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        const std::string& handle = x.entries[i].first;
        if (!seen.insert(handle).second) {
            throw ValidationError("duplicate handle in rank list: " + handle);
        }
        auto it = y_rank.find(handle);
        if (it == y_rank.end()) {
            throw ValidationError("handle missing from second rank list: " + handle);
        }
        rx.push_back(x.ranks[i]);
        ry.push_back(it->second);
    }
    return pearson_on_ranks(rx, ry);
}

double spearman_values(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw ValidationError("value lists differ in size");
    }
    if (x.size() < 2) {
        throw ValidationError("correlation needs at least two entries");
    }
    return pearson_on_ranks(rank_values(x), rank_values(y));
}

std::vector<CorrelationEntry> correlation_report(const FeatureMatrix& features,
                                                 const std::vector<double>& target) {
    if (target.size() != features.rows()) {
        throw ValidationError("target length does not match matrix rows");
    }
    if (target.size() < 2) {
        throw ValidationError("correlation needs at least two rows");
    }
    const std::vector<double> target_ranks = rank_values(target);
    if (std::all_of(target.begin(), target.end(),
                    [&](double v) { return v == target.front(); })) {
        throw UndefinedError("correlation of a constant target");
    }

    std::vector<CorrelationEntry> entries;
    std::vector<double> column(features.rows());
    for (std::size_t c = 0; c < features.cols(); ++c) {
        for (std::size_t r = 0; r < features.rows(); ++r) {
            column[r] = features.values[r][c];
        }
        if (std::all_of(column.begin(), column.end(),
                        [&](double v) { return v == column.front(); })) {
            continue;
        }
        entries.push_back(
            {features.feature_names[c], pearson_on_ranks(rank_values(column), target_ranks)});
    }
    std::sort(entries.begin(), entries.end(),
              [](const CorrelationEntry& a, const CorrelationEntry& b) {
                  const double am = std::fabs(a.rho);
                  const double bm = std::fabs(b.rho);
                  if (am != bm) {
                      return am > bm;
                  }
                  return a.feature < b.feature;
              });
    return entries;
}

std::map<Bucket, std::map<std::string, double>> aggregate_by_bucket(
    const FeatureMatrix& features, const std::vector<BucketLabel>& labels) {
    const std::vector<Bucket> aligned = align_labels(features, labels);
    std::map<Bucket, std::vector<double>> sums;
    std::map<Bucket, long long> counts;
    for (std::size_t r = 0; r < features.rows(); ++r) {
        auto& sum = sums[aligned[r]];
        sum.resize(features.cols(), 0.0);
        for (std::size_t c = 0; c < features.cols(); ++c) {
            sum[c] += features.values[r][c];
        }
        ++counts[aligned[r]];
    }
    std::map<Bucket, std::map<std::string, double>> means;
    for (const auto& [bucket, sum] : sums) {
        auto& per_feature = means[bucket];
        for (std::size_t c = 0; c < features.cols(); ++c) {
            per_feature.emplace(features.feature_names[c],
                                sum[c] / static_cast<double>(counts[bucket]));
        }
    }
    return means;
}

void write_correlations_csv(const std::string& path,
                            const std::vector<CorrelationEntry>& entries) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    write_csv_row(out, {"feature", "rho"});
    for (const CorrelationEntry& entry : entries) {
        write_csv_row(out, {entry.feature, format_double(entry.rho)});
    }
}

std::string markdown_correlation_table(const std::vector<CorrelationEntry>& entries) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(entries.size());
    for (const CorrelationEntry& entry : entries) {
        rows.push_back({entry.feature, format_double(entry.rho, "%.4f")});
    }
    return markdown_table({"Feature", "Spearman rho"}, rows);
}

std::string markdown_bucket_table(
    const std::map<Bucket, std::map<std::string, double>>& aggregates,
    const std::vector<std::string>& features) {
    std::vector<std::string> headers{"Bucket"};
    headers.insert(headers.end(), features.begin(), features.end());
    std::vector<std::vector<std::string>> rows;
    for (const auto& [bucket, means] : aggregates) {
        std::vector<std::string> row{to_string(bucket)};
        for (const std::string& feature : features) {
            auto it = means.find(feature);
            row.push_back(it == means.end() ? "-" : format_double(it->second, "%.4f"));
        }
        rows.push_back(std::move(row));
    }
    return markdown_table(headers, rows);
}

} // namespace celebnet
