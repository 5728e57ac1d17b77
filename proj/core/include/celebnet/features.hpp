#pragma once

#include <string>
#include <vector>

#include "celebnet/centrality.hpp"
#include "celebnet/engagement_graph.hpp"
#include "celebnet/linguistic.hpp"

namespace celebnet {

// Declaration order doubles as the tie-break order everywhere.
enum class Bucket { High, Mid, Low };

const char* to_string(Bucket bucket);
Bucket bucket_from_string(const std::string& name);

struct BucketLabel {
    std::string handle;
    Bucket bucket;
};

struct FeatureMatrix {
    std::vector<std::string> handles;
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> values; // one row per handle, no gaps

    std::size_t rows() const { return handles.size(); }
    std::size_t cols() const { return feature_names.size(); }

    /// Column position, or -1.
    int column_index(const std::string& name) const;
};

/// Handles present in both graphs and carrying a linguistic profile,
/// sorted.
std::vector<std::string> eligible_handles(const EngagementGraph& retweet_graph,
                                          const EngagementGraph& mention_graph,
                                          const std::vector<LinguisticProfile>& profiles);

/// One row per handle. Columns: rt_/men_-prefixed centrality measures
/// (c_bet, c_clo, c_deg, clust_coff, c_pr), then liwc_<category>, then
/// in_vocab, sent_pos, sent_neg, sent_neu, sent_comp, pos_entropy, ttr,
/// cpw, wps, p1, p2, p3, it, ari. Every handle must appear in both reports
/// and in the profiles.
FeatureMatrix assemble_features(const std::vector<CentralityVector>& retweet_report,
                                const std::vector<CentralityVector>& mention_report,
                                const std::vector<LinguisticProfile>& profiles,
                                const std::vector<std::string>& handles);

/// Column subset in the given order; unknown names are an error.
FeatureMatrix select_columns(const FeatureMatrix& matrix,
                             const std::vector<std::string>& names);

/// Follower counts aligned with the matrix rows.
std::vector<double> follower_targets(const FeatureMatrix& matrix,
                                     const std::vector<CelebrityProfile>& roster);

/// Bucket per matrix row; every handle must be labeled.
std::vector<Bucket> align_labels(const FeatureMatrix& matrix,
                                 const std::vector<BucketLabel>& labels);

/// CSV `handle,<feature...>` with 10 significant digits.
void write_features_csv(const std::string& path, const FeatureMatrix& matrix);

} // namespace celebnet
