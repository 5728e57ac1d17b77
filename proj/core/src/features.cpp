#include "celebnet/features.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <unordered_map>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"

namespace celebnet {

namespace {

std::string lowercased(const std::string& text) {
    std::string out = text;
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace

const char* to_string(Bucket bucket) {
    switch (bucket) {
    case Bucket::High:
        return "HIGH";
    case Bucket::Mid:
        return "MID";
    case Bucket::Low:
        return "LOW";
    }
    return "LOW";
}

Bucket bucket_from_string(const std::string& name) {
    if (name == "HIGH") {
        return Bucket::High;
    }
    if (name == "MID") {
        return Bucket::Mid;
    }
    if (name == "LOW") {
        return Bucket::Low;
    }
    throw ValidationError("unknown bucket: " + name);
}

int FeatureMatrix::column_index(const std::string& name) const {
    auto it = std::find(feature_names.begin(), feature_names.end(), name);
    if (it == feature_names.end()) {
        return -1;
    }
    return static_cast<int>(it - feature_names.begin());
}

std::vector<std::string> eligible_handles(const EngagementGraph& retweet_graph,
                                          const EngagementGraph& mention_graph,
                                          const std::vector<LinguisticProfile>& profiles) {
    const std::set<std::string> shared = common_nodes(retweet_graph, mention_graph);
    std::vector<std::string> handles;
    for (const LinguisticProfile& profile : profiles) {
        if (shared.count(profile.handle) > 0) {
            handles.push_back(profile.handle);
        }
    }
    std::sort(handles.begin(), handles.end());
    return handles;
}

FeatureMatrix assemble_features(const std::vector<CentralityVector>& retweet_report,
                                const std::vector<CentralityVector>& mention_report,
                                const std::vector<LinguisticProfile>& profiles,
                                const std::vector<std::string>& handles) {
    std::unordered_map<std::string, const CentralityVector*> retweet_by_handle;
    for (const CentralityVector& row : retweet_report) {
        retweet_by_handle.emplace(row.handle, &row);
    }
    std::unordered_map<std::string, const CentralityVector*> mention_by_handle;
    for (const CentralityVector& row : mention_report) {
        mention_by_handle.emplace(row.handle, &row);
    }
    std::unordered_map<std::string, const LinguisticProfile*> profile_by_handle;
    for (const LinguisticProfile& profile : profiles) {
        profile_by_handle.emplace(profile.handle, &profile);
    }

    FeatureMatrix matrix;
    matrix.handles = handles;
    for (const char* prefix : {"rt_", "men_"}) {
        for (const char* measure : {"c_bet", "c_clo", "c_deg", "clust_coff", "c_pr"}) {
            matrix.feature_names.push_back(std::string(prefix) + measure);
        }
    }
    std::vector<std::string> categories;
    if (!profiles.empty()) {
        for (const auto& [category, density] : profiles.front().category_density) {
            categories.push_back(category);
            matrix.feature_names.push_back("liwc_" + lowercased(category));
        }
    }
    const char* tail[] = {"in_vocab", "sent_pos", "sent_neg", "sent_neu", "sent_comp",
                          "pos_entropy", "ttr", "cpw", "wps", "p1", "p2", "p3", "it", "ari"};
    matrix.feature_names.insert(matrix.feature_names.end(), std::begin(tail), std::end(tail));

    matrix.values.reserve(handles.size());
    for (const std::string& handle : handles) {
        auto rt = retweet_by_handle.find(handle);
        auto men = mention_by_handle.find(handle);
        auto prof = profile_by_handle.find(handle);
        if (rt == retweet_by_handle.end() || men == mention_by_handle.end() ||
            prof == profile_by_handle.end()) {
            throw ValidationError("no features for handle: " + handle);
        }
        std::vector<double> row;
        row.reserve(matrix.feature_names.size());
        for (const CentralityVector* c : {rt->second, men->second}) {
            row.push_back(c->c_bet);
            row.push_back(c->c_clo);
            row.push_back(static_cast<double>(c->c_deg));
            row.push_back(c->clust_coff);
            row.push_back(c->c_pr);
        }
        const LinguisticProfile& p = *prof->second;
        for (const std::string& category : categories) {
            auto it = p.category_density.find(category);
            if (it == p.category_density.end()) {
                throw ValidationError("profile for " + handle + " lacks category " + category);
            }
            row.push_back(it->second);
        }
        for (double value :
             {p.in_vocab_proportion, p.sentiment.pos, p.sentiment.neg, p.sentiment.neu,
              p.sentiment.comp, p.pos_entropy, p.style.ttr, p.style.cpw, p.style.wps,
              p.style.p1, p.style.p2, p.style.p3, p.style.it, p.ari}) {
            row.push_back(value);
        }
        matrix.values.push_back(std::move(row));
    }
    return matrix;
}

FeatureMatrix select_columns(const FeatureMatrix& matrix,
                             const std::vector<std::string>& names) {
    std::vector<int> indices;
    indices.reserve(names.size());
    for (const std::string& name : names) {
        int index = matrix.column_index(name);
        if (index < 0) {
            throw ValidationError("unknown feature column: " + name);
        }
        indices.push_back(index);
    }
    FeatureMatrix out;
    out.handles = matrix.handles;
    out.feature_names = names;
    out.values.reserve(matrix.values.size());
    for (const auto& row : matrix.values) {
        std::vector<double> selected;
        selected.reserve(indices.size());
        for (int index : indices) {
            selected.push_back(row[index]);
        }
        out.values.push_back(std::move(selected));
    }
    return out;
}

std::vector<double> follower_targets(const FeatureMatrix& matrix,
                                     const std::vector<CelebrityProfile>& roster) {
    std::unordered_map<std::string, double> followers;
    followers.reserve(roster.size());
    for (const CelebrityProfile& profile : roster) {
        followers.emplace(profile.handle, static_cast<double>(profile.followers_future));
    }
    std::vector<double> targets;
    targets.reserve(matrix.handles.size());
    for (const std::string& handle : matrix.handles) {
        auto it = followers.find(handle);
        if (it == followers.end()) {
            throw ValidationError("handle not in roster: " + handle);
        }
        targets.push_back(it->second);
    }
    return targets;
}

std::vector<Bucket> align_labels(const FeatureMatrix& matrix,
                                 const std::vector<BucketLabel>& labels) {
    std::unordered_map<std::string, Bucket> by_handle;
    by_handle.reserve(labels.size());
    for (const BucketLabel& label : labels) {
        by_handle.emplace(label.handle, label.bucket);
    }
    std::vector<Bucket> aligned;
    aligned.reserve(matrix.handles.size());
    for (const std::string& handle : matrix.handles) {
        auto it = by_handle.find(handle);
        if (it == by_handle.end()) {
            throw ValidationError("no bucket label for handle: " + handle);
        }
        aligned.push_back(it->second);
    }
    return aligned;
}

void write_features_csv(const std::string& path, const FeatureMatrix& matrix) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    std::vector<std::string> header{"handle"};
    header.insert(header.end(), matrix.feature_names.begin(), matrix.feature_names.end());
    write_csv_row(out, header);
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        std::vector<std::string> row{matrix.handles[i]};
        for (double value : matrix.values[i]) {
            row.push_back(format_double(value));
        }
        write_csv_row(out, row);
    }
}

} // namespace celebnet
