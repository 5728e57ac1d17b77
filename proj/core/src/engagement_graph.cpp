#include "celebnet/engagement_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>

#include <nlohmann/json.hpp>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"

namespace celebnet {

const char* to_string(GraphFlavor flavor) {
    return flavor == GraphFlavor::Retweet ? "retweet" : "mention";
}

EngagementGraph::EngagementGraph(GraphFlavor flavor, int threshold,
                                 std::vector<std::string> nodes,
                                 std::vector<GraphEdge> edges)
    : flavor_(flavor), threshold_(threshold), nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        index_.emplace(nodes_[i], static_cast<int>(i));
    }
    for (GraphEdge& e : edges_) {
        if (e.source > e.target) {
            std::swap(e.source, e.target);
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    adjacency_.assign(nodes_.size(), {});
    adjacency_weights_.assign(nodes_.size(), {});
    for (const GraphEdge& e : edges_) {
        const int u = node_index(e.source);
        const int v = node_index(e.target);
        if (u < 0 || v < 0) {
            throw ValidationError("graph edge endpoint missing from node list: " +
                                  e.source + "-" + e.target);
        }
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
        adjacency_weights_[static_cast<std::size_t>(u)].push_back(e.weight);
        adjacency_weights_[static_cast<std::size_t>(v)].push_back(e.weight);
    }
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        std::vector<std::size_t> order(adjacency_[v].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return adjacency_[v][a] < adjacency_[v][b];
        });
        std::vector<int> nbr(order.size());
        std::vector<double> wts(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            nbr[i] = adjacency_[v][order[i]];
            wts[i] = adjacency_weights_[v][order[i]];
        }
        adjacency_[v] = std::move(nbr);
        adjacency_weights_[v] = std::move(wts);
    }
}

int EngagementGraph::node_index(const std::string& handle) const {
    auto it = index_.find(handle);
    return it == index_.end() ? -1 : it->second;
}

namespace {

using PairKey = std::uint64_t;

PairKey pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

EngagementGraph finalize_graph(
    GraphFlavor flavor, int threshold, const std::vector<std::string>& handles,
    const std::unordered_map<PairKey, std::int64_t>& pair_counts) {
    std::vector<GraphEdge> edges;
    std::int64_t total = 0;
    for (const auto& [key, count] : pair_counts) {
        if (count >= threshold) {
            total += count;
        }
    }
    std::set<std::string> connected;
    for (const auto& [key, count] : pair_counts) {
        if (count < threshold) continue;
        const auto a = static_cast<int>(key >> 32);
        const auto b = static_cast<int>(key & 0xffffffffu);
        GraphEdge e;
        e.source = handles[static_cast<std::size_t>(a)];
        e.target = handles[static_cast<std::size_t>(b)];
        e.raw_count = count;
        e.weight = static_cast<double>(count) / static_cast<double>(total);
        connected.insert(e.source);
        connected.insert(e.target);
        edges.push_back(std::move(e));
    }
    std::vector<std::string> nodes(connected.begin(), connected.end());
    return EngagementGraph(flavor, threshold, std::move(nodes), std::move(edges));
}

} // namespace

EngagementGraph build_retweet_graph(const Corpus& corpus, const GraphOptions& options) {
    if (corpus.roster.empty()) {
        throw ValidationError("cannot build a graph over an empty roster");
    }
    if (options.threshold < 1) {
        throw ValidationError("graph threshold must be >= 1");
    }
    std::unordered_map<std::string, int> celeb_index;
    std::vector<std::string> handles;
    handles.reserve(corpus.roster.size());
    for (const CelebrityProfile& p : corpus.roster) {
        celeb_index.emplace(p.handle, static_cast<int>(handles.size()));
        handles.push_back(p.handle);
    }

    // Engager -> set of celebrities they retweeted at least once.
    std::unordered_map<std::string, std::set<int>> engaged;
    for (const TweetRecord& t : corpus.tweets) {
        if (!t.retweet_of) continue;
        if (*t.retweet_of == t.author) continue;  // self-engagement ignored
        auto it = celeb_index.find(*t.retweet_of);
        if (it == celeb_index.end()) continue;
        engaged[t.author].insert(it->second);
    }

    std::unordered_map<PairKey, std::int64_t> pair_counts;
    for (const auto& [user, celebs] : engaged) {
        for (auto a = celebs.begin(); a != celebs.end(); ++a) {
            for (auto b = std::next(a); b != celebs.end(); ++b) {
                ++pair_counts[pair_key(*a, *b)];
            }
        }
    }
    return finalize_graph(GraphFlavor::Retweet, options.threshold, handles, pair_counts);
}

EngagementGraph build_mention_graph(const Corpus& corpus, const GraphOptions& options) {
    if (corpus.roster.empty()) {
        throw ValidationError("cannot build a graph over an empty roster");
    }
    if (options.threshold < 1) {
        throw ValidationError("graph threshold must be >= 1");
    }
    std::unordered_map<std::string, int> celeb_index;
    std::vector<std::string> handles;
    handles.reserve(corpus.roster.size());
    for (const CelebrityProfile& p : corpus.roster) {
        celeb_index.emplace(p.handle, static_cast<int>(handles.size()));
        handles.push_back(p.handle);
    }

    // Per engager and mentioned celebrity: how many distinct tweets carried
    // the mention, and the id of the single tweet when there is only one.
    // That is enough to decide the distinct-tweets reading per pair.
    struct MentionTrace {
        int tweet_count = 0;
        std::string only_tweet;
    };
    std::unordered_map<std::string, std::map<int, MentionTrace>> engaged;
    for (const TweetRecord& t : corpus.tweets) {
        if (!options.include_roster_engagers && corpus.in_roster(t.author)) {
            continue;  // mentioner pool is non-roster users by default
        }
        std::set<int> mentioned_here;
        for (const std::string& m : t.mentions) {
            if (m == t.author) continue;  // self-engagement ignored
            auto it = celeb_index.find(m);
            if (it == celeb_index.end()) continue;
            mentioned_here.insert(it->second);
        }
        for (int celeb : mentioned_here) {
            MentionTrace& trace = engaged[t.author][celeb];
            ++trace.tweet_count;
            trace.only_tweet = trace.tweet_count == 1 ? t.id : std::string();
        }
    }

    std::unordered_map<PairKey, std::int64_t> pair_counts;
    for (const auto& [user, traces] : engaged) {
        for (auto a = traces.begin(); a != traces.end(); ++a) {
            for (auto b = std::next(a); b != traces.end(); ++b) {
                if (options.distinct_tweets && a->second.tweet_count == 1 &&
                    b->second.tweet_count == 1 &&
                    a->second.only_tweet == b->second.only_tweet) {
                    continue;  // both mentions live in one and the same tweet
                }
                ++pair_counts[pair_key(a->first, b->first)];
            }
        }
    }
    return finalize_graph(GraphFlavor::Mention, options.threshold, handles, pair_counts);
}

EngagementGraph graph_from_counts(
    GraphFlavor flavor, int threshold,
    const std::vector<std::tuple<std::string, std::string, std::int64_t>>& pair_counts,
    const std::vector<std::string>& extra_nodes) {
    std::set<std::string> node_set(extra_nodes.begin(), extra_nodes.end());
    std::vector<GraphEdge> edges;
    std::int64_t total = 0;
    for (const auto& [a, b, count] : pair_counts) {
        if (a == b) {
            throw ValidationError("self-loop in pair counts: " + a);
        }
        if (count >= threshold) {
            total += count;
        }
    }
    for (const auto& [a, b, count] : pair_counts) {
        if (count < threshold) continue;
        GraphEdge e;
        e.source = a;
        e.target = b;
        e.raw_count = count;
        e.weight = static_cast<double>(count) / static_cast<double>(total);
        node_set.insert(a);
        node_set.insert(b);
        edges.push_back(std::move(e));
    }
    std::vector<std::string> nodes(node_set.begin(), node_set.end());
    return EngagementGraph(flavor, threshold, std::move(nodes), std::move(edges));
}

std::set<std::string> common_nodes(const EngagementGraph& g1, const EngagementGraph& g2) {
    std::set<std::string> result;
    for (const std::string& handle : g1.nodes()) {
        if (g2.node_index(handle) >= 0) {
            result.insert(handle);
        }
    }
    return result;
}

void write_graph_csv(const EngagementGraph& graph, const std::string& csv_path) {
    std::ofstream out(csv_path);
    if (!out) {
        throw IoError("cannot write graph csv: " + csv_path);
    }
    out << "source,target,raw_count,weight\n";
    for (const GraphEdge& e : graph.edges()) {
        write_csv_row(out, {e.source, e.target, std::to_string(e.raw_count),
                            format_double(e.weight, "%.12g")});
    }
}

void write_graph_header_json(const EngagementGraph& graph, const std::string& json_path) {
    std::ofstream out(json_path);
    if (!out) {
        throw IoError("cannot write graph header: " + json_path);
    }
    nlohmann::json j;
    j["flavor"] = to_string(graph.flavor());
    j["threshold"] = graph.threshold();
    j["node_count"] = graph.node_count();
    j["edge_count"] = graph.edge_count();
    out << j.dump(2) << '\n';
}

} // namespace celebnet
