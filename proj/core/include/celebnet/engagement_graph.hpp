#pragma once

#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "celebnet/corpus.hpp"

namespace celebnet {

enum class GraphFlavor { Retweet, Mention };

const char* to_string(GraphFlavor flavor);

struct GraphEdge {
    std::string source;  // lexicographically smaller endpoint
    std::string target;
    std::int64_t raw_count;  // common engagers, >= threshold
    double weight;           // raw_count / sum of raw_count over edges
};

/// Undirected co-engagement network over the roster. Nodes are celebrities
/// with at least one incident edge; an edge exists when at least
/// `threshold` distinct users engaged with both endpoints. Edge weights are
/// normalized over the edges that pass the threshold and sum to 1.
class EngagementGraph {
public:
    /// Empty retweet-flavored graph.
    EngagementGraph() = default;

    EngagementGraph(GraphFlavor flavor, int threshold, std::vector<std::string> nodes,
                    std::vector<GraphEdge> edges);

    GraphFlavor flavor() const { return flavor_; }
    int threshold() const { return threshold_; }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Index of a handle in nodes(), or -1.
    int node_index(const std::string& handle) const;

    /// Sorted neighbor indices per node.
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

    /// Edge weights aligned with adjacency().
    const std::vector<std::vector<double>>& adjacency_weights() const {
        return adjacency_weights_;
    }

private:
    GraphFlavor flavor_ = GraphFlavor::Retweet;
    int threshold_ = 0;
    std::vector<std::string> nodes_;
    std::vector<GraphEdge> edges_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<double>> adjacency_weights_;
};

struct GraphOptions {
    int threshold = 5;
    // Stricter mention reading: the two mentions must come from two
    // distinct tweets of the engaging user.
    bool distinct_tweets = false;
    // Let roster members count as mention engagers of other celebrities.
    bool include_roster_engagers = false;
};

EngagementGraph build_retweet_graph(const Corpus& corpus, const GraphOptions& options = {});
EngagementGraph build_mention_graph(const Corpus& corpus, const GraphOptions& options = {});

/// Builds a graph directly from raw pair counts; entries below the
/// threshold are dropped and weights renormalized. Node set is inferred
/// from surviving edges unless `extra_nodes` adds isolated ones (tests use
/// this for centrality edge cases).
EngagementGraph graph_from_counts(
    GraphFlavor flavor, int threshold,
    const std::vector<std::tuple<std::string, std::string, std::int64_t>>& pair_counts,
    const std::vector<std::string>& extra_nodes = {});

std::set<std::string> common_nodes(const EngagementGraph& g1, const EngagementGraph& g2);

/// Edge list as `source,target,raw_count,weight` rows, lexicographic by
/// (source, target), plus a JSON sidecar with flavor/threshold/counts.
void write_graph_csv(const EngagementGraph& graph, const std::string& csv_path);
void write_graph_header_json(const EngagementGraph& graph, const std::string& json_path);

} // namespace celebnet
