#pragma once

#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "celebnet/engagement_graph.hpp"
#include "celebnet/rng.hpp"

namespace benchutil {

inline std::string node_name(int i) {
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "n%04d", i);
    return buffer;
}

inline celebnet::EngagementGraph random_graph(int n, double edge_prob, std::uint64_t seed) {
    celebnet::Rng rng(seed);
    std::vector<std::tuple<std::string, std::string, std::int64_t>> counts;
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) {
        nodes.push_back(node_name(i));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.unit() < edge_prob) {
                counts.emplace_back(nodes[static_cast<std::size_t>(i)],
                                    nodes[static_cast<std::size_t>(j)],
                                    1 + static_cast<std::int64_t>(rng.below(9)));
            }
        }
    }
    return celebnet::graph_from_counts(celebnet::GraphFlavor::Retweet, 1, counts, nodes);
}

} // namespace benchutil
