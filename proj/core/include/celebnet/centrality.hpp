#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "celebnet/engagement_graph.hpp"

namespace celebnet {

/// The five per-node network measures, bundled for export.
struct CentralityVector {
    std::string handle;
    double c_bet = 0.0;
    double c_clo = 0.0;
    int c_deg = 0;
    double clust_coff = 0.0;
    double c_pr = 0.0;
};

struct PagerankOptions {
    double damping = 0.85;
    double tol = 1e-10;
    int max_iter = 200;
    // Treat edge weights as arc strengths instead of plain topology.
    bool weighted = false;
};

struct PagerankResult {
    std::unordered_map<std::string, double> scores;
    bool converged = true;
    int iterations = 0;
};

/// Brandes betweenness on the unweighted topology, unnormalized, each
/// unordered pair counted once.
std::unordered_map<std::string, double> betweenness(const EngagementGraph& graph);

/// Wasserman-Faust component-adjusted closeness:
/// (r / (n - 1)) * (r / s) with r reachable nodes at total distance s.
/// Nodes that reach nothing score 0.
std::unordered_map<std::string, double> closeness(const EngagementGraph& graph);

/// Raw incident-edge count.
std::unordered_map<std::string, int> degree(const EngagementGraph& graph);

/// Local clustering coefficient: triangles / C(deg, 2), 0 below degree 2.
std::unordered_map<std::string, double> clustering_coefficient(const EngagementGraph& graph);

/// Power iteration with uniform dangling redistribution. Scores sum to 1.
/// `converged` is false when max_iter passes without the L1 change
/// dropping below tol; the last iterate is still returned.
PagerankResult pagerank(const EngagementGraph& graph, const PagerankOptions& options = {});

/// One row per node, ordered lexicographically by handle.
std::vector<CentralityVector> centrality_report(const EngagementGraph& graph,
                                                const PagerankOptions& pr_options = {});

/// CSV `handle,c_bet,c_clo,c_deg,clust_coff,c_pr`, 10 significant digits.
void write_centrality_csv(const std::string& path, const std::vector<CentralityVector>& rows);

} // namespace celebnet
