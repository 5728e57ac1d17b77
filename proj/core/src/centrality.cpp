#include "celebnet/centrality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <queue>
#include <thread>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"

namespace celebnet {

namespace {

// One Brandes source pass: accumulate dependency deltas for `s` into `acc`.
void brandes_source(const std::vector<std::vector<int>>& adj, int s, std::vector<double>& acc,
                    std::vector<int>& stack, std::vector<std::vector<int>>& pred,
                    std::vector<double>& sigma, std::vector<int>& dist,
                    std::vector<double>& delta) {
    const int n = static_cast<int>(adj.size());
    stack.clear();
    for (int i = 0; i < n; ++i) {
        pred[i].clear();
        sigma[i] = 0.0;
        dist[i] = -1;
        delta[i] = 0.0;
    }
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        stack.push_back(v);
        for (int w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
            if (dist[w] == dist[v] + 1) {
                sigma[w] += sigma[v];
                pred[w].push_back(v);
            }
        }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        int w = *it;
        for (int v : pred[w]) {
            delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (w != s) {
            acc[w] += delta[w];
        }
    }
}

// Sources are processed in fixed-size blocks, each block accumulating
// locally; blocks merge in index order, so the result does not depend on
// the worker count.
std::vector<double> betweenness_values(const EngagementGraph& graph) {
    const auto& adj = graph.adjacency();
    const int n = static_cast<int>(adj.size());
    std::vector<double> result(n, 0.0);
    if (n == 0) {
        return result;
    }

    constexpr int kBlock = 64;
    const int blocks = (n + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> block_acc(blocks, std::vector<double>(n, 0.0));

    std::atomic<int> next_block{0};
    auto worker = [&]() {
        std::vector<int> stack;
        std::vector<std::vector<int>> pred(n);
        std::vector<double> sigma(n);
        std::vector<int> dist(n);
        std::vector<double> delta(n);
        stack.reserve(n);
        for (;;) {
            int b = next_block.fetch_add(1);
            if (b >= blocks) {
                return;
            }
            int lo = b * kBlock;
            int hi = std::min(n, lo + kBlock);
            for (int s = lo; s < hi; ++s) {
                brandes_source(adj, s, block_acc[b], stack, pred, sigma, dist, delta);
            }
        }
    };

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(blocks));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (int b = 0; b < blocks; ++b) {
        for (int v = 0; v < n; ++v) {
            result[v] += block_acc[b][v];
        }
    }
    // Each unordered pair was seen from both endpoints.
    for (double& v : result) {
        v /= 2.0;
    }
    return result;
}

std::vector<double> closeness_values(const EngagementGraph& graph) {
    const auto& adj = graph.adjacency();
    const int n = static_cast<int>(adj.size());
    std::vector<double> result(n, 0.0);
    if (n <= 1) {
        return result;
    }
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        long long sum = 0;
        long long reached = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    sum += dist[w];
                    ++reached;
                    queue.push(w);
                }
            }
        }
        if (reached > 0) {
            double r = static_cast<double>(reached);
            result[s] = (r / (n - 1)) * (r / static_cast<double>(sum));
        }
    }
    return result;
}

std::vector<int> degree_values(const EngagementGraph& graph) {
    const auto& adj = graph.adjacency();
    std::vector<int> result(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
        result[v] = static_cast<int>(adj[v].size());
    }
    return result;
}

std::vector<double> clustering_values(const EngagementGraph& graph) {
    const auto& adj = graph.adjacency();
    const int n = static_cast<int>(adj.size());
    std::vector<double> result(n, 0.0);
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = adj[v];
        const int deg = static_cast<int>(nbrs.size());
        if (deg < 2) {
            continue;
        }
        long long triangles = 0;
        for (int i = 0; i < deg; ++i) {
            for (int j = i + 1; j < deg; ++j) {
                const auto& inner = adj[nbrs[i]];
                if (std::binary_search(inner.begin(), inner.end(), nbrs[j])) {
                    ++triangles;
                }
            }
        }
        double pairs = 0.5 * deg * (deg - 1);
        result[v] = static_cast<double>(triangles) / pairs;
    }
    return result;
}

struct PagerankValues {
    std::vector<double> scores;
    bool converged = true;
    int iterations = 0;
};

PagerankValues pagerank_values(const EngagementGraph& graph, const PagerankOptions& options) {
    const auto& adj = graph.adjacency();
    const auto& weights = graph.adjacency_weights();
    const int n = static_cast<int>(adj.size());
    PagerankValues out;
    out.scores.assign(n, 0.0);
    if (n == 0) {
        return out;
    }

    std::vector<double> strength(n, 0.0);
    for (int v = 0; v < n; ++v) {
        if (options.weighted) {
            for (double w : weights[v]) {
                strength[v] += w;
            }
        } else {
            strength[v] = static_cast<double>(adj[v].size());
        }
    }

    std::vector<double> rank(n, 1.0 / n);
    std::vector<double> next(n, 0.0);
    const double base = (1.0 - options.damping) / n;
    out.converged = false;
    for (int iter = 0; iter < options.max_iter; ++iter) {
        double dangling = 0.0;
        for (int v = 0; v < n; ++v) {
            if (strength[v] <= 0.0) {
                dangling += rank[v];
            }
        }
        std::fill(next.begin(), next.end(), base + options.damping * dangling / n);
        for (int v = 0; v < n; ++v) {
            if (strength[v] <= 0.0) {
                continue;
            }
            const double share = options.damping * rank[v] / strength[v];
            const auto& nbrs = adj[v];
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                next[nbrs[i]] += share * (options.weighted ? weights[v][i] : 1.0);
            }
        }
        double change = 0.0;
        for (int v = 0; v < n; ++v) {
            change += std::fabs(next[v] - rank[v]);
        }
        rank.swap(next);
        out.iterations = iter + 1;
        if (change < options.tol) {
            out.converged = true;
            break;
        }
    }
    out.scores = std::move(rank);
    return out;
}

template <typename T>
std::unordered_map<std::string, T> to_map(const EngagementGraph& graph,
                                          const std::vector<T>& values) {
    std::unordered_map<std::string, T> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.emplace(graph.nodes()[i], values[i]);
    }
    return out;
}

} // namespace

std::unordered_map<std::string, double> betweenness(const EngagementGraph& graph) {
    return to_map(graph, betweenness_values(graph));
}

std::unordered_map<std::string, double> closeness(const EngagementGraph& graph) {
    return to_map(graph, closeness_values(graph));
}

std::unordered_map<std::string, int> degree(const EngagementGraph& graph) {
    return to_map(graph, degree_values(graph));
}

std::unordered_map<std::string, double> clustering_coefficient(const EngagementGraph& graph) {
    return to_map(graph, clustering_values(graph));
}

PagerankResult pagerank(const EngagementGraph& graph, const PagerankOptions& options) {
    PagerankValues values = pagerank_values(graph, options);
    PagerankResult out;
    out.converged = values.converged;
    out.iterations = values.iterations;
    out.scores = to_map(graph, values.scores);
    return out;
}

std::vector<CentralityVector> centrality_report(const EngagementGraph& graph,
                                                const PagerankOptions& pr_options) {
    const auto bet = betweenness_values(graph);
    const auto clo = closeness_values(graph);
    const auto deg = degree_values(graph);
    const auto clust = clustering_values(graph);
    const auto pr = pagerank_values(graph, pr_options);

    std::vector<CentralityVector> rows;
    rows.reserve(graph.node_count());
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        CentralityVector row;
        row.handle = graph.nodes()[i];
        row.c_bet = bet[i];
        row.c_clo = clo[i];
        row.c_deg = deg[i];
        row.clust_coff = clust[i];
        row.c_pr = pr.scores[i];
        rows.push_back(std::move(row));
    }
    // Node order is already lexicographic; keep the contract explicit.
    std::sort(rows.begin(), rows.end(),
              [](const CentralityVector& a, const CentralityVector& b) {
                  return a.handle < b.handle;
              });
    return rows;
}

void write_centrality_csv(const std::string& path, const std::vector<CentralityVector>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    write_csv_row(out, {"handle", "c_bet", "c_clo", "c_deg", "clust_coff", "c_pr"});
    for (const auto& row : rows) {
        write_csv_row(out, {row.handle, format_double(row.c_bet), format_double(row.c_clo),
                            std::to_string(row.c_deg), format_double(row.clust_coff),
                            format_double(row.c_pr)});
    }
}

} // namespace celebnet
