#include "slocal/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slocal/errors.hpp"

namespace slocal {

namespace {

int floor_log2(int n) {
    int r = 0;
    while ((1 << (r + 1)) <= n) ++r;
    return r;
}

}  // namespace

std::vector<std::vector<int>> NetworkDecomposition::clusters() const {
    std::vector<std::vector<int>> out(cluster_count());
    for (int v = 0; v < static_cast<int>(cluster_of.size()); ++v) {
        if (cluster_of[v] < 0 || cluster_of[v] >= cluster_count())
            throw InvariantViolation("node " + std::to_string(v) + " has no valid cluster");
        out[cluster_of[v]].push_back(v);
    }
    return out;
}

int NetworkDecomposition::max_weak_diameter() const {
    int d = 0;
    for (int x : weak_diameter) d = std::max(d, x);
    return d;
}

void NetworkDecomposition::measure_weak_diameters(const Graph& g) {
    auto members = clusters();
    weak_diameter.assign(cluster_count(), 0);
    for (int c = 0; c < cluster_count(); ++c) {
        int best = 0;
        for (int v : members[c]) {
            auto dist = g.distances_from(v);
            for (int u : members[c]) {
                if (dist[u] < 0)
                    throw InvariantViolation("cluster " + std::to_string(c) +
                                             " spans disconnected nodes");
                best = std::max(best, dist[u]);
            }
        }
        weak_diameter[c] = best;
    }
}

nlohmann::json NetworkDecomposition::to_json() const {
    nlohmann::json clusters_json = nlohmann::json::array();
    auto members = clusters();
    for (int c = 0; c < cluster_count(); ++c) {
        clusters_json.push_back({{"id", c},
                                 {"color", color_of_cluster[c]},
                                 {"nodes", members[c]},
                                 {"weak_diameter",
                                  c < static_cast<int>(weak_diameter.size()) ? weak_diameter[c] : -1}});
    }
    return {{"colors", num_colors},
            {"base_graph_radius", base_graph_radius},
            {"clusters", std::move(clusters_json)}};
}

NetworkDecomposition ball_growing_decomposition(const Graph& g) {
    int n = g.node_count();
    if (n < 1) throw InvalidArgument("decomposition needs n >= 1");
    int log2n = floor_log2(n);

    NetworkDecomposition out;
    out.cluster_of.assign(n, -1);
    out.base_graph_radius = 1;

    std::vector<char> unclustered(n, 1);
    int remaining = n;

    // Scratch for layered BFS over the in-block subgraph.
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);

    int color = 0;
    while (remaining > 0) {
        ++color;
        if (color > log2n + 1)
            throw InvariantViolation("ball growing used more than floor(log2 n)+1 colors");
        std::vector<char> inblock(unclustered);
        int before = remaining;
        for (int v = 0; v < n; ++v) {
            if (!inblock[v]) continue;
            // Grow a ball around v inside the in-block subgraph, layer by
            // layer, until |B_{r+1}| <= 2 |B_r|.
            queue.clear();
            queue.push_back(v);
            dist[v] = 0;
            std::size_t layer_start = 0, layer_end = 1;
            long long ball_prev = 1;  // |B_r| for the last completed radius r
            int radius = 0;           // current completed radius
            int rstar = -1;
            while (true) {
                // Expand to radius+1.
                std::size_t next_end = layer_end;
                for (std::size_t i = layer_start; i < layer_end; ++i) {
                    for (int w : g.neighbors(queue[i])) {
                        if (inblock[w] && dist[w] < 0) {
                            dist[w] = radius + 1;
                            queue.push_back(w);
                            ++next_end;
                        }
                    }
                }
                long long ball_next = static_cast<long long>(queue.size());
                if (ball_next <= 2 * ball_prev) {
                    rstar = radius;
                    break;
                }
                layer_start = layer_end;
                layer_end = next_end;
                ball_prev = ball_next;
                ++radius;
            }
            if (rstar > log2n)
                throw InvariantViolation("ball growing radius exceeded floor(log2 n)");

            int cluster_id = out.cluster_count();
            for (int u : queue) {
                if (dist[u] <= rstar) {
                    out.cluster_of[u] = cluster_id;
                    unclustered[u] = 0;
                    --remaining;
                }
                inblock[u] = 0;  // removes B_{r*+1} from the block's graph
                dist[u] = -1;    // reset scratch
            }
            out.color_of_cluster.push_back(color);
            out.cluster_radius.push_back(rstar);
        }
        if (2 * remaining > before)
            throw InvariantViolation("block failed to cluster half of the remaining nodes");
    }
    out.num_colors = color;
    out.measure_weak_diameters(g);
    return out;
}

Ordering decomposition_to_ordering(const NetworkDecomposition& decomp, const Graph& g) {
    int n = g.node_count();
    if (static_cast<int>(decomp.cluster_of.size()) != n)
        throw InvalidArgument("decomposition does not match the graph");
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
        int ca = decomp.cluster_of[a], cb = decomp.cluster_of[b];
        int qa = decomp.color_of_cluster[ca], qb = decomp.color_of_cluster[cb];
        if (qa != qb) return qa < qb;
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<long long> labels(n);
    for (int i = 0; i < n; ++i) labels[nodes[i]] = i;
    return Ordering(std::move(labels));
}

DecompositionReport verify_decomposition(const Graph& g, const NetworkDecomposition& decomp,
                                         int d_bound, int c_bound) {
    DecompositionReport report;
    int n = g.node_count();

    if (static_cast<int>(decomp.cluster_of.size()) != n) {
        report.valid = false;
        report.violations.push_back("cluster assignment does not cover the node set");
        return report;
    }
    int k = decomp.cluster_count();
    std::vector<std::vector<int>> members(k);
    for (int v = 0; v < n; ++v) {
        int c = decomp.cluster_of[v];
        if (c < 0 || c >= k) {
            report.valid = false;
            report.violations.push_back("node " + std::to_string(v) + " is unclustered");
            continue;
        }
        members[c].push_back(v);
    }

    // (b) weak diameter within d_bound, measured independently in g.
    for (int c = 0; c < k; ++c) {
        int measured = 0;
        bool broken = false;
        for (int v : members[c]) {
            auto dist = g.distances_from(v, d_bound);
            for (int u : members[c]) {
                if (dist[u] < 0) {
                    report.valid = false;
                    report.violations.push_back("cluster " + std::to_string(c) + ": nodes " +
                                                std::to_string(v) + " and " + std::to_string(u) +
                                                " are farther than " + std::to_string(d_bound));
                    broken = true;
                    break;
                }
                measured = std::max(measured, dist[u]);
            }
            if (broken) break;
        }
        report.measured_max_weak_diameter =
            std::max(report.measured_max_weak_diameter, broken ? d_bound + 1 : measured);
    }

    // (c) color bound.
    int max_color = 0;
    for (int c = 0; c < k; ++c) {
        if (decomp.color_of_cluster[c] < 1) {
            report.valid = false;
            report.violations.push_back("cluster " + std::to_string(c) + " has color < 1");
        }
        max_color = std::max(max_color, decomp.color_of_cluster[c]);
    }
    report.measured_colors = max_color;
    if (max_color > c_bound) {
        report.valid = false;
        report.violations.push_back("uses color " + std::to_string(max_color) + " > bound " +
                                    std::to_string(c_bound));
    }

    // (d) same-colored distinct clusters must not touch.
    for (int u = 0; u < n; ++u) {
        int cu = decomp.cluster_of[u];
        if (cu < 0 || cu >= k) continue;
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            int cv = decomp.cluster_of[v];
            if (cv < 0 || cv >= k || cv == cu) continue;
            if (decomp.color_of_cluster[cu] == decomp.color_of_cluster[cv]) {
                report.valid = false;
                report.violations.push_back(
                    "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") joins same-colored clusters " + std::to_string(cu) + " and " +
                    std::to_string(cv));
            }
        }
    }
    return report;
}

nlohmann::json DecompositionReport::to_json() const {
    return {{"valid", valid},
            {"violations", violations},
            {"measured_max_weak_diameter", measured_max_weak_diameter},
            {"measured_colors", measured_colors}};
}

long long charged_decomposition_rounds(int r, int n, double beta) {
    double log2n = n <= 1 ? 0.0 : std::log2(static_cast<double>(n));
    return static_cast<long long>(std::ceil(beta * r * log2n * log2n));
}

}  // namespace slocal
