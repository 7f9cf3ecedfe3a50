#include "slocal/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "slocal/errors.hpp"

namespace slocal {

nlohmann::json CfFromSplitResult::to_json() const {
    return {{"coloring", coloring.to_json()},
            {"phases", phases},
            {"rank_sequence", rank_sequence},
            {"oracle_calls", oracle_calls}};
}

CfFromSplitResult cf_from_split(const Hypergraph& h, int delta, const SplitOracle& oracle) {
    if (delta < 2) throw InvalidArgument("cf_from_split needs integer delta >= 2");

    CfFromSplitResult result;
    result.coloring.colors_of.assign(h.node_count(), {});
    int offset = 0;

    // Current hypergraph: surviving member lists per original edge.
    std::vector<std::vector<int>> members;
    for (int e = 0; e < h.edge_count(); ++e) members.push_back(h.edge(e));
    std::vector<char> edge_alive(h.edge_count(), 1);

    long long initial_rank = std::max(h.rank(), 2);
    long long phase_bound =
        static_cast<long long>(std::ceil(2.0 * delta * std::log(static_cast<double>(initial_rank)))) + 1;

    while (true) {
        std::vector<int> alive_edges;
        int rank = 0;
        for (int e = 0; e < h.edge_count(); ++e)
            if (edge_alive[e]) {
                alive_edges.push_back(e);
                rank = std::max(rank, static_cast<int>(members[e].size()));
            }
        if (alive_edges.empty()) break;
        ++result.phases;
        result.rank_sequence.push_back(rank);
        if (result.phases > phase_bound)
            throw InvariantViolation("cf_from_split exceeded its phase bound");

        // Small edges: conflict-free color with a fresh palette and remove.
        std::vector<std::vector<int>> small;
        for (int e : alive_edges)
            if (static_cast<int>(members[e].size()) <= delta) small.push_back(members[e]);
        if (!small.empty()) {
            Hypergraph small_graph(h.node_count(), small);
            LowRankCfResult low = lowrank_cf(small_graph);
            std::vector<char> incident(h.node_count(), 0);
            for (const auto& e : small)
                for (int v : e) incident[v] = 1;
            for (int v = 0; v < h.node_count(); ++v)
                if (incident[v])
                    for (int c : low.coloring.colors_of[v])
                        result.coloring.colors_of[v].push_back(offset + c);
            offset += low.coloring.palette;
            for (int e : alive_edges)
                if (static_cast<int>(members[e].size()) <= delta) edge_alive[e] = 0;
        }

        std::vector<int> big;
        for (int e : alive_edges)
            if (edge_alive[e]) big.push_back(e);
        if (big.empty()) continue;

        // Bipartite incidence of the surviving (all large) edges.
        std::set<int> vertex_set;
        for (int e : big)
            for (int v : members[e]) vertex_set.insert(v);
        std::vector<int> vertices(vertex_set.begin(), vertex_set.end());
        std::map<int, int> local;
        for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> incidence;
        for (std::size_t i = 0; i < big.size(); ++i)
            for (int v : members[big[i]]) incidence.emplace_back(static_cast<int>(i), local[v]);
        BipartiteGraph bip(static_cast<int>(big.size()), static_cast<int>(vertices.size()),
                           incidence);

        ++result.oracle_calls;
        SplitColoring split = oracle(bip);
        SplitReport check = verify_lambda_split(bip, split, 1.0 / delta);
        if (!check.valid)
            throw OracleFailure("split oracle output fails 1/delta verification (" +
                                std::to_string(check.violators.size()) + " violators)");

        // Delete blue nodes; every surviving edge keeps >= 1 red node.
        int new_rank = 0;
        for (int e : big) {
            std::vector<int> kept;
            for (int v : members[e])
                if (split.is_red[local[v]]) kept.push_back(v);
            if (kept.empty())
                throw InvariantViolation("an edge lost every node to the blue side");
            members[e] = std::move(kept);
            new_rank = std::max(new_rank, static_cast<int>(members[e].size()));
        }
        // Rank shrink: R' <= (1 - 1/(2 delta)) R, integer comparison.
        if (static_cast<long long>(2 * delta) * new_rank >
            static_cast<long long>(2 * delta - 1) * rank)
            throw InvariantViolation("rank failed to shrink by the guaranteed factor");
    }

    for (auto& colors : result.coloring.colors_of)
        if (colors.empty()) colors.push_back(offset + 1);
    for (auto& colors : result.coloring.colors_of) std::sort(colors.begin(), colors.end());
    result.coloring.palette = offset + 1;

    CfReport final_check = verify_cf(h, result.coloring);
    if (!final_check.valid)
        throw InvariantViolation("cf_from_split produced an invalid conflict-free coloring");
    return result;
}

// ---------------------------------------------------------------------------
// decomposition_from_cf

nlohmann::json ClusterAssignment::to_json() const {
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t v = 0; v < center_of.size(); ++v)
        out[std::to_string(v)] = {{"center", center_of[v]},
                                  {"color", color_of[v]},
                                  {"r_v", radius_of[v]}};
    return out;
}

DecompFromCfResult decomposition_from_cf(const Graph& g, double epsilon, int q,
                                         const CfOracle& oracle) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
    if (q < 2) throw InvalidArgument("q must be at least 2");
    int n = g.node_count();
    double base = 1.0 + epsilon / 3.0;
    double log_base = std::log(base);
    int radius_bound =
        static_cast<int>(std::ceil(q * std::log(std::max(n, 2)) / log_base));

    DecompFromCfResult result;
    result.assignment.epsilon = epsilon;
    result.assignment.q = q;
    result.assignment.center_of.assign(n, -1);
    result.assignment.color_of.assign(n, -1);
    result.assignment.radius_of.assign(n, -1);

    // Radius search: smallest r with |B_{r+q}| <= (1+eps/3) |B_r|.
    std::vector<int> r_of(n, -1);
    std::vector<int> bucket_of(n, -1);
    for (int v = 0; v < n; ++v) {
        auto dist = g.distances_from(v);
        int reach = 0;
        for (int d : dist) reach = std::max(reach, d);
        std::vector<long long> size_at(reach + q + 2, 0);
        for (int d : dist)
            if (d >= 0) ++size_at[d];
        for (int r = 1; r < static_cast<int>(size_at.size()); ++r) size_at[r] += size_at[r - 1];
        auto ball_size = [&](int r) {
            return size_at[std::min<std::size_t>(r, size_at.size() - 1)];
        };
        for (int r = 0; r <= radius_bound; ++r) {
            if (static_cast<double>(ball_size(r + q)) <=
                base * static_cast<double>(ball_size(r)) + 1e-9) {
                r_of[v] = r;
                break;
            }
        }
        if (r_of[v] < 0)
            throw InvariantViolation("radius search exceeded its bound at node " +
                                     std::to_string(v));
        bucket_of[v] =
            static_cast<int>(std::floor(std::log(static_cast<double>(ball_size(r_of[v]))) /
                                        log_base + 1e-9));
        result.assignment.radius_of[v] = r_of[v];
        result.max_radius = std::max(result.max_radius, r_of[v] + q);
    }

    // Bucketed hypergraphs: q+1 nested balls per vertex.
    std::vector<int> buckets;
    for (int v = 0; v < n; ++v) buckets.push_back(bucket_of[v]);
    std::sort(buckets.begin(), buckets.end());
    buckets.erase(std::unique(buckets.begin(), buckets.end()), buckets.end());
    result.hypergraphs_used = static_cast<int>(buckets.size());

    std::vector<std::vector<int>> node_colors(n);  // global color ids per node

    // One oracle call per bucket, with its own palette slice.
    for (int bi = 0; bi < static_cast<int>(buckets.size()); ++bi) {
        int bucket = buckets[bi];
        std::vector<std::vector<int>> edges;
        std::vector<int> bucket_vertices;
        long long min_size = -1, max_size = -1;
        for (int v = 0; v < n; ++v) {
            if (bucket_of[v] != bucket) continue;
            bucket_vertices.push_back(v);
            auto dist = g.distances_from(v, r_of[v] + q);
            // edges[first_edge(v) + extra] = B_{r_v + extra}(v).
            std::vector<std::vector<int>> balls(q + 1);
            for (int u = 0; u < n; ++u) {
                if (dist[u] < 0) continue;
                int from = std::max(0, dist[u] - r_of[v]);
                for (int extra = from; extra <= q; ++extra) balls[extra].push_back(u);
            }
            for (int extra = 0; extra <= q; ++extra) {
                long long size = static_cast<long long>(balls[extra].size());
                min_size = min_size < 0 ? size : std::min(min_size, size);
                max_size = std::max(max_size, size);
                edges.push_back(std::move(balls[extra]));
            }
        }
        // Almost uniformity within the bucket.
        if (min_size > 0 &&
            static_cast<double>(max_size) > base * base * static_cast<double>(min_size) + 1e-9)
            throw InvariantViolation("bucketed hypergraph is not almost uniform");

        Hypergraph bucket_graph(n, edges);
        MultiColoring colored = oracle(bucket_graph, q);
        CfReport check = verify_cf(bucket_graph, colored);
        if (!check.valid)
            throw OracleFailure("cf oracle output fails verification on bucket " +
                                std::to_string(bucket) + " (" +
                                std::to_string(check.violating_edges.size()) + " edges)");
        int slice = bi * q;  // colors map to [1 + slice, q + slice]
        for (int v = 0; v < n; ++v)
            for (int c : colored.colors_of[v]) node_colors[v].push_back(c + slice);

        for (std::size_t vi = 0; vi < bucket_vertices.size(); ++vi) {
            int v = bucket_vertices[vi];
            int first_edge = static_cast<int>(vi) * (q + 1);
            std::vector<int> witness(q + 1, -1);
            for (int extra = 0; extra <= q; ++extra)
                witness[extra] = check.witness_color[first_edge + extra];
            // Pigeonhole: two radii sharing a witness color, smallest (a, b);
            // only a matters for the center choice.
            int a = -1;
            for (int i = 0; i <= q && a < 0; ++i)
                for (int j = i + 1; j <= q; ++j)
                    if (witness[i] == witness[j]) {
                        a = i;
                        break;
                    }
            if (a < 0)
                throw InvariantViolation(
                    "pigeonhole failure: q+1 balls with q colors share no witness");
            int color = witness[a];
            // The unique holder of the witness color within B_{r_v + a}(v).
            int center = -1;
            const auto& ball = bucket_graph.edge(first_edge + a);
            for (int u : ball)
                if (std::find(colored.colors_of[u].begin(), colored.colors_of[u].end(), color) !=
                    colored.colors_of[u].end()) {
                    center = u;
                    break;
                }
            if (center < 0) throw InvariantViolation("witness holder vanished");
            result.assignment.center_of[v] = center;
            result.assignment.color_of[v] = color + slice;
        }
    }

    // Uniqueness property: Center(v) is the only node of v's witness color
    // within distance dist(v, Center(v)) + 1 of v.
    int max_global_color = 0;
    for (const auto& colors : node_colors)
        for (int c : colors) max_global_color = std::max(max_global_color, c);
    std::vector<std::vector<int>> holders(max_global_color + 1);
    for (int u = 0; u < n; ++u)
        for (int c : node_colors[u]) holders[c].push_back(u);
    for (int v = 0; v < n; ++v) {
        int center = result.assignment.center_of[v];
        int color = result.assignment.color_of[v];
        auto dist = g.distances_from(v, r_of[v] + q + 1);
        int t = dist[center];
        if (t < 0 || t > r_of[v] + q)
            throw InvariantViolation("center out of range for node " + std::to_string(v));
        for (int u : holders[color]) {
            if (u == center) continue;
            if (dist[u] >= 0 && dist[u] <= t + 1)
                throw InvariantViolation("uniqueness property violated at node " +
                                         std::to_string(v));
        }
    }

    // Adjacent same-color nodes share a center.
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) {
            if (w < u) continue;
            if (result.assignment.color_of[u] == result.assignment.color_of[w] &&
                result.assignment.center_of[u] != result.assignment.center_of[w])
                throw InvariantViolation("adjacent same-colored nodes with distinct centers");
        }

    // Clusters: maximal groups sharing (center, color).
    std::map<std::pair<int, int>, int> cluster_ids;
    NetworkDecomposition& decomp = result.decomposition;
    decomp.cluster_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        auto key = std::make_pair(result.assignment.center_of[v], result.assignment.color_of[v]);
        auto [it, inserted] = cluster_ids.emplace(key, static_cast<int>(cluster_ids.size()));
        if (inserted) decomp.color_of_cluster.push_back(key.second);
        decomp.cluster_of[v] = it->second;
    }
    int max_color = 0;
    for (int c : decomp.color_of_cluster) max_color = std::max(max_color, c);
    decomp.num_colors = max_color;
    decomp.base_graph_radius = 1;
    decomp.cluster_radius.assign(decomp.cluster_count(), -1);
    decomp.measure_weak_diameters(g);

    int d_bound = 2 * result.max_radius;
    int c_bound = q * result.hypergraphs_used;
    result.verification = verify_decomposition(g, decomp, d_bound, c_bound);
    return result;
}

}  // namespace slocal
