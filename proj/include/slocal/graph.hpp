#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace slocal {

/// Simple undirected graph with dense 0-based node ids and sorted adjacency
/// lists. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int node_count);
    Graph(int node_count, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // Edges in canonical form: u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // B_r(center): all nodes at hop distance <= r, center included. Sorted.
    std::vector<int> ball(int center, int radius) const;

    // Hop distances from source; -1 for unreachable. If cap >= 0, the search
    // stops at depth cap (farther nodes report -1).
    std::vector<int> distances_from(int source, int cap = -1) const;

    // Distance between two nodes, -1 if disconnected.
    int distance(int u, int v) const;

    // G^r: edge between every pair at distance in [1, r].
    Graph power(int r) const;

    // Subgraph induced by `nodes` (need not be sorted); ids are relabeled to
    // 0..k-1 following the sorted order of `nodes`. If `to_local` is given it
    // receives the old->new map (-1 for nodes outside).
    Graph induced(const std::vector<int>& nodes, std::vector<int>* to_local = nullptr) const;

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;

    void check_node(int v, const char* what) const;
};

}  // namespace slocal
