#pragma once

#include <vector>

#include "slocal/graph.hpp"

namespace slocal {

/// Hypergraph with dense 0-based node ids. Hyperedges are sorted node-id
/// sets. Locality lives in the primal graph: two nodes are adjacent iff they
/// share a hyperedge.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int node_count, std::vector<std::vector<int>> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int e) const { return edges_[e]; }

    // Max hyperedge cardinality (kappa); 0 for an edgeless hypergraph.
    int rank() const { return rank_; }
    int min_edge_size() const { return min_edge_size_; }

    // Edge ids incident to a node.
    const std::vector<int>& incident(int v) const { return incidence_[v]; }

    // Materialized primal graph (deduplicated). Built lazily-by-caller; for
    // wide hyperedges this uses a bitset row per node to avoid quadratic
    // blowup per edge.
    Graph primal_graph() const;

    // Restriction to a node subset: every edge is intersected with `keep`
    // (given as a node mask); empty intersections are dropped. Node ids are
    // preserved. `origin` receives, per surviving edge, the id of the edge it
    // came from.
    Hypergraph restrict(const std::vector<char>& keep_mask, std::vector<int>* origin = nullptr) const;

private:
    int node_count_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
    int rank_ = 0;
    int min_edge_size_ = 0;
};

}  // namespace slocal
