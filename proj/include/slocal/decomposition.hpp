#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slocal/graph.hpp"
#include "slocal/ordering.hpp"

namespace slocal {

/// Weak (d, c)-network decomposition: a partition of V into clusters, each
/// cluster carrying a color, such that same-colored clusters are non-adjacent
/// in the decomposed graph.
struct NetworkDecomposition {
    std::vector<int> cluster_of;        // per node
    std::vector<int> color_of_cluster;  // per cluster, colors 1..num_colors
    int num_colors = 0;
    // The decomposition describes G^base_graph_radius; 1 for G itself.
    int base_graph_radius = 1;
    std::vector<int> cluster_radius;  // ball radius r* per cluster (construction detail)
    std::vector<int> weak_diameter;   // per cluster, measured in the decomposed graph

    int cluster_count() const { return static_cast<int>(color_of_cluster.size()); }
    std::vector<std::vector<int>> clusters() const;
    int max_weak_diameter() const;

    // Measure per-cluster weak diameters by per-member BFS in `g`.
    void measure_weak_diameters(const Graph& g);

    nlohmann::json to_json() const;
};

/// Sequential ball-growing construction: blocks are built one color at a
/// time; within a block, balls grow from the lowest remaining node id until
/// |B_{r+1}| <= 2 |B_r|, the inner ball becomes a cluster and the outer ball
/// is removed from the block's working graph. Guarantees, asserted per run:
/// r* <= floor(log2 n), weak diameter <= 2 floor(log2 n), at most
/// floor(log2 n) + 1 colors, and same-color clusters non-adjacent.
NetworkDecomposition ball_growing_decomposition(const Graph& g);

/// Labels nodes lexicographically by (cluster color, cluster id, node id).
/// A label-increasing path meets at most one cluster per color, so the
/// ordering diameter is at most num_colors * (max weak diameter + 1).
Ordering decomposition_to_ordering(const NetworkDecomposition& decomp, const Graph& g);

inline long long ordering_diameter_bound(const NetworkDecomposition& d) {
    return static_cast<long long>(d.num_colors) * (d.max_weak_diameter() + 1);
}

struct DecompositionReport {
    bool valid = true;
    std::vector<std::string> violations;
    int measured_max_weak_diameter = 0;
    int measured_colors = 0;

    nlohmann::json to_json() const;
};

/// Independent checker: partition totality, per-cluster weak diameter within
/// d_bound (by per-member BFS in g), colors within c_bound, and no edge
/// joining two same-colored distinct clusters.
DecompositionReport verify_decomposition(const Graph& g, const NetworkDecomposition& decomp,
                                         int d_bound, int c_bound);

// Rounds charged for a distributed decomposition of G^r at desk scale where
// only the asymptotic cost O(r log^2 n) is known.
long long charged_decomposition_rounds(int r, int n, double beta = 1.0);

}  // namespace slocal
