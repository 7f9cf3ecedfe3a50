#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slocal/bipartite.hpp"
#include "slocal/decomposition.hpp"
#include "slocal/engine.hpp"
#include "slocal/rng.hpp"

namespace slocal {

/// Red/blue assignment of the right side V of a bipartite graph.
struct SplitColoring {
    std::vector<char> is_red;  // per right node

    nlohmann::json to_json() const;
    static SplitColoring from_json(const nlohmann::json& j, int right_count);
};

struct SplitReport {
    bool valid = true;
    std::vector<int> violators;   // left nodes missing a color
    std::vector<int> red_count;   // per left node
    std::vector<int> blue_count;  // per left node

    nlohmann::json to_json() const;
};

/// lambda-local splitting check: every left node u needs at least
/// floor(lambda * d(u)) neighbors of each color.
SplitReport verify_lambda_split(const BipartiteGraph& b, const SplitColoring& coloring,
                                double lambda);

/// Weak splitting check: threshold is the literal 1 regardless of degrees.
SplitReport verify_weak_split(const BipartiteGraph& b, const SplitColoring& coloring);

/// Zero-round randomized splitting: independent fair coin per right node.
SplitColoring random_split(const BipartiteGraph& b, std::uint64_t seed);

struct BalancedColoringConstraint {
    int left_node = -1;
    std::vector<int> members;  // subset of the cluster
    double bound = 0.0;        // allowed |#red - #blue|
};

/// Red/blue assignment of `cluster` meeting every constraint's discrepancy
/// bound: seeded random draws, then conditional expectations with the
/// standard exponential-moment estimator, then exhaustive search for
/// clusters of at most 20 nodes. Throws InfeasibleError when all fail.
std::vector<char> balanced_coloring_search(const std::vector<int>& cluster,
                                           const std::vector<BalancedColoringConstraint>& constraints,
                                           int retries, Rng& rng);

struct SlocalSplitParams {
    double alpha = 4.0;
    int retries = 200;
};

struct SlocalSplitResult {
    SplitColoring coloring;
    ExecutionTrace trace;
    NetworkDecomposition decomposition;  // of the conflict graph on V
    std::vector<int> clusters_touched;   // k_u per left node
    int max_clusters_touched = 0;
    double lambda_achieved = 0.0;  // reporting value derived from the bounds
    long long rounds_charged = 0;  // decomposition cost, charged not simulated

    nlohmann::json to_json() const;
};

/// SLOCAL lambda-splitting: decompose the conflict graph on V (right nodes
/// sharing a left neighbor are adjacent), then color each cluster C so that
/// every left node u with neighbors in C has
/// |#red - #blue| <= alpha (sqrt(|N(u) cap C| ln n) + ln n). The combined
/// per-u discrepancy then obeys alpha (sqrt(k_u d(u) ln n) + k_u ln n).
/// Both bounds are asserted on every run. The coloring phase runs through
/// the engine; the decomposition cost is charged.
SlocalSplitResult slocal_lambda_split(const BipartiteGraph& b, const Ordering& order,
                                      SlocalSplitParams params, std::uint64_t seed);

using WeakSplitOracle = std::function<SplitColoring(const BipartiteGraph&)>;

/// Reduces lambda = 1/delta splitting to weak splitting: left nodes of
/// degree < delta are dropped (their constraint is vacuous); every other
/// left node's neighborhood is partitioned into parts of size in
/// (delta/2, delta], each part becoming a left node of the derived graph.
/// The oracle's weak splitting then yields at least floor(d(u)/delta)
/// neighbors of each color per original left node (asserted).
SplitColoring reduce_lambda_to_weak(const BipartiteGraph& b, int delta,
                                    const WeakSplitOracle& oracle);

// Partition rule exposed for property tests: sizes of the parts N(u) is cut
// into; all in (delta/2, delta], summing to d.
std::vector<int> neighborhood_partition_sizes(int degree, int delta);

/// Conflict graph on V: edge iff two right nodes share a left neighbor.
Graph conflict_graph(const BipartiteGraph& b);

}  // namespace slocal
