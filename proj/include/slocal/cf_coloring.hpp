#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "slocal/engine.hpp"
#include "slocal/hypergraph.hpp"
#include "slocal/ordering.hpp"
#include "slocal/rng.hpp"

namespace slocal {

/// Conflict-free multicoloring: every node holds a non-empty set of colors
/// from [1, palette]; a hyperedge is satisfied when some color is held by
/// exactly one of its members.
struct MultiColoring {
    int palette = 0;
    std::vector<std::vector<int>> colors_of;  // per node, sorted

    nlohmann::json to_json() const;
    static MultiColoring from_json(const nlohmann::json& j, int node_count);
};

struct CfReport {
    bool valid = true;
    std::vector<int> violating_edges;
    std::vector<int> witness_color;  // per edge; -1 where violated

    nlohmann::json to_json() const;
};

/// Definitional checker: per-edge color histogram, witness = smallest color
/// held exactly once.
CfReport verify_cf(const Hypergraph& h, const MultiColoring& coloring);

/// Zero-round randomized multicoloring: each color in [1, q-1] lands on each
/// node independently with probability 1/k (k = min edge size); empty sets
/// become {q}. No per-run guarantee; validity is an empirical statistic.
MultiColoring random_cf(const Hypergraph& h, int q, std::uint64_t seed);

/// Multigraph with parallel-edge multiplicities (one edge per shared
/// hyperedge), the degree measure used by the low-rank construction.
struct Multigraph {
    int node_count = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, multiplicity), sorted

    int degree(int v) const;
    int max_degree() const;
    static Multigraph from_hyperedges(int node_count, const std::vector<std::vector<int>>& edges);
};

struct DefectiveColoring {
    std::vector<int> color_of;  // 1..palette
    int palette = 0;
    int defect = 0;  // measured max monochromatic (weighted) degree

    int monochromatic_degree(const Multigraph& g, int v) const;
};

/// Greedy pass (ascending id, color minimizing the weighted count among
/// already-colored neighbors) followed by deterministic local improvement
/// until every node's monochromatic degree is at most floor(deg(v)/q); this
/// implies defect <= ceil(max_degree/q).
DefectiveColoring greedy_defective_coloring(const Multigraph& g, int q);

struct LowRankCfResult {
    MultiColoring coloring;
    int phases = 0;
    std::vector<int> degree_sequence;  // Delta_i per phase (halves every phase)
};

/// Deterministic conflict-free multicoloring for rank-kappa hypergraphs:
/// phases with fresh 2*kappa-color palettes; each phase defectively colors
/// the shared-edge multigraph and removes every hyperedge holding a unique
/// color. The multigraph degree halves per phase (asserted).
LowRankCfResult lowrank_cf(const Hypergraph& h);

struct SlocalCfParams {
    double theta = 1.0 / 20;  // fraction of in-ball edges a step must uniquely hit
    int retries = 200;
};

struct SlocalCfResult {
    MultiColoring coloring;
    ExecutionTrace trace;
    int phases = 0;
    std::vector<int> unresolved_sequence;  // before each phase, then final 0
    int max_ball_radius = 0;
};

/// SLOCAL conflict-free multicoloring, run phase by phase through the
/// engine: an unprocessed node grows a primal-graph ball until the count of
/// eligible in-ball edges at radius r+2 is at most twice the count at r,
/// colors a subset found by unique_subset_search with the phase's fresh
/// color, and marks the (r+1)-ball processed.
SlocalCfResult slocal_cf(const Hypergraph& h, const Ordering& order, SlocalCfParams params,
                         std::uint64_t seed);

/// Returns S such that at least theta * |local_edges| edges have exactly one
/// member in S. Random draws (inclusion probability 1/k) with retries, then
/// the method of conditional expectations on the expected number of
/// uniquely-hit edges, fixing nodes one at a time.
std::vector<int> unique_subset_search(const std::vector<int>& ball,
                                      const std::vector<std::vector<int>>& local_edges, int k,
                                      double theta, int retries, Rng& rng);
std::vector<int> unique_subset_search(const std::vector<int>& ball,
                                      const std::vector<std::vector<int>>& local_edges, int k,
                                      double theta, int retries, std::uint64_t seed);

}  // namespace slocal
