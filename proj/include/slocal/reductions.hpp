#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "slocal/cf_coloring.hpp"
#include "slocal/decomposition.hpp"
#include "slocal/graph.hpp"
#include "slocal/hypergraph.hpp"
#include "slocal/splitting.hpp"

namespace slocal {

/// Oracle contracts. Both are verified at each call site; invalid outputs
/// raise OracleFailure, so any conforming solver (randomized, SLOCAL, or a
/// file replay) can be wired in.
using CfOracle = std::function<MultiColoring(const Hypergraph&, int q)>;  // palette [1..q]
using SplitOracle = std::function<SplitColoring(const BipartiteGraph&)>;

struct CfFromSplitResult {
    MultiColoring coloring;
    int phases = 0;
    std::vector<int> rank_sequence;  // rank before each phase
    int oracle_calls = 0;

    nlohmann::json to_json() const;
};

/// Conflict-free multicoloring from a lambda = 1/delta splitting oracle:
/// each phase colors the small edges (size <= delta) via lowrank_cf with a
/// fresh palette and removes them, then splits the remaining edge-vertex
/// incidence bipartite graph and deletes the blue nodes; every surviving
/// edge keeps at least one red node and the rank shrinks by a factor of at
/// least 1 - 1/(2 delta) (asserted). Blue nodes left colorless at the end
/// take one trailing color.
CfFromSplitResult cf_from_split(const Hypergraph& h, int delta, const SplitOracle& oracle);

/// Per-node cluster centers and colors produced by the CF reduction.
struct ClusterAssignment {
    std::vector<int> center_of;
    std::vector<int> color_of;
    std::vector<int> radius_of;  // r_v
    double epsilon = 0.0;
    int q = 0;

    nlohmann::json to_json() const;
};

struct DecompFromCfResult {
    ClusterAssignment assignment;
    NetworkDecomposition decomposition;
    int hypergraphs_used = 0;
    int max_radius = 0;  // max r_v + q
    DecompositionReport verification;
};

/// Network decomposition from a conflict-free multicoloring oracle: each
/// vertex finds the smallest radius r_v with |B_{r_v+q}| <= (1+eps/3)
/// |B_{r_v}|, its q+1 balls become hyperedges of an almost-uniform hypergraph
/// bucketed by floor(log_{1+eps/3} |B_{r_v}|); the oracle colors each bucket
/// with its own q-color palette, and the pigeonhole over the q+1 balls gives
/// every vertex a center and color. The emitted decomposition is verified
/// with d_bound = 2 max(r_v + q) and c_bound = q * (number of buckets).
DecompFromCfResult decomposition_from_cf(const Graph& g, double epsilon, int q,
                                         const CfOracle& oracle);

}  // namespace slocal
