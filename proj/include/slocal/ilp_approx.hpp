#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "slocal/engine.hpp"
#include "slocal/graph.hpp"
#include "slocal/ordering.hpp"

namespace slocal {

/// Exact maximum independent set by branch and bound with degree-based
/// branching. Intended for balls of a few dozen nodes; throws CapacityError
/// beyond `cap` nodes.
std::vector<int> exact_mis(const Graph& g, int cap = 25);
int independence_number(const Graph& g, int cap = 25);

/// Exact minimum subset of `dominators` whose closed neighborhoods cover
/// `targets`. Throws CapacityError when the graph exceeds `cap` nodes and
/// InvalidArgument when no cover exists.
std::vector<int> exact_min_dominators(const Graph& g, const std::vector<int>& dominators,
                                      const std::vector<int>& targets, int cap = 25);

/// Exact minimum dominating set of the whole graph.
std::vector<int> exact_mds(const Graph& g, int cap = 25);

bool verify_independent(const Graph& g, const std::vector<int>& nodes);
bool verify_dominating(const Graph& g, const std::vector<int>& nodes);

struct ApproxParams {
    double epsilon = 0.5;
    int ball_node_cap = 25;
};

struct ApproxResult {
    std::vector<int> nodes;
    ExecutionTrace trace;
    int max_radius = 0;                         // largest r chosen by any step
    int radius_bound = 0;                       // the asserted growth bound
    std::vector<std::vector<int>> central_balls;  // MDS analysis artifacts

    nlohmann::json to_json() const;
};

/// SLOCAL (1+eps)-approximate maximum independent set: each surviving node
/// grows a current-graph ball until alpha(B_{r+1}) <= (1+eps) alpha(B_r),
/// commits an exact maximum independent set of B_r and deletes B_{r+1}.
/// The output is independent on every run; its size is at least
/// alpha(G)/(1+eps).
ApproxResult slocal_mis_approx(const Graph& g, const Ordering& order, ApproxParams params,
                               std::uint64_t seed);

/// SLOCAL (1+eps)-approximate minimum dominating set: balls live in the
/// original graph, domination targets are the still-alive nodes, dominator
/// candidates are unrestricted. Each step grows r until
/// g(v, r+2) <= (1+eps) g(v, r), commits a smallest subset of B_{r+3}
/// dominating the alive part of B_{r+2}, deletes that ball, and records the
/// alive part of B_r as the step's central ball (pairwise distance >= 3).
ApproxResult slocal_mds_approx(const Graph& g, const Ordering& order, ApproxParams params,
                               std::uint64_t seed);

}  // namespace slocal
