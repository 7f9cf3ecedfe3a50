#pragma once

#include <cstdint>
#include <vector>

#include "slocal/graph.hpp"

namespace slocal {

/// Per-node unique integer labels; ascending labels give the processing
/// order pi of an SLOCAL run.
struct Ordering {
    std::vector<long long> labels;

    Ordering() = default;
    explicit Ordering(std::vector<long long> l);

    int node_count() const { return static_cast<int>(labels.size()); }

    // Node ids sorted by ascending label.
    std::vector<int> sequence() const;

    // rank[v] = position of v in the processing sequence.
    std::vector<int> ranks() const;

    static Ordering identity(int n);
    static Ordering random(int n, std::uint64_t seed);

    void validate(int node_count) const;
};

// Diameter of an ordering: max over pairs (s, t) joined by a label-increasing
// path of dist_G(s, t). Computed by orienting edges toward larger labels and
// scanning reachable pairs in the resulting DAG.
int ordering_diameter(const Graph& g, const Ordering& order);

// Independent oracle: enumerate all label-increasing simple paths and take
// the max pairwise distance of nodes on a path. Exponential; n <= ~12.
int ordering_diameter_bruteforce(const Graph& g, const Ordering& order);

}  // namespace slocal
