#include "slocal/regularize.hpp"

#include <string>

#include "slocal/errors.hpp"

namespace slocal {

namespace {

// Attach a K_{d+1} minus a matching of size deficit/2 to `v`; matched clique
// nodes are joined to v. Requires deficit even, 0 < deficit <= d.
void attach_clique_gadget(int v, int deficit, int d, int& next_id,
                          std::vector<std::pair<int, int>>& edges) {
    int base = next_id;
    int size = d + 1;
    next_id += size;
    int matching = deficit / 2;
    auto matched = [&](int a, int b) {
        // Matching pairs (base+0, base+1), (base+2, base+3), ...
        int lo = std::min(a, b) - base, hi = std::max(a, b) - base;
        return hi == lo + 1 && lo % 2 == 0 && lo / 2 < matching;
    };
    for (int a = base; a < base + size; ++a)
        for (int b = a + 1; b < base + size; ++b)
            if (!matched(a, b)) edges.emplace_back(a, b);
    for (int i = 0; i < matching; ++i) {
        edges.emplace_back(v, base + 2 * i);
        edges.emplace_back(v, base + 2 * i + 1);
    }
}

}  // namespace

std::pair<Graph, EmbeddingMap> regularize(const Graph& g, int d) {
    if (d < 1 || d % 2 == 0) throw InvalidArgument("d must be odd and positive");
    if (d < g.max_degree())
        throw InvalidArgument("d must be at least the max degree " + std::to_string(g.max_degree()));

    int n = g.node_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    int next_id = n;
    // (node, even deficit) pairs still to be padded.
    std::vector<std::pair<int, int>> pending;
    for (int v = 0; v < n; ++v) {
        int deficit = d - g.degree(v);
        if (deficit % 2 == 1) {
            int pendant = next_id++;
            edges.emplace_back(v, pendant);
            if (d - 1 > 0) pending.emplace_back(pendant, d - 1);
            --deficit;
        }
        if (deficit > 0) pending.emplace_back(v, deficit);
    }
    for (auto [v, deficit] : pending) attach_clique_gadget(v, deficit, d, next_id, edges);

    EmbeddingMap map;
    map.original_count = n;
    map.mapping.resize(next_id);
    for (int v = 0; v < n; ++v) map.mapping[v] = v;

    return {Graph(next_id, edges), std::move(map)};
}

}  // namespace slocal
