#pragma once

#include <optional>
#include <vector>

#include "slocal/graph.hpp"

namespace slocal {

/// Maps the nodes of a gadget-extended graph back to the original graph.
/// Original nodes map to themselves; gadget nodes map to nothing.
struct EmbeddingMap {
    int original_count = 0;
    std::vector<std::optional<int>> mapping;

    bool is_gadget(int v) const { return !mapping[v].has_value(); }
};

/// Pads every node up to degree d (d odd, d >= max degree) by attaching a
/// private gadget: for an even deficit d', a clique on d+1 nodes with a
/// matching of size d'/2 removed and the matched endpoints joined to the
/// node; an odd deficit first gets a single pendant node, which makes both
/// deficits even. The induced subgraph on the original nodes is unchanged
/// and gadgets of distinct nodes share no edges.
std::pair<Graph, EmbeddingMap> regularize(const Graph& g, int d);

}  // namespace slocal
