#pragma once

#include <utility>
#include <vector>

namespace slocal {

/// Bipartite graph B = (U, V, E) with 0-based ids on each side. U is the
/// "left" (constraint) side, V the "right" (colored) side.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int left_count, int right_count, const std::vector<std::pair<int, int>>& edges);

    int left_count() const { return static_cast<int>(left_adj_.size()); }
    int right_count() const { return static_cast<int>(right_adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<int>& left_neighbors(int u) const { return left_adj_[u]; }
    const std::vector<int>& right_neighbors(int v) const { return right_adj_[v]; }
    int left_degree(int u) const { return static_cast<int>(left_adj_[u].size()); }

    // Minimum left degree (delta); 0 if U is empty.
    int min_left_degree() const;

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> left_adj_;   // u -> sorted v ids
    std::vector<std::vector<int>> right_adj_;  // v -> sorted u ids
    std::size_t edge_count_ = 0;
};

}  // namespace slocal
