#include "slocal/bipartite.hpp"

#include <algorithm>
#include <string>

#include "slocal/errors.hpp"

namespace slocal {

BipartiteGraph::BipartiteGraph(int left_count, int right_count,
                               const std::vector<std::pair<int, int>>& edges) {
    if (left_count < 0 || right_count < 0)
        throw InvalidArgument("side counts must be non-negative");
    left_adj_.resize(left_count);
    right_adj_.resize(right_count);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= left_count) throw InvalidArgument("left id out of range: " + std::to_string(u));
        if (v < 0 || v >= right_count) throw InvalidArgument("right id out of range: " + std::to_string(v));
        left_adj_[u].push_back(v);
        right_adj_[v].push_back(u);
    }
    for (auto& list : left_adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InvalidArgument("duplicate bipartite edge");
    }
    for (auto& list : right_adj_) std::sort(list.begin(), list.end());
    edge_count_ = edges.size();
}

int BipartiteGraph::min_left_degree() const {
    int d = 0;
    for (std::size_t u = 0; u < left_adj_.size(); ++u) {
        int du = static_cast<int>(left_adj_[u].size());
        d = (u == 0) ? du : std::min(d, du);
    }
    return d;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < left_count(); ++u)
        for (int v : left_adj_[u]) out.emplace_back(u, v);
    return out;
}

}  // namespace slocal
