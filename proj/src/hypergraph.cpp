#include "slocal/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "slocal/errors.hpp"

namespace slocal {

Hypergraph::Hypergraph(int node_count, std::vector<std::vector<int>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count < 0) throw InvalidArgument("node count must be non-negative");
    incidence_.resize(node_count);
    min_edge_size_ = 0;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto& members = edges_[e];
        if (members.empty()) throw InvalidArgument("hyperedge " + std::to_string(e) + " is empty");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int v : members) {
            if (v < 0 || v >= node_count)
                throw InvalidArgument("hyperedge member out of range: " + std::to_string(v));
            incidence_[v].push_back(e);
        }
        rank_ = std::max(rank_, static_cast<int>(members.size()));
        int sz = static_cast<int>(members.size());
        min_edge_size_ = (min_edge_size_ == 0) ? sz : std::min(min_edge_size_, sz);
    }
}

Graph Hypergraph::primal_graph() const {
    std::vector<std::pair<int, int>> out;
    std::size_t words = (static_cast<std::size_t>(node_count_) + 63) / 64;
    std::vector<std::uint64_t> row(words);
    for (int u = 0; u < node_count_; ++u) {
        std::fill(row.begin(), row.end(), 0);
        for (int e : incidence_[u])
            for (int v : edges_[e])
                if (v > u) row[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                out.emplace_back(u, static_cast<int>(w * 64 + b));
            }
        }
    }
    return Graph(node_count_, out);
}

Hypergraph Hypergraph::restrict(const std::vector<char>& keep_mask, std::vector<int>* origin) const {
    std::vector<std::vector<int>> kept;
    std::vector<int> from;
    for (int e = 0; e < edge_count(); ++e) {
        std::vector<int> members;
        for (int v : edges_[e])
            if (keep_mask[v]) members.push_back(v);
        if (!members.empty()) {
            kept.push_back(std::move(members));
            from.push_back(e);
        }
    }
    if (origin) *origin = std::move(from);
    return Hypergraph(node_count_, std::move(kept));
}

}  // namespace slocal
