#include "slocal/graph.hpp"

#include <algorithm>
#include <string>

#include "slocal/errors.hpp"

namespace slocal {

Graph::Graph(int node_count) {
    if (node_count < 0) throw InvalidArgument("node count must be non-negative");
    adj_.resize(node_count);
}

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges) : Graph(node_count) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            throw InvalidArgument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        if (u == v) throw InvalidArgument("self-loop at node " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InvalidArgument("duplicate edge");
    }
    edge_count_ = edges.size();
}

void Graph::check_node(int v, const char* what) const {
    if (v < 0 || v >= node_count())
        throw InvalidArgument(std::string(what) + " out of range: " + std::to_string(v));
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_node(u, "node");
    check_node(v, "node");
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::distances_from(int source, int cap) const {
    check_node(source, "source");
    std::vector<int> dist(node_count(), -1);
    std::vector<int> queue;
    queue.reserve(node_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (cap >= 0 && dist[u] >= cap) continue;
        for (int v : adj_[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int Graph::distance(int u, int v) const {
    check_node(v, "node");
    return distances_from(u)[v];
}

std::vector<int> Graph::ball(int center, int radius) const {
    check_node(center, "center");
    if (radius < 0) throw InvalidArgument("radius must be non-negative");
    auto dist = distances_from(center, radius);
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (dist[v] >= 0) out.push_back(v);
    return out;
}

Graph Graph::power(int r) const {
    if (r < 1) throw InvalidArgument("power radius must be >= 1");
    if (r == 1) return *this;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < node_count(); ++u) {
        auto dist = distances_from(u, r);
        for (int v = u + 1; v < node_count(); ++v)
            if (dist[v] >= 1) edges.emplace_back(u, v);
    }
    return Graph(node_count(), edges);
}

Graph Graph::induced(const std::vector<int>& nodes, std::vector<int>* to_local) const {
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> map(node_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_node(sorted[i], "node");
        map[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted)
        for (int v : adj_[u])
            if (u < v && map[v] >= 0) edges.emplace_back(map[u], map[v]);
    if (to_local) *to_local = std::move(map);
    return Graph(static_cast<int>(sorted.size()), edges);
}

}  // namespace slocal
