#include "slocal/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "slocal/errors.hpp"
#include "slocal/rng.hpp"

namespace slocal {
namespace gen {

Graph path(int n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("grid needs positive dimensions");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, edges);
}

Graph complete(int n) {
    if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("gnp needs n >= 1");
    if (p < 0.0 || p > 1.0) throw InvalidArgument("gnp needs p in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_regular(int n, int degree, std::uint64_t seed) {
    if (n < 1 || degree < 0 || degree >= n || (static_cast<long long>(n) * degree) % 2 != 0)
        throw InvalidArgument("infeasible regular graph parameters");
    if (degree == 0) return Graph(n);
    // Configuration model, resampled until simple.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rng rng = Rng::sub(seed, static_cast<std::uint64_t>(attempt));
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * degree);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < degree; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else if (!seen.insert({std::min(u, v), std::max(u, v)}).second) ok = false;
        }
        if (!ok) continue;
        std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
        return Graph(n, edges);
    }
    throw InvalidArgument("random_regular failed to produce a simple graph; parameters too tight");
}

Graph by_name(const std::string& kind, int a, int b, double p, std::uint64_t seed) {
    if (kind == "path") return path(a);
    if (kind == "cycle") return cycle(a);
    if (kind == "grid") return grid(a, b);
    if (kind == "complete") return complete(a);
    if (kind == "random_gnp" || kind == "gnp") return gnp(a, p, seed);
    if (kind == "random_regular" || kind == "regular") return random_regular(a, b, seed);
    throw InvalidArgument("unknown graph kind: " + kind);
}

static std::vector<int> sample_distinct(int n, int k, Rng& rng) {
    // Floyd's algorithm.
    std::set<int> chosen;
    for (int j = n - k; j < n; ++j) {
        int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return std::vector<int>(chosen.begin(), chosen.end());
}

Hypergraph uniform_hypergraph(int n, int m, int k, std::uint64_t seed) {
    return almost_uniform_hypergraph(n, m, k, k, seed);
}

Hypergraph almost_uniform_hypergraph(int n, int m, int k, int max_size, std::uint64_t seed) {
    if (n < 1 || m < 0 || k < 1 || max_size < k || max_size > n)
        throw InvalidArgument("infeasible hypergraph parameters");
    Rng rng(seed);
    std::vector<std::vector<int>> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        int size = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size - k) + 1));
        edges.push_back(sample_distinct(n, size, rng));
    }
    return Hypergraph(n, std::move(edges));
}

BipartiteGraph left_regular_bipartite(int left, int right, int degree, std::uint64_t seed) {
    if (left < 0 || right < 1 || degree < 1 || degree > right)
        throw InvalidArgument("infeasible bipartite parameters");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < left; ++u)
        for (int v : sample_distinct(right, degree, rng)) edges.emplace_back(u, v);
    return BipartiteGraph(left, right, edges);
}

}  // namespace gen
}  // namespace slocal
