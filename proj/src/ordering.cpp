#include "slocal/ordering.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "slocal/errors.hpp"
#include "slocal/rng.hpp"

namespace slocal {

Ordering::Ordering(std::vector<long long> l) : labels(std::move(l)) {
    validate(static_cast<int>(labels.size()));
}

void Ordering::validate(int node_count) const {
    if (static_cast<int>(labels.size()) != node_count)
        throw InvalidArgument("ordering covers " + std::to_string(labels.size()) +
                              " nodes, graph has " + std::to_string(node_count));
    std::set<long long> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != node_count)
        throw InvalidArgument("ordering labels are not pairwise distinct");
}

std::vector<int> Ordering::sequence() const {
    std::vector<int> seq(labels.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    return seq;
}

std::vector<int> Ordering::ranks() const {
    auto seq = sequence();
    std::vector<int> rank(labels.size());
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) rank[seq[i]] = i;
    return rank;
}

Ordering Ordering::identity(int n) {
    std::vector<long long> l(n);
    std::iota(l.begin(), l.end(), 0);
    return Ordering(std::move(l));
}

Ordering Ordering::random(int n, std::uint64_t seed) {
    std::vector<long long> l(n);
    std::iota(l.begin(), l.end(), 0);
    Rng rng(seed);
    rng.shuffle(l);
    return Ordering(std::move(l));
}

int ordering_diameter(const Graph& g, const Ordering& order) {
    int n = g.node_count();
    order.validate(n);
    if (n == 0) return 0;
    // Reachability over edges oriented toward the larger label, propagated in
    // reverse label order with one bitset row per node.
    auto seq = order.sequence();
    std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) * words, 0);
    auto row = [&](int v) { return reach.begin() + static_cast<std::size_t>(v) * words; };
    for (int i = n - 1; i >= 0; --i) {
        int v = seq[i];
        auto rv = row(v);
        rv[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
        for (int w : g.neighbors(v)) {
            if (order.labels[w] > order.labels[v]) {
                auto rw = row(w);
                for (std::size_t k = 0; k < words; ++k) rv[k] |= rw[k];
            }
        }
    }
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto rs = row(s);
        bool nontrivial = false;
        for (std::size_t k = 0; k < words && !nontrivial; ++k) {
            std::uint64_t bits = rs[k];
            if (k == static_cast<std::size_t>(s) >> 6) bits &= ~(std::uint64_t{1} << (s & 63));
            nontrivial = bits != 0;
        }
        if (!nontrivial) continue;
        auto dist = g.distances_from(s);
        for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t bits = rs[k];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int t = static_cast<int>(k * 64 + b);
                if (t != s && dist[t] > best) best = dist[t];
            }
        }
    }
    return best;
}

namespace {

void extend_paths(const Graph& g, const Ordering& order, std::vector<int>& path,
                  std::vector<char>& on_path, const std::vector<std::vector<int>>& dist, int& best) {
    int tail = path.back();
    for (int v : path)
        best = std::max(best, dist[v][tail]);
    for (int w : g.neighbors(tail)) {
        if (!on_path[w] && order.labels[w] > order.labels[tail]) {
            path.push_back(w);
            on_path[w] = 1;
            extend_paths(g, order, path, on_path, dist, best);
            on_path[w] = 0;
            path.pop_back();
        }
    }
}

}  // namespace

int ordering_diameter_bruteforce(const Graph& g, const Ordering& order) {
    int n = g.node_count();
    order.validate(n);
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = g.distances_from(v);
    int best = 0;
    std::vector<char> on_path(n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        on_path[s] = 1;
        extend_paths(g, order, path, on_path, dist, best);
        on_path[s] = 0;
    }
    return best;
}

}  // namespace slocal
