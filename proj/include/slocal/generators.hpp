#pragma once

#include <cstdint>
#include <string>

#include "slocal/bipartite.hpp"
#include "slocal/graph.hpp"
#include "slocal/hypergraph.hpp"

namespace slocal {

// Deterministic instance generators. Randomized kinds are pure functions of
// their seed.
namespace gen {

Graph path(int n);
Graph cycle(int n);
Graph grid(int rows, int cols);
Graph complete(int n);
Graph gnp(int n, double p, std::uint64_t seed);
Graph random_regular(int n, int degree, std::uint64_t seed);

// Dispatch by kind name: path | cycle | grid | complete | random_gnp |
// random_regular. `a`/`b`/`p` are interpreted per kind.
Graph by_name(const std::string& kind, int a, int b, double p, std::uint64_t seed);

// m hyperedges, each k distinct nodes drawn uniformly from [0, n).
Hypergraph uniform_hypergraph(int n, int m, int k, std::uint64_t seed);

// Like uniform_hypergraph but edge sizes drawn uniformly from [k, max_size].
Hypergraph almost_uniform_hypergraph(int n, int m, int k, int max_size, std::uint64_t seed);

// Every left node picks `degree` distinct right neighbors uniformly.
BipartiteGraph left_regular_bipartite(int left, int right, int degree, std::uint64_t seed);

}  // namespace gen
}  // namespace slocal
