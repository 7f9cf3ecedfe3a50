#pragma once

#include <iosfwd>
#include <string>

#include "slocal/bipartite.hpp"
#include "slocal/graph.hpp"
#include "slocal/hypergraph.hpp"
#include "slocal/ordering.hpp"

namespace slocal {
namespace io {

// Text formats. Whitespace-separated; lines starting with '#' are ignored.
//   graph:      "n m"  then m lines "u v"         (0-based, u != v)
//   hypergraph: "n m"  then m lines "k v1 .. vk"
//   bipartite:  "nu nv m" then m lines "u v"
//   ordering:   n lines "node label"
// Writers emit the canonical form: sorted edges, u < v for graphs.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

BipartiteGraph read_bipartite(std::istream& in);
BipartiteGraph read_bipartite_file(const std::string& path);
void write_bipartite(std::ostream& out, const BipartiteGraph& b);
void write_bipartite_file(const std::string& path, const BipartiteGraph& b);

Ordering read_ordering(std::istream& in, int node_count);
Ordering read_ordering_file(const std::string& path, int node_count);
void write_ordering(std::ostream& out, const Ordering& order);
void write_ordering_file(const std::string& path, const Ordering& order);

std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& contents);

}  // namespace io
}  // namespace slocal
