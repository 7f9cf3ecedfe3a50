#include "slocal/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "slocal/errors.hpp"

namespace slocal {
namespace io {

namespace {

// Token stream that tracks line numbers and skips '#' comment lines.
class Lines {
public:
    explicit Lines(std::istream& in) : in_(in) {}

    // Next non-comment, non-blank line split into a token stream.
    bool next(std::istringstream& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            out.clear();
            out.str(line);
            return true;
        }
        return false;
    }

    int lineno() const { return lineno_; }

private:
    std::istream& in_;
    int lineno_ = 0;
};

long long want_int(std::istringstream& tok, Lines& lines, const char* what) {
    long long v;
    if (!(tok >> v)) throw ParseError(std::string("expected ") + what, lines.lineno());
    return v;
}

void want_end(std::istringstream& tok, Lines& lines) {
    std::string extra;
    if (tok >> extra) throw ParseError("trailing tokens: '" + extra + "'", lines.lineno());
}

}  // namespace

Graph read_graph(std::istream& in) {
    Lines lines(in);
    std::istringstream tok;
    if (!lines.next(tok)) throw ParseError("missing header", 1);
    long long n = want_int(tok, lines, "node count");
    long long m = want_int(tok, lines, "edge count");
    want_end(tok, lines);
    if (n < 0 || m < 0) throw ParseError("negative counts", lines.lineno());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        if (!lines.next(tok)) throw ParseError("unexpected end of file", lines.lineno());
        long long u = want_int(tok, lines, "edge endpoint");
        long long v = want_int(tok, lines, "edge endpoint");
        want_end(tok, lines);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("node id out of range", lines.lineno());
        if (u == v) throw ParseError("self-loop", lines.lineno());
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lines.lineno());
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.node_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

Hypergraph read_hypergraph(std::istream& in) {
    Lines lines(in);
    std::istringstream tok;
    if (!lines.next(tok)) throw ParseError("missing header", 1);
    long long n = want_int(tok, lines, "node count");
    long long m = want_int(tok, lines, "edge count");
    want_end(tok, lines);
    if (n < 0 || m < 0) throw ParseError("negative counts", lines.lineno());
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        if (!lines.next(tok)) throw ParseError("unexpected end of file", lines.lineno());
        long long k = want_int(tok, lines, "edge size");
        if (k < 1) throw ParseError("hyperedge must be non-empty", lines.lineno());
        std::vector<int> members;
        for (long long i = 0; i < k; ++i) {
            long long v = want_int(tok, lines, "edge member");
            if (v < 0 || v >= n) throw ParseError("node id out of range", lines.lineno());
            members.push_back(static_cast<int>(v));
        }
        want_end(tok, lines);
        edges.push_back(std::move(members));
    }
    try {
        return Hypergraph(static_cast<int>(n), std::move(edges));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lines.lineno());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.node_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        out << e.size();
        for (int v : e) out << ' ' << v;
        out << '\n';
    }
}

BipartiteGraph read_bipartite(std::istream& in) {
    Lines lines(in);
    std::istringstream tok;
    if (!lines.next(tok)) throw ParseError("missing header", 1);
    long long nu = want_int(tok, lines, "left count");
    long long nv = want_int(tok, lines, "right count");
    long long m = want_int(tok, lines, "edge count");
    want_end(tok, lines);
    if (nu < 0 || nv < 0 || m < 0) throw ParseError("negative counts", lines.lineno());
    std::vector<std::pair<int, int>> edges;
    for (long long e = 0; e < m; ++e) {
        if (!lines.next(tok)) throw ParseError("unexpected end of file", lines.lineno());
        long long u = want_int(tok, lines, "left endpoint");
        long long v = want_int(tok, lines, "right endpoint");
        want_end(tok, lines);
        if (u < 0 || u >= nu || v < 0 || v >= nv)
            throw ParseError("node id out of range", lines.lineno());
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return BipartiteGraph(static_cast<int>(nu), static_cast<int>(nv), edges);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lines.lineno());
    }
}

void write_bipartite(std::ostream& out, const BipartiteGraph& b) {
    auto edges = b.edges();
    out << b.left_count() << ' ' << b.right_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

Ordering read_ordering(std::istream& in, int node_count) {
    Lines lines(in);
    std::istringstream tok;
    std::vector<long long> labels(node_count);
    std::vector<char> seen(node_count, 0);
    for (int i = 0; i < node_count; ++i) {
        if (!lines.next(tok)) throw ParseError("unexpected end of ordering file", lines.lineno());
        long long node = want_int(tok, lines, "node id");
        long long label = want_int(tok, lines, "label");
        want_end(tok, lines);
        if (node < 0 || node >= node_count) throw ParseError("node id out of range", lines.lineno());
        if (seen[node]) throw ParseError("node listed twice", lines.lineno());
        seen[node] = 1;
        labels[node] = label;
    }
    try {
        return Ordering(std::move(labels));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lines.lineno());
    }
}

void write_ordering(std::ostream& out, const Ordering& order) {
    for (int v = 0; v < order.node_count(); ++v) out << v << ' ' << order.labels[v] << '\n';
}

namespace {

template <typename T, typename Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return reader(in);
}

template <typename T, typename Writer>
void write_file(const std::string& path, const T& value, Writer writer) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    writer(out, value);
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    return read_file<Graph>(path, [](std::istream& in) { return read_graph(in); });
}
void write_graph_file(const std::string& path, const Graph& g) {
    write_file(path, g, [](std::ostream& out, const Graph& v) { write_graph(out, v); });
}
Hypergraph read_hypergraph_file(const std::string& path) {
    return read_file<Hypergraph>(path, [](std::istream& in) { return read_hypergraph(in); });
}
void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
    write_file(path, h, [](std::ostream& out, const Hypergraph& v) { write_hypergraph(out, v); });
}
BipartiteGraph read_bipartite_file(const std::string& path) {
    return read_file<BipartiteGraph>(path, [](std::istream& in) { return read_bipartite(in); });
}
void write_bipartite_file(const std::string& path, const BipartiteGraph& b) {
    write_file(path, b, [](std::ostream& out, const BipartiteGraph& v) { write_bipartite(out, v); });
}
Ordering read_ordering_file(const std::string& path, int node_count) {
    return read_file<Ordering>(path, [node_count](std::istream& in) { return read_ordering(in, node_count); });
}
void write_ordering_file(const std::string& path, const Ordering& order) {
    write_file(path, order, [](std::ostream& out, const Ordering& v) { write_ordering(out, v); });
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << contents;
}

}  // namespace io
}  // namespace slocal
