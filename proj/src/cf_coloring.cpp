#include "slocal/cf_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "slocal/errors.hpp"

namespace slocal {

nlohmann::json MultiColoring::to_json() const {
    nlohmann::json colors = nlohmann::json::object();
    for (std::size_t v = 0; v < colors_of.size(); ++v)
        colors[std::to_string(v)] = colors_of[v];
    return {{"q", palette}, {"colors", std::move(colors)}};
}

MultiColoring MultiColoring::from_json(const nlohmann::json& j, int node_count) {
    MultiColoring mc;
    mc.palette = j.at("q").get<int>();
    mc.colors_of.assign(node_count, {});
    for (auto it = j.at("colors").begin(); it != j.at("colors").end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= node_count) throw InvalidArgument("coloring node id out of range");
        mc.colors_of[v] = it.value().get<std::vector<int>>();
        std::sort(mc.colors_of[v].begin(), mc.colors_of[v].end());
    }
    return mc;
}

nlohmann::json CfReport::to_json() const {
    return {{"valid", valid},
            {"violating_edges", violating_edges},
            {"witness_color", witness_color}};
}

CfReport verify_cf(const Hypergraph& h, const MultiColoring& coloring) {
    if (static_cast<int>(coloring.colors_of.size()) != h.node_count())
        throw InvalidArgument("coloring does not cover the node set");
    for (int v = 0; v < h.node_count(); ++v) {
        if (coloring.colors_of[v].empty())
            throw InvalidArgument("node " + std::to_string(v) + " has an empty color set");
        for (int c : coloring.colors_of[v])
            if (c < 1 || c > coloring.palette)
                throw InvalidArgument("color out of palette range");
    }
    CfReport report;
    report.witness_color.assign(h.edge_count(), -1);
    std::vector<int> count(coloring.palette + 1, 0);
    std::vector<int> touched;
    for (int e = 0; e < h.edge_count(); ++e) {
        touched.clear();
        for (int v : h.edge(e))
            for (int c : coloring.colors_of[v]) {
                if (count[c] == 0) touched.push_back(c);
                ++count[c];
            }
        int witness = -1;
        for (int c : touched)
            if (count[c] == 1 && (witness < 0 || c < witness)) witness = c;
        for (int c : touched) count[c] = 0;
        report.witness_color[e] = witness;
        if (witness < 0) {
            report.valid = false;
            report.violating_edges.push_back(e);
        }
    }
    return report;
}

MultiColoring random_cf(const Hypergraph& h, int q, std::uint64_t seed) {
    if (q < 2) throw InvalidArgument("random_cf needs q >= 2");
    int k = std::max(h.min_edge_size(), 1);
    Rng rng(seed);
    MultiColoring mc;
    mc.palette = q;
    mc.colors_of.assign(h.node_count(), {});
    for (int v = 0; v < h.node_count(); ++v) {
        for (int c = 1; c <= q - 1; ++c)
            if (rng.bernoulli(1.0 / k)) mc.colors_of[v].push_back(c);
        if (mc.colors_of[v].empty()) mc.colors_of[v].push_back(q);
    }
    return mc;
}

// ---------------------------------------------------------------------------
// Multigraph and defective coloring

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& [_, mult] : adj[v]) d += mult;
    return d;
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < node_count; ++v) d = std::max(d, degree(v));
    return d;
}

Multigraph Multigraph::from_hyperedges(int node_count,
                                       const std::vector<std::vector<int>>& edges) {
    std::vector<std::map<int, int>> tmp(node_count);
    for (const auto& e : edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                ++tmp[e[i]][e[j]];
                ++tmp[e[j]][e[i]];
            }
    Multigraph g;
    g.node_count = node_count;
    g.adj.resize(node_count);
    for (int v = 0; v < node_count; ++v)
        g.adj[v].assign(tmp[v].begin(), tmp[v].end());
    return g;
}

int DefectiveColoring::monochromatic_degree(const Multigraph& g, int v) const {
    int d = 0;
    for (const auto& [w, mult] : g.adj[v])
        if (color_of[w] == color_of[v]) d += mult;
    return d;
}

DefectiveColoring greedy_defective_coloring(const Multigraph& g, int q) {
    if (q < 1) throw InvalidArgument("defective coloring needs q >= 1");
    int n = g.node_count;
    DefectiveColoring out;
    out.palette = q;
    out.color_of.assign(n, 0);

    std::vector<int> counts(q + 1, 0);
    auto best_color = [&](int v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& [w, mult] : g.adj[v])
            if (out.color_of[w] != 0) counts[out.color_of[w]] += mult;
        int best = 1;
        for (int c = 2; c <= q; ++c)
            if (counts[c] < counts[best]) best = c;
        return std::make_pair(best, counts[best]);
    };

    for (int v = 0; v < n; ++v) out.color_of[v] = best_color(v).first;

    // Local improvement: move any node whose monochromatic degree exceeds the
    // minimum achievable one. The total monochromatic multiplicity strictly
    // decreases with each move, so this terminates with every node at
    // floor(deg(v)/q) or below.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            auto [best, best_count] = best_color(v);
            int current = out.monochromatic_degree(g, v);
            if (best_count < current) {
                out.color_of[v] = best;
                changed = true;
            }
        }
    }

    out.defect = 0;
    for (int v = 0; v < n; ++v) {
        int mono = out.monochromatic_degree(g, v);
        if (mono > g.degree(v) / q)
            throw InvariantViolation("defective coloring exceeded floor(deg/q) at node " +
                                     std::to_string(v));
        out.defect = std::max(out.defect, mono);
    }
    return out;
}

// ---------------------------------------------------------------------------
// lowrank_cf

LowRankCfResult lowrank_cf(const Hypergraph& h) {
    LowRankCfResult result;
    result.coloring.colors_of.assign(h.node_count(), {});
    int kappa = h.rank();
    int offset = 0;

    std::vector<int> remaining;
    for (int e = 0; e < h.edge_count(); ++e) remaining.push_back(e);

    int prev_degree = -1;
    while (!remaining.empty()) {
        ++result.phases;
        std::vector<std::vector<int>> edges;
        for (int e : remaining) edges.push_back(h.edge(e));
        Multigraph gi = Multigraph::from_hyperedges(h.node_count(), edges);
        int degree = gi.max_degree();
        result.degree_sequence.push_back(degree);
        if (prev_degree >= 0 && 2 * degree > prev_degree)
            throw InvariantViolation("multigraph degree failed to halve between phases");
        prev_degree = degree;

        int q = 2 * kappa;
        DefectiveColoring dc = greedy_defective_coloring(gi, q);

        // Only nodes on remaining hyperedges take part in this phase.
        std::vector<char> participates(h.node_count(), 0);
        for (const auto& e : edges)
            for (int v : e) participates[v] = 1;
        for (int v = 0; v < h.node_count(); ++v)
            if (participates[v]) result.coloring.colors_of[v].push_back(offset + dc.color_of[v]);

        std::vector<int> kept;
        for (int e : remaining) {
            std::map<int, int> histogram;
            for (int v : h.edge(e)) ++histogram[dc.color_of[v]];
            bool unique = false;
            for (const auto& [c, count] : histogram)
                if (count == 1) unique = true;
            if (!unique) kept.push_back(e);
        }
        remaining = std::move(kept);
        offset += q;

        if (result.phases > 64)
            throw InvariantViolation("lowrank_cf failed to terminate");
    }

    for (auto& colors : result.coloring.colors_of)
        if (colors.empty()) colors.push_back(offset + 1);
    result.coloring.palette = offset + 1;
    return result;
}

// ---------------------------------------------------------------------------
// unique_subset_search

namespace {

int count_uniquely_hit(const std::vector<std::vector<int>>& edges, const std::vector<char>& in) {
    int count = 0;
    for (const auto& e : edges) {
        int hits = 0;
        for (int v : e) {
            if (in[v]) {
                ++hits;
                if (hits > 1) break;
            }
        }
        if (hits == 1) ++count;
    }
    return count;
}

}  // namespace

std::vector<int> unique_subset_search(const std::vector<int>& ball,
                                      const std::vector<std::vector<int>>& local_edges, int k,
                                      double theta, int retries, Rng& rng) {
    if (k < 1) throw InvalidArgument("unique_subset_search needs k >= 1");
    int node_bound = 0;
    for (int v : ball) node_bound = std::max(node_bound, v + 1);
    for (const auto& e : local_edges)
        for (int v : e) {
            node_bound = std::max(node_bound, v + 1);
            if (!std::binary_search(ball.begin(), ball.end(), v))
                throw InvalidArgument("local hyperedge leaves the ball");
        }

    double target = theta * static_cast<double>(local_edges.size());
    std::vector<char> in(node_bound, 0);
    if (local_edges.empty()) return {};

    double p = 1.0 / k;
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::fill(in.begin(), in.end(), 0);
        for (int v : ball) in[v] = rng.bernoulli(p);
        if (count_uniquely_hit(local_edges, in) + 1e-12 >= target) {
            std::vector<int> out;
            for (int v : ball)
                if (in[v]) out.push_back(v);
            return out;
        }
    }

    // Conditional expectations on E[#uniquely hit] under independent
    // inclusion with probability p, fixing ball nodes one at a time to the
    // branch that does not decrease the estimator. Per-edge aggregates keep
    // each update O(edges containing v).
    struct EdgeState {
        int ones = 0;          // members fixed to 1
        double prod = 1.0;     // prod of (1-p_v) over undecided/zero members... undecided only
        double ratio = 0.0;    // sum of p_v/(1-p_v) over undecided members
        double value() const {
            if (ones >= 2) return 0.0;
            return ones == 1 ? prod : prod * ratio;
        }
    };
    std::vector<std::vector<int>> edges_of(node_bound);
    std::vector<EdgeState> state(local_edges.size());
    double q1 = 1.0 - p;
    double r1 = p / q1;
    for (std::size_t e = 0; e < local_edges.size(); ++e) {
        state[e].prod = std::pow(q1, static_cast<double>(local_edges[e].size()));
        state[e].ratio = r1 * static_cast<double>(local_edges[e].size());
        for (int v : local_edges[e]) edges_of[v].push_back(static_cast<int>(e));
    }
    double estimator = 0.0;
    for (const auto& s : state) estimator += s.value();

    std::fill(in.begin(), in.end(), 0);
    for (int v : ball) {
        // Candidate estimator for v -> 1 and v -> 0.
        double with_one = estimator, with_zero = estimator;
        for (int e : edges_of[v]) {
            EdgeState s = state[e];
            double before = s.value();
            EdgeState one = s;
            ++one.ones;
            one.prod = s.prod / q1;
            one.ratio = s.ratio - r1;
            EdgeState zero = s;
            zero.prod = s.prod / q1;
            zero.ratio = s.ratio - r1;
            zero.ones = s.ones;
            // zero keeps ones; the undecided slot resolves to excluded.
            with_one += one.value() - before;
            with_zero += zero.value() - before;
        }
        bool take = with_one >= with_zero;
        in[v] = take;
        estimator = take ? with_one : with_zero;
        for (int e : edges_of[v]) {
            EdgeState& s = state[e];
            s.prod /= q1;
            s.ratio -= r1;
            if (take) ++s.ones;
        }
    }

    if (count_uniquely_hit(local_edges, in) + 1e-12 >= target) {
        std::vector<int> out;
        for (int v : ball)
            if (in[v]) out.push_back(v);
        return out;
    }
    throw InfeasibleError("unique_subset_search: theta exceeds the achievable fraction");
}

std::vector<int> unique_subset_search(const std::vector<int>& ball,
                                      const std::vector<std::vector<int>>& local_edges, int k,
                                      double theta, int retries, std::uint64_t seed) {
    Rng rng(seed);
    return unique_subset_search(ball, local_edges, k, theta, retries, rng);
}

// ---------------------------------------------------------------------------
// slocal_cf

namespace {

int ceil_log2(long long m) {
    int r = 0;
    while ((1LL << r) < m) ++r;
    return r;
}

// Provable per-phase resolution fraction: every still-unresolved edge is
// counted by the step that first processes one of its members, so the claimed
// edges amount to at least theta/2 of the survivors, giving
// |Y| <= |A| / (1 + theta/2), i.e. a shrink of theta / (2 + theta).
double theta_shrink(double theta) { return theta / (2.0 + theta); }

// Colors accumulated in a node's memory.
std::vector<int> colors_in_memory(const NodeView& view) {
    if (!view.has_memory("colors")) return {};
    return view.mem("colors").get<std::vector<int>>();
}

bool edge_resolved(const std::vector<int>& members, const Snapshot& snap) {
    std::map<int, int> histogram;
    for (int v : members)
        for (int c : colors_in_memory(snap.at(v))) ++histogram[c];
    for (const auto& [c, count] : histogram)
        if (count == 1) return true;
    return false;
}

}  // namespace

SlocalCfResult slocal_cf(const Hypergraph& h, const Ordering& order, SlocalCfParams params,
                         std::uint64_t seed) {
    if (params.theta <= 0 || params.theta > 1)
        throw InvalidArgument("theta must lie in (0, 1]");
    int k = std::max(h.min_edge_size(), 1);
    Graph primal = h.primal_graph();

    // Node inputs carry the incident hyperedges (id + members), the only
    // hypergraph knowledge a node starts with.
    std::vector<Value> inputs(h.node_count());
    for (int v = 0; v < h.node_count(); ++v) {
        Value edges = Value::array();
        for (int e : h.incident(v)) edges.push_back(Value{{"id", e}, {"members", h.edge(e)}});
        inputs[v] = Value{{"edges", std::move(edges)}};
    }

    SlocalRun run(primal, order, seed, inputs);
    SlocalCfResult result;

    auto unresolved_edges = [&]() {
        std::vector<int> out;
        for (int e = 0; e < h.edge_count(); ++e) {
            std::map<int, int> histogram;
            for (int v : h.edge(e)) {
                const auto& memory = run.state(v).memory;
                auto it = memory.find("colors");
                if (it == memory.end()) continue;
                for (int c : it->second->get<std::vector<int>>()) ++histogram[c];
            }
            bool ok = false;
            for (const auto& [c, count] : histogram)
                if (count == 1) ok = true;
            if (!ok) out.push_back(e);
        }
        return out;
    };

    std::vector<int> unresolved = unresolved_edges();
    while (!unresolved.empty()) {
        int phase = ++result.phases;
        long long m_cur = static_cast<long long>(unresolved.size());
        result.unresolved_sequence.push_back(static_cast<int>(m_cur));
        int rmax = 2 * (ceil_log2(std::max(m_cur, 2LL)) + 2);

        Phase engine_phase;
        engine_phase.declared_locality = rmax + 2;
        engine_phase.write_radius = rmax + 1;
        double theta = params.theta;
        int retries = params.retries;
        engine_phase.procedure = [phase, rmax, theta, retries, k](ProcedureContext& ctx) {
            Snapshot own = ctx.query(0);
            const NodeView& me = own.at(ctx.node());
            if (me.has_memory("p") && me.mem("p").get<int>() == phase) return;

            // Ball growing over unprocessed nodes is not needed: balls use
            // the full primal graph; eligibility filters the edges.
            int radius = -1;
            Snapshot snap;
            std::vector<std::vector<int>> eligible_inner;
            for (int r = 0; r <= rmax; ++r) {
                snap = ctx.query(r + 2);
                auto eligible_in = [&](int limit) {
                    std::vector<std::vector<int>> out;
                    std::set<int> seen_ids;
                    for (const auto& [v, view] : snap.nodes) {
                        if (view.distance > limit) continue;
                        for (const Value& edge : view.input->at("edges")) {
                            int id = edge.at("id").get<int>();
                            if (seen_ids.count(id)) continue;
                            auto members = edge.at("members").get<std::vector<int>>();
                            bool inside = true, fresh = true;
                            for (int u : members) {
                                if (!snap.contains(u) || snap.at(u).distance > limit) {
                                    inside = false;
                                    break;
                                }
                                const NodeView& mv = snap.at(u);
                                if (mv.has_memory("p") && mv.mem("p").get<int>() == phase)
                                    fresh = false;
                            }
                            if (!inside || !fresh) continue;
                            seen_ids.insert(id);
                            if (!edge_resolved(members, snap)) out.push_back(members);
                        }
                    }
                    return out;
                };
                auto inner = eligible_in(r);
                auto outer = eligible_in(r + 2);
                if (static_cast<long long>(outer.size()) <=
                    2 * static_cast<long long>(inner.size())) {
                    radius = r;
                    eligible_inner = std::move(inner);
                    break;
                }
            }
            if (radius < 0)
                throw InvariantViolation("slocal_cf ball growth exceeded its radius bound");

            // Candidates: unprocessed nodes of the inner ball.
            std::vector<int> candidates;
            for (const auto& [v, view] : snap.nodes) {
                if (view.distance > radius) continue;
                if (view.has_memory("p") && view.mem("p").get<int>() == phase) continue;
                candidates.push_back(v);
            }
            std::vector<int> chosen =
                unique_subset_search(candidates, eligible_inner, k, theta, retries, ctx.rng());
            for (int u : chosen) {
                auto colors = colors_in_memory(snap.at(u));
                colors.push_back(phase);
                ctx.write(u, "colors", colors);
            }
            for (const auto& [v, view] : snap.nodes)
                if (view.distance <= radius + 1) ctx.write(v, "p", phase);
        };
        run.run_phase(engine_phase);

        auto next = unresolved_edges();
        // Provable per-phase shrink factor; see the module notes.
        double provable = 1.0 - theta_shrink(params.theta);
        if (static_cast<double>(next.size()) >
            provable * static_cast<double>(unresolved.size()) + 1e-9)
            throw InvariantViolation("slocal_cf phase failed to resolve the guaranteed fraction");
        unresolved = std::move(next);

        int observed = run.phase_localities().back();
        result.max_ball_radius = std::max(result.max_ball_radius, observed);
    }
    result.unresolved_sequence.push_back(0);

    result.trace = run.trace();
    result.coloring.colors_of.assign(h.node_count(), {});
    for (int v = 0; v < h.node_count(); ++v) {
        const auto& memory = run.state(v).memory;
        auto it = memory.find("colors");
        if (it != memory.end()) result.coloring.colors_of[v] = it->second->get<std::vector<int>>();
    }
    int default_color = result.phases + 1;
    for (auto& colors : result.coloring.colors_of)
        if (colors.empty()) colors.push_back(default_color);
    result.coloring.palette = default_color;
    return result;
}

}  // namespace slocal
