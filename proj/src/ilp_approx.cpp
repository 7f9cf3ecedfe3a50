#include "slocal/ilp_approx.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "slocal/algorithms.hpp"
#include "slocal/errors.hpp"

namespace slocal {

namespace {

// Branch and bound for maximum independent set on small graphs. Branches on
// the highest-degree remaining vertex; isolated vertices are taken greedily.
struct MisSolver {
    const Graph& g;
    std::vector<char> alive;
    std::vector<int> current;
    std::vector<int> best;

    explicit MisSolver(const Graph& graph) : g(graph), alive(graph.node_count(), 1) {}

    void solve() {
        std::vector<int> chosen;
        recurse(g.node_count(), chosen);
    }

    void recurse(int alive_count, std::vector<int>& chosen) {
        if (static_cast<int>(chosen.size()) + alive_count <= static_cast<int>(best.size()))
            return;  // even taking everything cannot beat the incumbent
        // Take isolated vertices outright; find the max-degree vertex.
        int pick = -1, pick_degree = -1;
        std::vector<int> taken;
        for (int v = 0; v < g.node_count(); ++v) {
            if (!alive[v]) continue;
            int degree = 0;
            for (int w : g.neighbors(v)) degree += alive[w];
            if (degree == 0) {
                alive[v] = 0;
                --alive_count;
                taken.push_back(v);
                chosen.push_back(v);
            } else if (degree > pick_degree) {
                pick = v;
                pick_degree = degree;
            }
        }
        if (pick < 0) {
            if (chosen.size() > best.size()) best = chosen;
        } else {
            // Include pick: remove N[pick].
            std::vector<int> removed{pick};
            alive[pick] = 0;
            for (int w : g.neighbors(pick))
                if (alive[w]) {
                    alive[w] = 0;
                    removed.push_back(w);
                }
            chosen.push_back(pick);
            recurse(alive_count - static_cast<int>(removed.size()), chosen);
            chosen.pop_back();
            for (int w : removed) alive[w] = 1;
            // Exclude pick.
            alive[pick] = 0;
            recurse(alive_count - 1, chosen);
            alive[pick] = 1;
        }
        for (int v : taken) {
            alive[v] = 1;
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<int> exact_mis(const Graph& g, int cap) {
    if (g.node_count() > cap)
        throw CapacityError("exact_mis: " + std::to_string(g.node_count()) +
                            " nodes exceed the cap of " + std::to_string(cap));
    MisSolver solver(g);
    solver.solve();
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

int independence_number(const Graph& g, int cap) {
    return static_cast<int>(exact_mis(g, cap).size());
}

namespace {

struct DominationSolver {
    const Graph& g;
    const std::vector<char>& is_dominator;
    std::vector<int> cover_count;  // per target-node: chosen dominators covering it
    std::vector<char> is_target;
    int uncovered = 0;
    std::vector<int> current;
    std::vector<int> best;
    bool found = false;

    DominationSolver(const Graph& graph, const std::vector<char>& dominators,
                     const std::vector<int>& targets)
        : g(graph), is_dominator(dominators), cover_count(graph.node_count(), 0),
          is_target(graph.node_count(), 0) {
        for (int t : targets) {
            is_target[t] = 1;
            ++uncovered;
        }
    }

    int coverage(int d) const {
        int c = is_target[d] && cover_count[d] == 0 ? 1 : 0;
        for (int w : g.neighbors(d))
            if (is_target[w] && cover_count[w] == 0) ++c;
        return c;
    }

    void choose(int d, int delta) {
        if (is_target[d]) {
            cover_count[d] += delta;
            if (delta > 0 && cover_count[d] == 1) --uncovered;
            if (delta < 0 && cover_count[d] == 0) ++uncovered;
        }
        for (int w : g.neighbors(d)) {
            if (!is_target[w]) continue;
            cover_count[w] += delta;
            if (delta > 0 && cover_count[w] == 1) --uncovered;
            if (delta < 0 && cover_count[w] == 0) ++uncovered;
        }
    }

    void recurse() {
        if (uncovered == 0) {
            if (!found || current.size() < best.size()) {
                best = current;
                found = true;
            }
            return;
        }
        if (found) {
            // Simple bound: every new dominator covers at most its closed
            // degree worth of targets.
            int max_cover = 0;
            for (int d = 0; d < g.node_count(); ++d)
                if (is_dominator[d]) max_cover = std::max(max_cover, coverage(d));
            if (max_cover == 0) return;
            int need = (uncovered + max_cover - 1) / max_cover;
            if (current.size() + need >= best.size()) return;
        }
        // Branch on the uncovered target with the fewest candidates.
        int pick = -1, pick_options = -1;
        for (int t = 0; t < g.node_count(); ++t) {
            if (!is_target[t] || cover_count[t] > 0) continue;
            int options = is_dominator[t] ? 1 : 0;
            for (int w : g.neighbors(t)) options += is_dominator[w];
            if (pick < 0 || options < pick_options) {
                pick = t;
                pick_options = options;
            }
        }
        if (pick_options == 0) return;  // uncoverable target on this branch
        std::vector<int> candidates;
        if (is_dominator[pick]) candidates.push_back(pick);
        for (int w : g.neighbors(pick))
            if (is_dominator[w]) candidates.push_back(w);
        for (int d : candidates) {
            choose(d, +1);
            current.push_back(d);
            recurse();
            current.pop_back();
            choose(d, -1);
        }
    }
};

}  // namespace

std::vector<int> exact_min_dominators(const Graph& g, const std::vector<int>& dominators,
                                      const std::vector<int>& targets, int cap) {
    if (g.node_count() > cap)
        throw CapacityError("exact_min_dominators: " + std::to_string(g.node_count()) +
                            " nodes exceed the cap of " + std::to_string(cap));
    std::vector<char> is_dominator(g.node_count(), 0);
    for (int d : dominators) is_dominator[d] = 1;
    DominationSolver solver(g, is_dominator, targets);
    if (solver.uncovered == 0) return {};
    solver.recurse();
    if (!solver.found) throw InvalidArgument("no dominating subset exists");
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

std::vector<int> exact_mds(const Graph& g, int cap) {
    std::vector<int> all(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) all[v] = v;
    return exact_min_dominators(g, all, all, cap);
}

bool verify_independent(const Graph& g, const std::vector<int>& nodes) {
    return algos::is_independent_set(g, nodes);
}

bool verify_dominating(const Graph& g, const std::vector<int>& nodes) {
    return algos::is_dominating_set(g, nodes);
}

nlohmann::json ApproxResult::to_json() const {
    return {{"nodes", nodes},
            {"size", nodes.size()},
            {"max_radius", max_radius},
            {"radius_bound", radius_bound},
            {"central_balls", central_balls}};
}

namespace {

int log_bound(double epsilon, int n) {
    // ceil(log_{1+eps} n)
    if (n <= 1) return 0;
    return static_cast<int>(
        std::ceil(std::log(static_cast<double>(n)) / std::log1p(epsilon) - 1e-9));
}

bool is_dead(const NodeView& view) {
    return view.has_memory("dead");
}

}  // namespace

ApproxResult slocal_mis_approx(const Graph& g, const Ordering& order, ApproxParams params,
                               std::uint64_t seed) {
    if (params.epsilon <= 0) throw InvalidArgument("epsilon must be positive");
    int n = g.node_count();
    int rbound = log_bound(params.epsilon, std::max(n, 2));
    int cap = params.ball_node_cap;
    double eps = params.epsilon;

    Phase phase;
    phase.declared_locality = rbound + 1;
    phase.write_radius = rbound + 1;
    phase.procedure = [rbound, cap, eps](ProcedureContext& ctx) {
        Snapshot own = ctx.query(0);
        const NodeView& me = own.at(ctx.node());
        if (is_dead(me)) {
            ctx.set_output(me.has_memory("sel"));
            return;
        }
        auto admit = [](const NodeView& view) { return !is_dead(view); };
        for (int r = 0; r <= rbound; ++r) {
            Snapshot snap = ctx.query(r + 1);
            auto inner = snap.ball(ctx.node(), r, admit);
            auto outer = snap.ball(ctx.node(), r + 1, admit);
            if (static_cast<int>(outer.size()) > cap)
                throw CapacityError("mis ball exceeded the node cap at radius " +
                                    std::to_string(r + 1));
            Graph inner_graph = snap.induced_graph(inner);
            Graph outer_graph = snap.induced_graph(outer);
            int alpha_inner = independence_number(inner_graph, cap);
            int alpha_outer = independence_number(outer_graph, cap);
            if (static_cast<double>(alpha_outer) <=
                (1.0 + eps) * static_cast<double>(alpha_inner) + 1e-9) {
                // Commit an exact MIS of the inner ball, delete the outer.
                for (int local : exact_mis(inner_graph, cap))
                    ctx.write(inner[local], "sel", true);
                for (int u : outer) ctx.write(u, "dead", true);
                Snapshot after = ctx.query(0);
                ctx.set_output(after.at(ctx.node()).has_memory("sel"));
                return;
            }
        }
        throw InvariantViolation("mis ball growth exceeded ceil(log_{1+eps} n)");
    };

    SlocalAlgorithm algo;
    algo.name = "slocal-mis";
    algo.phases.push_back(phase);
    ExecutionTrace trace = run_slocal(g, algo, order, seed);

    // Recover the solution from the final states.
    ApproxResult result;
    result.radius_bound = rbound;
    for (int v = 0; v < n; ++v)
        if (trace.states[v].memory.count("sel")) result.nodes.push_back(v);
    result.trace = std::move(trace);
    result.max_radius = result.trace.max_locality() > 0 ? result.trace.max_locality() - 1 : 0;
    if (!verify_independent(g, result.nodes))
        throw InvariantViolation("mis approximation produced a dependent set");
    return result;
}

ApproxResult slocal_mds_approx(const Graph& g, const Ordering& order, ApproxParams params,
                               std::uint64_t seed) {
    if (params.epsilon <= 0) throw InvalidArgument("epsilon must be positive");
    int n = g.node_count();
    int rbound = 2 * log_bound(params.epsilon, std::max(n, 2)) + 2;
    int cap = params.ball_node_cap;
    double eps = params.epsilon;

    Phase phase;
    phase.declared_locality = rbound + 3;
    phase.write_radius = rbound + 3;
    phase.procedure = [rbound, cap, eps](ProcedureContext& ctx) {
        Snapshot own = ctx.query(0);
        const NodeView& me = own.at(ctx.node());
        if (is_dead(me)) {
            ctx.set_output(me.has_memory("sel"));
            return;
        }
        for (int r = 0; r <= rbound; ++r) {
            Snapshot snap = ctx.query(r + 3);
            if (static_cast<int>(snap.nodes.size()) > cap)
                throw CapacityError("mds ball exceeded the node cap at radius " +
                                    std::to_string(r + 3));
            std::vector<int> local_of;
            Graph ball_graph = snap.induced_graph(snap.ball(ctx.node(), r + 3), &local_of);
            std::map<int, int> to_local;
            for (std::size_t i = 0; i < local_of.size(); ++i) to_local[local_of[i]] = i;
            auto locals_within = [&](int radius, bool alive_only) {
                std::vector<int> out;
                for (const auto& [u, view] : snap.nodes)
                    if (view.distance <= radius && (!alive_only || !is_dead(view)))
                        out.push_back(to_local[u]);
                return out;
            };
            auto g_value = [&](int radius) {
                return static_cast<int>(exact_min_dominators(ball_graph,
                                                             locals_within(radius + 1, false),
                                                             locals_within(radius, true), cap)
                                            .size());
            };
            int g_r = g_value(r);
            int g_r2 = g_value(r + 2);
            if (static_cast<double>(g_r2) <= (1.0 + eps) * static_cast<double>(g_r) + 1e-9) {
                auto chosen = exact_min_dominators(ball_graph, locals_within(r + 3, false),
                                                   locals_within(r + 2, true), cap);
                for (int local : chosen) ctx.write(local_of[local], "sel", true);
                // Record the central ball (alive part of B_r) on the center.
                std::vector<int> central;
                for (const auto& [u, view] : snap.nodes)
                    if (view.distance <= r && !is_dead(view)) central.push_back(u);
                ctx.write(ctx.node(), "central", central);
                for (const auto& [u, view] : snap.nodes)
                    if (view.distance <= r + 2 && !is_dead(view)) ctx.write(u, "dead", true);
                Snapshot after = ctx.query(0);
                ctx.set_output(after.at(ctx.node()).has_memory("sel"));
                return;
            }
        }
        throw InvariantViolation("mds ball growth exceeded its radius bound");
    };

    SlocalAlgorithm algo;
    algo.name = "slocal-mds";
    algo.phases.push_back(phase);
    ExecutionTrace trace = run_slocal(g, algo, order, seed);

    ApproxResult result;
    result.radius_bound = rbound;
    for (int v = 0; v < n; ++v) {
        if (trace.states[v].memory.count("sel")) result.nodes.push_back(v);
        auto it = trace.states[v].memory.find("central");
        if (it != trace.states[v].memory.end())
            result.central_balls.push_back(it->second->get<std::vector<int>>());
    }
    result.trace = std::move(trace);
    result.max_radius = result.trace.max_locality() > 2 ? result.trace.max_locality() - 3 : 0;
    if (!verify_dominating(g, result.nodes))
        throw InvariantViolation("mds approximation produced a non-dominating set");
    return result;
}

}  // namespace slocal
