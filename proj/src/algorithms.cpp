#include "slocal/algorithms.hpp"

#include <algorithm>
#include <set>

#include "slocal/errors.hpp"

namespace slocal {
namespace algos {

namespace {

bool joined(const NodeView& view) {
    return view.has_output() && view.out().is_boolean() && view.out().get<bool>();
}

void greedy_mis_step(ProcedureContext& ctx) {
    Snapshot snap = ctx.query(1);
    bool blocked = false;
    for (const auto& [v, view] : snap.nodes)
        if (v != ctx.node() && joined(view)) blocked = true;
    ctx.set_output(!blocked);
}

void greedy_coloring_step(ProcedureContext& ctx) {
    Snapshot snap = ctx.query(1);
    std::set<int> used;
    for (const auto& [v, view] : snap.nodes)
        if (v != ctx.node() && view.has_output() && view.out().is_number_integer())
            used.insert(view.out().get<int>());
    int color = 1;
    while (used.count(color)) ++color;
    ctx.set_output(color);
}

}  // namespace

SlocalAlgorithm greedy_mis() {
    SlocalAlgorithm a;
    a.name = "greedy-mis";
    a.phases.push_back({greedy_mis_step, 1, 0});
    return a;
}

SlocalAlgorithm greedy_coloring() {
    SlocalAlgorithm a;
    a.name = "greedy-coloring";
    a.phases.push_back({greedy_coloring_step, 1, 0});
    return a;
}

SlocalAlgorithm two_phase_degree_sum() {
    SlocalAlgorithm a;
    a.name = "degree-sum";
    Phase p1;
    p1.declared_locality = 1;
    p1.procedure = [](ProcedureContext& ctx) {
        Snapshot snap = ctx.query(1);
        int degree = static_cast<int>(snap.nodes.size()) - 1;
        ctx.write(ctx.node(), "deg", degree);
        ctx.set_output(degree);
    };
    Phase p2;
    p2.declared_locality = 1;
    p2.procedure = [](ProcedureContext& ctx) {
        Snapshot snap = ctx.query(1);
        long long sum = 0;
        for (const auto& [v, view] : snap.nodes)
            if (v != ctx.node() && view.has_memory("deg")) sum += view.mem("deg").get<long long>();
        ctx.set_output(sum);
    };
    a.phases = {p1, p2};
    return a;
}

SlocalAlgorithm two_phase_mis_pointer() {
    SlocalAlgorithm a;
    a.name = "mis-pointer";
    Phase p1;
    p1.declared_locality = 1;
    p1.procedure = [](ProcedureContext& ctx) {
        Snapshot snap = ctx.query(1);
        bool blocked = false;
        for (const auto& [v, view] : snap.nodes)
            if (v != ctx.node() && view.has_memory("mis") && view.mem("mis").get<bool>())
                blocked = true;
        ctx.write(ctx.node(), "mis", !blocked);
        ctx.set_output(!blocked);
    };
    Phase p2;
    p2.declared_locality = 1;
    p2.procedure = [](ProcedureContext& ctx) {
        Snapshot snap = ctx.query(1);
        bool mine = snap.at(ctx.node()).mem("mis").get<bool>();
        int ptr = ctx.node();
        if (!mine) {
            ptr = -1;
            for (const auto& [v, view] : snap.nodes) {
                if (v == ctx.node()) continue;
                if (view.has_memory("mis") && view.mem("mis").get<bool>() && (ptr < 0 || v < ptr))
                    ptr = v;
            }
        }
        ctx.set_output(Value{{"mis", mine}, {"ptr", ptr}});
    };
    a.phases = {p1, p2};
    return a;
}

SlocalAlgorithm neighbor_write_last() {
    SlocalAlgorithm a;
    a.name = "neighbor-write";
    Phase p;
    p.declared_locality = 1;
    p.write_radius = 1;
    p.procedure = [](ProcedureContext& ctx) {
        Snapshot snap = ctx.query(1);
        Value own(nullptr);
        const NodeView& self = snap.at(ctx.node());
        if (self.has_memory("last")) own = self.mem("last");
        std::vector<long long> seen;
        for (const auto& [v, view] : snap.nodes)
            if (v != ctx.node() && view.has_memory("last"))
                seen.push_back(view.mem("last").get<long long>());
        std::sort(seen.begin(), seen.end());
        for (const auto& [v, view] : snap.nodes)
            if (v != ctx.node()) ctx.write(v, "last", ctx.label());
        ctx.set_output(Value{{"own", own}, {"seen", seen}});
    };
    a.phases.push_back(std::move(p));
    return a;
}

SlocalAlgorithm by_name(const std::string& name) {
    if (name == "greedy-mis") return greedy_mis();
    if (name == "greedy-coloring") return greedy_coloring();
    if (name == "degree-sum") return two_phase_degree_sum();
    if (name == "mis-pointer") return two_phase_mis_pointer();
    if (name == "neighbor-write") return neighbor_write_last();
    throw InvalidArgument("unknown bundled algorithm: " + name);
}

bool is_independent_set(const Graph& g, const std::vector<int>& nodes) {
    std::vector<char> in(g.node_count(), 0);
    for (int v : nodes) in[v] = 1;
    for (int v : nodes)
        for (int w : g.neighbors(v))
            if (in[w]) return false;
    return true;
}

bool is_maximal_independent_set(const Graph& g, const std::vector<int>& nodes) {
    if (!is_independent_set(g, nodes)) return false;
    std::vector<char> in(g.node_count(), 0);
    for (int v : nodes) in[v] = 1;
    for (int v = 0; v < g.node_count(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (in[w]) dominated = true;
        if (!dominated) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& nodes) {
    std::vector<char> covered(g.node_count(), 0);
    for (int v : nodes) {
        covered[v] = 1;
        for (int w : g.neighbors(v)) covered[w] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    return true;
}

namespace {

std::vector<int> bool_output_set(const ExecutionTrace& trace) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(trace.states.size()); ++v) {
        const auto& o = trace.states[v].output;
        if (o && o->is_boolean() && o->get<bool>()) out.push_back(v);
    }
    return out;
}

bool fail(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

}  // namespace

bool mis_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why) {
    for (const auto& s : trace.states)
        if (!s.output || !s.output->is_boolean()) return fail(why, "missing MIS output");
    if (!is_maximal_independent_set(g, bool_output_set(trace)))
        return fail(why, "outputs are not a maximal independent set");
    return true;
}

bool coloring_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why) {
    int max_color = g.max_degree() + 1;
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& o = trace.states[v].output;
        if (!o || !o->is_number_integer()) return fail(why, "missing color output");
        int c = o->get<int>();
        if (c < 1 || c > max_color)
            return fail(why, "node " + std::to_string(v) + " has color out of range");
        for (int w : g.neighbors(v)) {
            const auto& ow = trace.states[w].output;
            if (ow && ow->is_number_integer() && ow->get<int>() == c)
                return fail(why, "edge (" + std::to_string(v) + "," + std::to_string(w) +
                                     ") is monochromatic");
        }
    }
    return true;
}

bool degree_sum_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why) {
    for (int v = 0; v < g.node_count(); ++v) {
        long long want = 0;
        for (int w : g.neighbors(v)) want += g.degree(w);
        const auto& o = trace.states[v].output;
        if (!o || !o->is_number_integer() || o->get<long long>() != want)
            return fail(why, "node " + std::to_string(v) + " has wrong neighbor degree sum");
    }
    return true;
}

bool mis_pointer_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why) {
    std::vector<int> mis;
    std::vector<char> in(g.node_count(), 0);
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& o = trace.states[v].output;
        if (!o || !o->is_object() || !o->contains("mis") || !o->contains("ptr"))
            return fail(why, "malformed mis-pointer output");
        if ((*o)["mis"].get<bool>()) {
            mis.push_back(v);
            in[v] = 1;
        }
    }
    if (!is_maximal_independent_set(g, mis)) return fail(why, "not a maximal independent set");
    for (int v = 0; v < g.node_count(); ++v) {
        int ptr = (*trace.states[v].output)["ptr"].get<int>();
        if (in[v]) {
            if (ptr != v) return fail(why, "MIS node points away from itself");
        } else {
            if (ptr < 0 || !in[ptr] || !g.has_edge(v, ptr))
                return fail(why, "node " + std::to_string(v) + " has an invalid MIS pointer");
        }
    }
    return true;
}

bool verify_by_name(const std::string& name, const Graph& g, const ExecutionTrace& trace,
                    std::string* why) {
    if (name == "greedy-mis") return mis_outputs_valid(g, trace, why);
    if (name == "greedy-coloring") return coloring_outputs_valid(g, trace, why);
    if (name == "degree-sum") return degree_sum_outputs_valid(g, trace, why);
    if (name == "mis-pointer") return mis_pointer_outputs_valid(g, trace, why);
    if (name == "neighbor-write") return true;  // checked by trace equality only
    throw InvalidArgument("unknown bundled algorithm: " + name);
}

}  // namespace algos
}  // namespace slocal
