#include "slocal/local_engine.hpp"

#include <algorithm>

#include "slocal/errors.hpp"

namespace slocal {

long long LocalProgram::round_cost() const {
    long long total = 0;
    for (const auto& s : steps) total += s.gather_radius;
    return total;
}

ExecutionTrace run_local(const Graph& g, const LocalProgram& program, std::uint64_t seed) {
    int n = g.node_count();
    if (!program.inputs.empty() && static_cast<int>(program.inputs.size()) != n)
        throw InvalidArgument("inputs must cover every node");

    std::vector<NodeState> states(n);
    for (int v = 0; v < n; ++v)
        states[v].input =
            make_value(program.inputs.empty() ? Value(nullptr) : program.inputs[v]);
    std::vector<Rng> rngs;
    rngs.reserve(n);
    for (int v = 0; v < n; ++v) rngs.push_back(Rng::for_node(seed, v));

    std::vector<int> observed(n, 0);
    for (const auto& step : program.steps) {
        if (step.gather_radius < 0) throw InvalidArgument("negative gather radius");
        if (!step.update) throw InvalidArgument("step has no update");
        // Frozen copy of the step-start states; updates write into `next`.
        std::vector<NodeState> frozen = states;
        std::vector<NodeState> next = states;
        for (int v = 0; v < n; ++v) {
            Snapshot snap;
            snap.center = v;
            snap.radius = step.gather_radius;
            auto dist = g.distances_from(v, step.gather_radius);
            for (int u = 0; u < n; ++u) {
                if (dist[u] < 0) continue;
                NodeView view;
                view.node = u;
                view.distance = dist[u];
                view.label = u;
                for (int w : g.neighbors(u))
                    if (dist[w] >= 0) view.neighbors.push_back(w);
                view.input = frozen[u].input;
                view.memory = frozen[u].memory;
                view.output = frozen[u].output;
                snap.nodes.emplace(u, std::move(view));
            }
            observed[v] = std::max(observed[v], step.gather_radius);
            LocalStepContext ctx(v, snap, next[v], rngs[v]);
            step.update(ctx);
        }
        states = std::move(next);
    }

    ExecutionTrace trace;
    trace.states = std::move(states);
    trace.observed_locality = std::move(observed);
    trace.phase_locality.clear();
    for (const auto& s : program.steps) trace.phase_locality.push_back(s.gather_radius);
    trace.order = Ordering::identity(n);
    trace.seed = seed;
    return trace;
}

}  // namespace slocal
