#include "slocal/compiler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <memory>

#include "slocal/errors.hpp"

namespace slocal {

nlohmann::json CompilationReport::to_json() const {
    return {{"rounds_measured", rounds_measured},
            {"rounds_charged", rounds_charged},
            {"phases", phases},
            {"equality", output_equality},
            {"diff", diff}};
}

namespace {

struct SimState {
    std::map<std::string, ValuePtr> memory;
    ValuePtr output;
};

// Replays a single-phase pure SLOCAL algorithm for a subset of nodes in a
// prescribed sequence. Reads outside `gathered` indicate that the gather
// radius did not justify the simulation and raise a soundness error; the
// `forbidden` hook flags same-phase foreign reads for the decomposition
// compiler.
class SubsetSimulator {
public:
    SubsetSimulator(const Graph& g, const Ordering& order, std::uint64_t seed, const Phase& phase,
                    const Snapshot& gathered, std::function<bool(int)> forbidden = nullptr)
        : graph_(g), order_(order), seed_(seed), phase_(phase), gathered_(gathered),
          forbidden_(std::move(forbidden)) {}

    void simulate(int x);
    const SimState* overlay(int v) const {
        auto it = overlay_.find(v);
        return it == overlay_.end() ? nullptr : &it->second;
    }

private:
    class Context;
    const Graph& graph_;
    const Ordering& order_;
    std::uint64_t seed_;
    const Phase& phase_;
    const Snapshot& gathered_;
    std::function<bool(int)> forbidden_;
    std::map<int, SimState> overlay_;
};

class SubsetSimulator::Context final : public ProcedureContext {
public:
    Context(SubsetSimulator& sim, int node, Rng rng)
        : sim_(sim), node_(node), rng_(std::move(rng)) {}

    int node() const override { return node_; }
    int node_count() const override { return sim_.graph_.node_count(); }
    long long label() const override { return sim_.order_.labels[node_]; }

    Snapshot query(int radius) override {
        if (radius > sim_.phase_.declared_locality)
            throw LocalityViolation(node_, radius, sim_.phase_.declared_locality);
        Snapshot out;
        out.center = node_;
        out.radius = radius;
        auto dist = sim_.graph_.distances_from(node_, radius);
        for (int v = 0; v < sim_.graph_.node_count(); ++v) {
            if (dist[v] < 0) continue;
            if (!sim_.gathered_.contains(v))
                throw CompilationSoundnessError(
                    "simulated node " + std::to_string(node_) + " read node " + std::to_string(v) +
                    " outside the gathered ball");
            if (sim_.forbidden_ && sim_.forbidden_(v))
                throw SeparationViolation("simulated node " + std::to_string(node_) +
                                          " read node " + std::to_string(v) +
                                          " owned by a same-phase foreign cluster");
            NodeView view;
            view.node = v;
            view.distance = dist[v];
            view.label = sim_.order_.labels[v];
            for (int w : sim_.graph_.neighbors(v))
                if (dist[w] >= 0) view.neighbors.push_back(w);
            const NodeView& base = sim_.gathered_.at(v);
            view.input = base.input;
            if (const SimState* sim_state = sim_.overlay(v)) {
                view.memory = sim_state->memory;
                view.output = sim_state->output;
            } else {
                view.memory = base.memory;
                view.output = base.output;
            }
            out.nodes.emplace(v, std::move(view));
        }
        return out;
    }

    void write(int target, const std::string& key, Value value) override {
        if (target != node_) throw WriteViolation(node_, target, 0);
        sim_.overlay_[node_].memory[key] = make_value(std::move(value));
    }

    void set_output(Value value) override {
        sim_.overlay_[node_].output = make_value(std::move(value));
    }

    Rng& rng() override { return rng_; }
    Rng node_stream(int v) const override { return Rng::for_node(sim_.seed_, v); }

private:
    SubsetSimulator& sim_;
    int node_;
    Rng rng_;
};

void SubsetSimulator::simulate(int x) {
    // Seed the overlay with the committed base state so partial writes merge.
    if (!overlay_.count(x)) {
        const NodeView& base = gathered_.at(x);
        overlay_[x].memory = base.memory;
        overlay_[x].output = base.output;
    }
    Context ctx(*this, x, Rng::for_node(seed_, x));
    phase_.procedure(ctx);
}

const Phase& single_pure_phase(const SlocalAlgorithm& algo) {
    if (algo.phase_count() != 1)
        throw InvalidArgument("compiler expects a single-phase algorithm; fold phases first");
    if (algo.phases[0].write_radius != 0)
        throw InvalidArgument("compiler expects a pure algorithm; eliminate writes first");
    return algo.phases[0];
}

}  // namespace

CompilationResult compile_via_ordering(const Graph& g, const SlocalAlgorithm& algo,
                                       const Ordering& order, std::uint64_t seed,
                                       std::optional<int> ell) {
    const Phase& phase = single_pure_phase(algo);
    int r = phase.declared_locality;
    order.validate(g.node_count());

    auto power = std::make_shared<Graph>(r >= 1 ? g.power(r) : Graph(g.node_count()));
    int measured = ordering_diameter(*power, order);
    if (ell && measured > *ell)
        throw InvalidArgument("ordering diameter " + std::to_string(measured) +
                              " exceeds the declared bound " + std::to_string(*ell));
    int bound = ell.value_or(measured);
    int gather = bound * r + r;

    auto graph_copy = std::make_shared<Graph>(g);
    auto order_copy = std::make_shared<Ordering>(order);
    auto phase_copy = std::make_shared<Phase>(phase);

    LocalProgram program;
    program.name = algo.name + "@ordering";
    program.inputs = algo.inputs;
    LocalStep step;
    step.gather_radius = gather;
    step.update = [graph_copy, order_copy, phase_copy, power, bound, seed](LocalStepContext& ctx) {
        int v = ctx.node();
        const Ordering& order = *order_copy;
        // Dependency closure: nodes reachable from v along label-decreasing
        // paths in G^r, i.e. everything the sequential run must fix before v.
        // Every such node lies within G^r-distance `bound` of v (the reversed
        // path is label-increasing); anything farther breaks soundness.
        auto reach = power->distances_from(v, bound);
        std::set<int> seen{v};
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : power->neighbors(u)) {
                if (order.labels[w] < order.labels[u] && seen.insert(w).second) {
                    if (reach[w] < 0)
                        throw CompilationSoundnessError(
                            "dependency closure of node " + std::to_string(v) +
                            " escaped the ball justified by the ordering diameter");
                    stack.push_back(w);
                }
            }
        }
        std::vector<int> closure(seen.begin(), seen.end());
        std::sort(closure.begin(), closure.end(),
                  [&](int a, int b) { return order.labels[a] < order.labels[b]; });

        SubsetSimulator sim(*graph_copy, order, seed, *phase_copy, ctx.view());
        for (int u : closure) sim.simulate(u);
        const SimState* mine = sim.overlay(v);
        if (mine && mine->output) ctx.set_output(*mine->output);
        if (mine)
            for (const auto& [key, val] : mine->memory) ctx.set_memory(key, *val);
    };
    program.steps.push_back(std::move(step));

    CompilationResult result;
    result.compiled = run_local(g, program, seed);
    result.reference = run_slocal(g, algo, order, seed);
    result.report.rounds_measured = program.round_cost();
    result.report.rounds_charged = 0;
    result.report.phases = 1;
    result.report.output_equality =
        result.compiled.outputs_equal(result.reference, &result.report.diff);
    result.program = std::move(program);
    return result;
}

CompilationResult compile_via_decomposition(const Graph& g, const SlocalAlgorithm& algo,
                                            std::uint64_t seed, double beta) {
    const Phase& phase = single_pure_phase(algo);
    int r = phase.declared_locality;

    Graph h = g.power(r + 1);
    auto decomp = std::make_shared<NetworkDecomposition>(ball_growing_decomposition(h));
    decomp->base_graph_radius = r + 1;
    Ordering order = decomposition_to_ordering(*decomp, h);

    int q = decomp->num_colors;
    // Weak diameters are measured in H = G^{r+1}; distances in G scale by at
    // most r+1 per hop.
    std::vector<int> color_diameter(q + 1, 0);
    for (int c = 0; c < decomp->cluster_count(); ++c) {
        int color = decomp->color_of_cluster[c];
        color_diameter[color] = std::max(color_diameter[color], decomp->weak_diameter[c]);
    }

    auto graph_copy = std::make_shared<Graph>(g);
    auto order_copy = std::make_shared<Ordering>(order);
    auto phase_copy = std::make_shared<Phase>(phase);

    LocalProgram program;
    program.name = algo.name + "@decomposition";
    program.inputs = algo.inputs;
    for (int color = 1; color <= q; ++color) {
        LocalStep step;
        step.gather_radius = color_diameter[color] * (r + 1) + r;
        step.update = [graph_copy, order_copy, phase_copy, decomp, color, seed](LocalStepContext& ctx) {
            int v = ctx.node();
            int cluster = decomp->cluster_of[v];
            if (decomp->color_of_cluster[cluster] != color) return;
            // Members of this cluster, in processing order (ascending label).
            std::vector<int> members;
            for (int u = 0; u < static_cast<int>(decomp->cluster_of.size()); ++u)
                if (decomp->cluster_of[u] == cluster) members.push_back(u);
            std::sort(members.begin(), members.end(), [&](int a, int b) {
                return order_copy->labels[a] < order_copy->labels[b];
            });
            auto forbidden = [&decomp, cluster, color](int read) {
                int rc = decomp->cluster_of[read];
                return rc != cluster && decomp->color_of_cluster[rc] == color;
            };
            SubsetSimulator sim(*graph_copy, *order_copy, seed, *phase_copy, ctx.view(), forbidden);
            for (int u : members) sim.simulate(u);
            const SimState* mine = sim.overlay(v);
            if (mine && mine->output) ctx.set_output(*mine->output);
            if (mine)
                for (const auto& [key, val] : mine->memory) ctx.set_memory(key, *val);
        };
        program.steps.push_back(std::move(step));
    }

    CompilationResult result;
    result.compiled = run_local(g, program, seed);
    result.reference = run_slocal(g, algo, order, seed);
    result.report.rounds_measured = program.round_cost();
    result.report.rounds_charged = charged_decomposition_rounds(r + 1, g.node_count(), beta);
    result.report.phases = q;
    result.report.output_equality =
        result.compiled.outputs_equal(result.reference, &result.report.diff);

    long long round_bound = static_cast<long long>(q) *
                            (static_cast<long long>(decomp->max_weak_diameter()) * (r + 1) + r);
    if (result.report.rounds_measured > round_bound)
        throw InvariantViolation("compiled rounds exceed the decomposition bound");
    result.program = std::move(program);
    return result;
}

}  // namespace slocal
