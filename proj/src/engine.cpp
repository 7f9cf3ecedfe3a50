#include "slocal/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "slocal/errors.hpp"

namespace slocal {

namespace {
// Reserved memory keys used by the algorithm transforms.
const std::string kWriteQueue = "$wq";
const std::string kSimRecord = "$sim";
}  // namespace

const NodeView& Snapshot::at(int v) const {
    auto it = nodes.find(v);
    if (it == nodes.end())
        throw Error("snapshot of radius " + std::to_string(radius) + " around node " +
                    std::to_string(center) + " does not contain node " + std::to_string(v));
    return it->second;
}

std::vector<int> Snapshot::ball(int from, int r,
                                const std::function<bool(const NodeView&)>& admit) const {
    const NodeView& start = at(from);
    if (admit && !admit(start)) return {};
    std::map<int, int> dist;
    dist[from] = 0;
    std::vector<int> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        int du = dist[u];
        if (du >= r) continue;
        for (int w : at(u).neighbors) {
            if (dist.count(w)) continue;
            const NodeView& view = at(w);
            if (admit && !admit(view)) continue;
            dist[w] = du + 1;
            queue.push_back(w);
        }
    }
    std::vector<int> out;
    out.reserve(dist.size());
    for (const auto& [v, d] : dist) out.push_back(v);
    return out;
}

Graph Snapshot::induced_graph(const std::vector<int>& members, std::vector<int>* to_local) const {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> local;
    for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted)
        for (int w : at(u).neighbors) {
            auto it = local.find(w);
            if (it != local.end() && u < w) edges.emplace_back(local[u], it->second);
        }
    if (to_local) {
        to_local->clear();
        to_local->resize(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) (*to_local)[i] = sorted[i];
    }
    return Graph(static_cast<int>(sorted.size()), edges);
}

int SlocalAlgorithm::total_declared_locality() const {
    int total = 0;
    for (const auto& p : phases) total += p.declared_locality;
    return total;
}

int ExecutionTrace::max_locality() const {
    int m = 0;
    for (int x : observed_locality) m = std::max(m, x);
    return m;
}

bool ExecutionTrace::outputs_equal(const ExecutionTrace& other, std::vector<int>* diff) const {
    if (states.size() != other.states.size()) {
        if (diff) diff->push_back(-1);
        return false;
    }
    bool equal = true;
    for (std::size_t v = 0; v < states.size(); ++v) {
        const auto& a = states[v].output;
        const auto& b = other.states[v].output;
        bool same = (a == nullptr && b == nullptr) || (a != nullptr && b != nullptr && *a == *b);
        if (!same) {
            equal = false;
            if (diff) diff->push_back(static_cast<int>(v));
        }
    }
    return equal;
}

Value ExecutionTrace::to_json() const {
    Value out = Value::object();
    for (std::size_t v = 0; v < states.size(); ++v) {
        Value entry;
        entry["output"] = states[v].output ? *states[v].output : Value(nullptr);
        entry["locality"] = observed_locality[v];
        Value keys = Value::array();
        for (const auto& [k, _] : states[v].memory) keys.push_back(k);
        entry["memory"] = std::move(keys);
        out[std::to_string(v)] = std::move(entry);
    }
    return out;
}

std::string ExecutionTrace::canonical_outputs() const {
    Value arr = Value::array();
    for (const auto& s : states) arr.push_back(s.output ? *s.output : Value(nullptr));
    return arr.dump();
}

SlocalRun::SlocalRun(const Graph& g, const Ordering& order, std::uint64_t seed,
                     std::vector<Value> inputs)
    : graph_(&g), order_(order), seed_(seed) {
    order_.validate(g.node_count());
    if (!inputs.empty() && static_cast<int>(inputs.size()) != g.node_count())
        throw InvalidArgument("inputs must cover every node");
    states_.resize(g.node_count());
    node_rngs_.resize(g.node_count());
    observed_locality_.assign(g.node_count(), 0);
    for (int v = 0; v < g.node_count(); ++v)
        states_[v].input = make_value(inputs.empty() ? Value(nullptr) : std::move(inputs[v]));
}

Rng& SlocalRun::rng_for(int v) {
    if (!node_rngs_[v]) node_rngs_[v] = Rng::for_node(seed_, v);
    return *node_rngs_[v];
}

namespace {

class RunContext final : public ProcedureContext {
public:
    RunContext(const Graph& g, const Ordering& order, std::uint64_t seed,
               std::vector<NodeState>& states, std::vector<int>& observed, int& phase_max,
               const Phase& phase, int node, Rng& rng)
        : graph_(g), order_(order), seed_(seed), states_(states), observed_(observed),
          phase_max_(phase_max), phase_(phase), node_(node), rng_(rng) {}

    int node() const override { return node_; }
    int node_count() const override { return graph_.node_count(); }
    long long label() const override { return order_.labels[node_]; }

    Snapshot query(int radius) override {
        if (radius < 0) throw InvalidArgument("negative query radius");
        if (radius > phase_.declared_locality)
            throw LocalityViolation(node_, radius, phase_.declared_locality);
        observed_[node_] = std::max(observed_[node_], radius);
        phase_max_ = std::max(phase_max_, radius);
        Snapshot snap;
        snap.center = node_;
        snap.radius = radius;
        auto dist = graph_.distances_from(node_, radius);
        for (int v = 0; v < graph_.node_count(); ++v) {
            if (dist[v] < 0) continue;
            NodeView view;
            view.node = v;
            view.distance = dist[v];
            view.label = order_.labels[v];
            for (int w : graph_.neighbors(v))
                if (dist[w] >= 0) view.neighbors.push_back(w);
            view.input = states_[v].input;
            view.memory = states_[v].memory;
            view.output = states_[v].output;
            snap.nodes.emplace(v, std::move(view));
        }
        return snap;
    }

    void write(int target, const std::string& key, Value value) override {
        if (target < 0 || target >= graph_.node_count())
            throw InvalidArgument("write target out of range");
        if (target != node_) {
            if (write_ball_.empty())
                write_ball_ = graph_.distances_from(node_, std::max(phase_.write_radius, 0));
            if (write_ball_[target] < 0 || write_ball_[target] > phase_.write_radius)
                throw WriteViolation(node_, target, phase_.write_radius);
        }
        states_[target].memory[key] = make_value(std::move(value));
    }

    void set_output(Value value) override { states_[node_].output = make_value(std::move(value)); }

    Rng& rng() override { return rng_; }

    Rng node_stream(int v) const override { return Rng::for_node(seed_, v); }

private:
    const Graph& graph_;
    const Ordering& order_;
    std::uint64_t seed_;
    std::vector<NodeState>& states_;
    std::vector<int>& observed_;
    int& phase_max_;
    const Phase& phase_;
    int node_;
    Rng& rng_;
    std::vector<int> write_ball_;
};

}  // namespace

void SlocalRun::run_phase(const Phase& phase) {
    if (!phase.procedure) throw InvalidArgument("phase has no procedure");
    if (phase.declared_locality < 0 || phase.write_radius < 0)
        throw InvalidArgument("negative phase radii");
    int phase_max = 0;
    for (int v : order_.sequence()) {
        Rng& rng = rng_for(v);
        std::uint64_t before = rng.draws();
        RunContext ctx(*graph_, order_, seed_, states_, observed_locality_, phase_max,
                       phase, v, rng);
        phase.procedure(ctx);
        states_[v].rng_draws += rng.draws() - before;
    }
    phase_locality_.push_back(phase_max);
}

ExecutionTrace SlocalRun::trace() const {
    ExecutionTrace t;
    t.states = states_;
    t.observed_locality = observed_locality_;
    t.phase_locality = phase_locality_;
    t.order = order_;
    t.seed = seed_;
    return t;
}

ExecutionTrace run_slocal(const Graph& g, const SlocalAlgorithm& algo, const Ordering& order,
                          std::uint64_t seed) {
    SlocalRun run(g, order, seed, algo.inputs);
    for (const auto& phase : algo.phases) run.run_phase(phase);
    return run.trace();
}

// ---------------------------------------------------------------------------
// eliminate_writes

namespace {

// Wraps a procedure context: remote writes become tagged records stored in
// the writer's own memory under kWriteQueue; queries merge the records
// addressed to each visible node, ordered by (writer label, sequence).
class WriteEliminationContext final : public ProcedureContext {
public:
    WriteEliminationContext(ProcedureContext& inner, int locality, int write_radius)
        : inner_(inner), locality_(locality), write_radius_(write_radius) {}

    int node() const override { return inner_.node(); }
    int node_count() const override { return inner_.node_count(); }
    long long label() const override { return inner_.label(); }

    Snapshot query(int radius) override {
        if (radius > locality_)
            throw LocalityViolation(node(), radius, locality_);
        Snapshot wide = inner_.query(radius + write_radius_);
        Snapshot out;
        out.center = wide.center;
        out.radius = radius;
        auto inner_ball = wide.ball(node(), radius);
        for (int v : inner_ball) {
            NodeView view = wide.at(v);
            // Records addressed to v can sit anywhere within write_radius.
            struct Rec {
                long long label;
                long long seq;
                const Value* rec;
            };
            std::vector<Rec> addressed;
            for (int holder : wide.ball(v, write_radius_)) {
                const NodeView& h = wide.at(holder);
                auto it = h.memory.find(kWriteQueue);
                if (it == h.memory.end()) continue;
                for (const Value& rec : *it->second) {
                    if (rec.at("t").get<int>() != v) continue;
                    addressed.push_back({h.label, rec.at("s").get<long long>(), &rec});
                }
            }
            std::sort(addressed.begin(), addressed.end(), [](const Rec& a, const Rec& b) {
                return a.label != b.label ? a.label < b.label : a.seq < b.seq;
            });
            view.memory.erase(kWriteQueue);
            for (const auto& r : addressed)
                view.memory[r.rec->at("k").get<std::string>()] = make_value(r.rec->at("v"));
            // Restrict adjacency to the inner ball.
            std::vector<int> kept;
            for (int w : view.neighbors)
                if (std::binary_search(inner_ball.begin(), inner_ball.end(), w)) kept.push_back(w);
            view.neighbors = std::move(kept);
            out.nodes.emplace(v, std::move(view));
        }
        return out;
    }

    void write(int target, const std::string& key, Value value) override {
        // Distance enforcement for the original write radius: the target must
        // show up within write_radius_ of the center.
        if (target != node()) {
            Snapshot reach = inner_.query(write_radius_);
            if (!reach.contains(target))
                throw WriteViolation(node(), target, write_radius_);
        }
        queue_.push_back(Value{{"t", target}, {"k", key}, {"v", std::move(value)}, {"s", seq_++}});
        inner_.write(node(), kWriteQueue, queue_);
    }

    void set_output(Value value) override { inner_.set_output(std::move(value)); }
    Rng& rng() override { return inner_.rng(); }
    Rng node_stream(int v) const override { return inner_.node_stream(v); }

private:
    ProcedureContext& inner_;
    int locality_;
    int write_radius_;
    Value queue_ = Value::array();
    long long seq_ = 0;
};

}  // namespace

SlocalAlgorithm eliminate_writes(const SlocalAlgorithm& algo) {
    if (algo.phase_count() != 1)
        throw InvalidArgument("eliminate_writes expects a single-phase algorithm");
    const Phase& orig = algo.phases[0];
    if (orig.write_radius == 0) return algo;
    if (orig.write_radius > orig.declared_locality)
        throw InvalidArgument("write radius exceeds declared locality");

    SlocalAlgorithm out;
    out.name = algo.name + "+no-writes";
    out.inputs = algo.inputs;
    Phase folded;
    folded.declared_locality = orig.declared_locality + orig.write_radius;
    folded.write_radius = 0;
    folded.procedure = [proc = orig.procedure, r = orig.declared_locality,
                        w = orig.write_radius](ProcedureContext& ctx) {
        WriteEliminationContext wrapped(ctx, r, w);
        proc(wrapped);
    };
    out.phases.push_back(std::move(folded));
    return out;
}

// ---------------------------------------------------------------------------
// reduce_phases

namespace {

// Simulated per-node history across folded phases. Level j holds the memory
// and output after phase j; level 0 is the initial state.
struct SimLevels {
    int level = 0;
    std::uint64_t draws = 0;
    std::vector<std::map<std::string, Value>> memory;  // memory[j-1] = after phase j
    std::vector<Value> output;                         // Value(nullptr) = unset

    const std::map<std::string, Value>* memory_at(int j) const {
        static const std::map<std::string, Value> empty;
        if (j <= 0) return &empty;
        return &memory[j - 1];
    }
    Value output_at(int j) const {
        if (j <= 0) return Value(nullptr);
        return output[j - 1];
    }

    Value dump() const {
        Value levels = Value::array();
        for (int j = 0; j < level; ++j) {
            Value m = Value::object();
            for (const auto& [k, v] : memory[j]) m[k] = v;
            levels.push_back(Value{{"mem", std::move(m)}, {"out", output[j]}});
        }
        return Value{{"level", level}, {"draws", draws}, {"recs", std::move(levels)}};
    }

    static SimLevels parse(const Value& rec) {
        SimLevels s;
        s.level = rec.at("level").get<int>();
        s.draws = rec.at("draws").get<std::uint64_t>();
        for (const Value& lv : rec.at("recs")) {
            std::map<std::string, Value> m;
            for (auto it = lv.at("mem").begin(); it != lv.at("mem").end(); ++it)
                m[it.key()] = it.value();
            s.memory.push_back(std::move(m));
            s.output.push_back(lv.at("out"));
        }
        return s;
    }
};

class FoldState;

// Context handed to an inner phase procedure simulated at node `sim_node`.
// Queries synthesize views at the correct phase level; writes are restricted
// to the simulated node itself (folded phases must be pure).
class FoldSimContext final : public ProcedureContext {
public:
    FoldSimContext(ProcedureContext& outer, const Snapshot& snap, FoldState& fs, int sim_node,
                   int phase_idx, int phase_locality, Rng rng)
        : outer_(outer), snap_(snap), fs_(fs), sim_node_(sim_node), phase_idx_(phase_idx),
          phase_locality_(phase_locality), rng_(std::move(rng)) {}

    int node() const override { return sim_node_; }
    int node_count() const override { return outer_.node_count(); }
    long long label() const override { return snap_.at(sim_node_).label; }
    Snapshot query(int radius) override;

    void write(int target, const std::string& key, Value value) override {
        if (target != sim_node_) throw WriteViolation(sim_node_, target, 0);
        working_memory[key] = std::move(value);
    }

    void set_output(Value value) override {
        pending_output_ = std::move(value);
        output_was_set_ = true;
    }

    Rng& rng() override { return rng_; }
    Rng node_stream(int v) const override { return outer_.node_stream(v); }

    std::uint64_t draws() const { return rng_.draws(); }
    Value pending_output() const { return pending_output_; }
    bool output_set() const { return output_was_set_; }

    std::map<std::string, Value> working_memory;
    Value inherited_output = Value(nullptr);  // output carried from level j-1

private:
    ProcedureContext& outer_;
    const Snapshot& snap_;
    FoldState& fs_;
    int sim_node_;
    int phase_idx_;
    int phase_locality_;
    Rng rng_;
    Value pending_output_;
    bool output_was_set_ = false;

    NodeView self_view() const;
};

class FoldState {
public:
    FoldState(ProcedureContext& ctx, const Snapshot& snap, const std::vector<Phase>& phases)
        : ctx_(ctx), snap_(snap), phases_(phases) {
        for (const auto& [v, view] : snap.nodes) {
            auto it = view.memory.find(kSimRecord);
            if (it != view.memory.end()) sims_[v] = SimLevels::parse(*it->second);
        }
    }

    int level(int v) const {
        auto it = sims_.find(v);
        return it == sims_.end() ? 0 : it->second.level;
    }

    // Simulates phase j (1-based) for node x if not done yet. All nodes in
    // ball(x, r_j) must already be at level >= j-1.
    void ensure(int x, int j) {
        SimLevels& s = sims_[x];
        if (s.level >= j) return;
        if (s.level != j - 1)
            throw InvariantViolation("phase fold: node " + std::to_string(x) + " at level " +
                                     std::to_string(s.level) + " cannot advance to " +
                                     std::to_string(j));
        const Phase& phase = phases_[j - 1];
        Rng stream = ctx_.node_stream(x);
        stream.skip(s.draws);
        std::uint64_t before = stream.draws();
        FoldSimContext sim(ctx_, snap_, *this, x, j, phase.declared_locality, std::move(stream));
        sim.working_memory = *s.memory_at(j - 1);
        sim.inherited_output = s.output_at(j - 1);
        phase.procedure(sim);
        s.draws += sim.draws() - before;
        s.output.push_back(sim.output_set() ? sim.pending_output() : sim.inherited_output);
        s.memory.push_back(std::move(sim.working_memory));
        s.level = j;
        touched_.insert(x);
    }

    // View of node y as seen while simulating phase j: level j if already
    // available, else level j-1.
    NodeView view_at(int y, int j) const {
        NodeView view = snap_.at(y);
        int shown = std::min(level(y), j);
        if (shown < j - 1)
            throw InvariantViolation("phase fold: node " + std::to_string(y) + " below level " +
                                     std::to_string(j - 1));
        view.memory.clear();
        view.output = nullptr;
        auto it = sims_.find(y);
        if (it != sims_.end()) {
            for (const auto& [k, v] : *it->second.memory_at(shown)) view.memory[k] = make_value(v);
            Value out = it->second.output_at(shown);
            if (!out.is_null()) view.output = make_value(std::move(out));
        }
        return view;
    }

    // Writes the records of every advanced node back through the context.
    void record() {
        for (int x : touched_) ctx_.write(x, kSimRecord, sims_[x].dump());
    }

    SimLevels& sim(int x) { return sims_[x]; }

private:
    ProcedureContext& ctx_;
    const Snapshot& snap_;
    const std::vector<Phase>& phases_;
    std::map<int, SimLevels> sims_;
    std::set<int> touched_;
};

Snapshot FoldSimContext::query(int radius) {
    if (radius > phase_locality_) throw LocalityViolation(sim_node_, radius, phase_locality_);
    Snapshot out;
    out.center = sim_node_;
    out.radius = radius;
    auto members = snap_.ball(sim_node_, radius);
    for (int y : members) {
        NodeView view = (y == sim_node_) ? self_view() : fs_.view_at(y, phase_idx_);
        std::vector<int> kept;
        for (int w : view.neighbors)
            if (std::binary_search(members.begin(), members.end(), w)) kept.push_back(w);
        view.neighbors = std::move(kept);
        out.nodes.emplace(y, std::move(view));
    }
    return out;
}

// The simulated node sees its own in-progress state for the current phase.
NodeView FoldSimContext::self_view() const {
    NodeView view = snap_.at(sim_node_);
    view.memory.clear();
    for (const auto& [k, v] : working_memory) view.memory[k] = make_value(v);
    Value cur = output_was_set_ ? pending_output_ : inherited_output;
    view.output = cur.is_null() ? nullptr : make_value(std::move(cur));
    return view;
}

}  // namespace

SlocalAlgorithm reduce_phases(const SlocalAlgorithm& algo) {
    int k = algo.phase_count();
    if (k == 0) throw InvalidArgument("reduce_phases needs at least one phase");
    for (const auto& p : algo.phases)
        if (p.write_radius != 0)
            throw InvalidArgument("reduce_phases expects pure phases; run eliminate_writes first");
    if (k == 1) return algo;

    std::vector<int> radii;
    for (const auto& p : algo.phases) radii.push_back(p.declared_locality);
    // suffix[j] = r_{j+1} + ... + r_k (0-based j).
    std::vector<int> suffix(k + 1, 0);
    for (int j = k - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + radii[j];
    int total = suffix[0];
    int write_radius = total - radii[0];

    SlocalAlgorithm folded;
    folded.name = algo.name + "+folded";
    folded.inputs = algo.inputs;
    Phase phase;
    phase.declared_locality = total;
    phase.write_radius = write_radius;
    phase.procedure = [phases = algo.phases, radii, suffix, total, k](ProcedureContext& ctx) {
        Snapshot snap = ctx.query(total);
        FoldState fs(ctx, snap, phases);
        for (int j = 1; j < k; ++j) {
            auto needed = snap.ball(ctx.node(), suffix[j]);
            for (int x : needed) fs.ensure(x, j);
        }
        fs.ensure(ctx.node(), k);
        Value out = fs.sim(ctx.node()).output_at(k);
        if (!out.is_null()) ctx.set_output(std::move(out));
        fs.record();
    };
    folded.phases.push_back(std::move(phase));
    return eliminate_writes(folded);
}

}  // namespace slocal
