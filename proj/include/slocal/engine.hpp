#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slocal/graph.hpp"
#include "slocal/ordering.hpp"
#include "slocal/rng.hpp"

namespace slocal {

// Node inputs, memory entries and outputs are opaque JSON values, shared
// immutably so snapshots are cheap. Mutation replaces the slot.
using Value = nlohmann::json;
using ValuePtr = std::shared_ptr<const Value>;

inline ValuePtr make_value(Value v) { return std::make_shared<const Value>(std::move(v)); }

/// Full state of one node: private input x_v, local memory S_v, output y_v,
/// and the number of random draws consumed so far.
struct NodeState {
    ValuePtr input;
    std::map<std::string, ValuePtr> memory;
    ValuePtr output;  // null pointer = no output yet
    std::uint64_t rng_draws = 0;
};

/// One node's entry in a queried neighborhood snapshot.
struct NodeView {
    int node = 0;
    int distance = 0;
    long long label = 0;
    std::vector<int> neighbors;  // adjacency restricted to the snapshot
    ValuePtr input;
    std::map<std::string, ValuePtr> memory;
    ValuePtr output;

    bool has_output() const { return output != nullptr; }
    const Value& out() const { return *output; }
    bool has_memory(const std::string& key) const { return memory.count(key) > 0; }
    const Value& mem(const std::string& key) const { return *memory.at(key); }
};

/// Immutable copy of all node states within some radius of a center, taken
/// at query time. Includes the ball's internal adjacency.
struct Snapshot {
    int center = 0;
    int radius = 0;
    std::map<int, NodeView> nodes;

    bool contains(int v) const { return nodes.count(v) > 0; }
    const NodeView& at(int v) const;

    // B_r(from) inside the snapshot's induced adjacency. `admit` may filter
    // traversable nodes (used for balls of a shrinking "current" graph).
    std::vector<int> ball(int from, int r, const std::function<bool(const NodeView&)>& admit = nullptr) const;

    // Graph induced by `members` (relabeled to 0..k-1 in sorted order).
    Graph induced_graph(const std::vector<int>& members, std::vector<int>* to_local = nullptr) const;
};

/// The only surface a node procedure sees. query/write/set_output mirror the
/// model; label() is the node's position in the provided order and
/// node_stream() exposes the (order-independent) private random strings,
/// which live in the initial states.
class ProcedureContext {
public:
    virtual ~ProcedureContext() = default;
    virtual int node() const = 0;
    virtual int node_count() const = 0;
    virtual long long label() const = 0;
    virtual Snapshot query(int radius) = 0;
    virtual void write(int target, const std::string& key, Value value) = 0;
    virtual void set_output(Value value) = 0;
    virtual Rng& rng() = 0;
    virtual Rng node_stream(int node) const = 0;
};

using NodeProcedure = std::function<void(ProcedureContext&)>;

struct Phase {
    NodeProcedure procedure;
    int declared_locality = 0;
    int write_radius = 0;  // 0 = pure (own memory only)
};

struct SlocalAlgorithm {
    std::string name;
    std::vector<Phase> phases;
    std::vector<Value> inputs;  // empty -> null input everywhere

    int phase_count() const { return static_cast<int>(phases.size()); }
    int total_declared_locality() const;
};

/// Outcome of a run: final states plus the locality accounting.
struct ExecutionTrace {
    std::vector<NodeState> states;
    std::vector<int> observed_locality;  // per node, max over phases
    std::vector<int> phase_locality;     // per phase, max over nodes
    Ordering order;
    std::uint64_t seed = 0;

    int max_locality() const;
    ValuePtr output(int v) const { return states[v].output; }
    bool outputs_equal(const ExecutionTrace& other, std::vector<int>* diff = nullptr) const;

    // node -> {output, locality, memory-keys}; canonical (sorted keys).
    Value to_json() const;
    std::string canonical_outputs() const;
};

/// Incremental runner: phases may be appended one at a time, with the global
/// state inspectable in between (used by phase-driven solvers).
class SlocalRun {
public:
    SlocalRun(const Graph& g, const Ordering& order, std::uint64_t seed,
              std::vector<Value> inputs = {});

    void run_phase(const Phase& phase);

    const Graph& graph() const { return *graph_; }
    const NodeState& state(int v) const { return states_[v]; }
    int phases_run() const { return static_cast<int>(phase_locality_.size()); }
    const std::vector<int>& phase_localities() const { return phase_locality_; }

    ExecutionTrace trace() const;

private:
    friend class RunContext;
    const Graph* graph_;
    Ordering order_;
    std::uint64_t seed_;
    std::vector<NodeState> states_;
    std::vector<std::optional<Rng>> node_rngs_;
    std::vector<int> observed_locality_;
    std::vector<int> phase_locality_;

    Rng& rng_for(int v);
};

/// Processes nodes by ascending label, phase after phase; deterministic in
/// (graph, algorithm, order, seed). Locality and write-radius violations
/// throw; the trace records the observed per-node locality.
ExecutionTrace run_slocal(const Graph& g, const SlocalAlgorithm& algo, const Ordering& order,
                          std::uint64_t seed);

/// Rewrites a single-phase algorithm with write radius w into one with no
/// remote writes and locality <= R + w: writes become tagged records in the
/// writer's own memory; queries at rho are emulated at rho + w and merge the
/// records addressed to each node, later writers in pi taking precedence.
/// Outputs equal the original algorithm's on every (graph, order, seed).
SlocalAlgorithm eliminate_writes(const SlocalAlgorithm& algo);

/// Folds a k-phase pure algorithm into a single pure phase with locality
/// r_1 + 2 * sum_{i>=2} r_i. The folded run simulates earlier phases inside
/// each processed ball (ascending node id) and records the per-node results
/// through the write mechanism, which is then eliminated. Outputs solve the
/// same problem but need not match the k-phase run bit for bit.
SlocalAlgorithm reduce_phases(const SlocalAlgorithm& algo);

}  // namespace slocal
