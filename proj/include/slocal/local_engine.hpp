#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slocal/engine.hpp"
#include "slocal/graph.hpp"

namespace slocal {

/// Per-node handle inside one synchronous step. Reads go through the frozen
/// snapshot taken at step start; mutations apply to the node's own next
/// state only, so no update can observe another update of the same step.
class LocalStepContext {
public:
    LocalStepContext(int node, const Snapshot& view, NodeState& next, Rng& rng)
        : node_(node), view_(view), next_(next), rng_(rng) {}

    int node() const { return node_; }
    const Snapshot& view() const { return view_; }
    void set_output(Value v) { next_.output = make_value(std::move(v)); }
    void set_memory(const std::string& key, Value v) { next_.memory[key] = make_value(std::move(v)); }
    Rng& rng() { return rng_; }

private:
    int node_;
    const Snapshot& view_;
    NodeState& next_;
    Rng& rng_;
};

struct LocalStep {
    int gather_radius = 0;
    std::function<void(LocalStepContext&)> update;
};

/// A synchronous LOCAL program: a sequence of global steps. The round cost
/// is the sum of the gather radii.
struct LocalProgram {
    std::string name;
    std::vector<LocalStep> steps;
    std::vector<Value> inputs;

    long long round_cost() const;
};

/// Runs the steps synchronously: step s hands every node a snapshot of all
/// states within its gather radius as of the step start. Deterministic given
/// the seed; per-node randomness matches the SLOCAL engine's streams.
ExecutionTrace run_local(const Graph& g, const LocalProgram& program, std::uint64_t seed);

}  // namespace slocal
