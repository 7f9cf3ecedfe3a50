#pragma once

#include <string>
#include <vector>

#include "slocal/engine.hpp"
#include "slocal/graph.hpp"

namespace slocal {
namespace algos {

// Bundled SLOCAL algorithms used by the compilers, the phase-reduction
// transform and the CLI catalog. All are deterministic given the engine seed.

// Greedy maximal independent set, locality 1: join iff no already-processed
// neighbor joined. Output: bool.
SlocalAlgorithm greedy_mis();

// Greedy (Delta+1)-coloring, locality 1: smallest color unused by colored
// neighbors. Output: int >= 1.
SlocalAlgorithm greedy_coloring();

// Two phases, locality 1 each: phase 1 records the node degree, phase 2
// outputs the sum of the neighbors' recorded degrees. Order-independent, so
// folded runs must match bit for bit.
SlocalAlgorithm two_phase_degree_sum();

// Two phases, locality 1 each: phase 1 greedy MIS, phase 2 points every
// non-MIS node at its smallest MIS neighbor. Output: {"mis": bool, "ptr": id}.
SlocalAlgorithm two_phase_mis_pointer();

// Single phase, locality 1, write radius 1: every node writes its label into
// each neighbor under a shared key and outputs [own stored value or null,
// sorted values seen on neighbors]. Exercises remote writes and last-writer
// precedence.
SlocalAlgorithm neighbor_write_last();

// Catalog lookup by name (greedy-mis, greedy-coloring, degree-sum,
// mis-pointer, neighbor-write). Throws InvalidArgument for unknown names.
SlocalAlgorithm by_name(const std::string& name);

// Output verifiers for the bundled problems.
bool mis_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why = nullptr);
bool coloring_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why = nullptr);
bool degree_sum_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why = nullptr);
bool mis_pointer_outputs_valid(const Graph& g, const ExecutionTrace& trace, std::string* why = nullptr);
bool verify_by_name(const std::string& name, const Graph& g, const ExecutionTrace& trace,
                    std::string* why = nullptr);

// Plain set helpers shared with the ILP module.
bool is_independent_set(const Graph& g, const std::vector<int>& nodes);
bool is_maximal_independent_set(const Graph& g, const std::vector<int>& nodes);
bool is_dominating_set(const Graph& g, const std::vector<int>& nodes);

}  // namespace algos
}  // namespace slocal
