#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slocal/decomposition.hpp"
#include "slocal/engine.hpp"
#include "slocal/local_engine.hpp"

namespace slocal {

struct CompilationReport {
    long long rounds_measured = 0;
    long long rounds_charged = 0;
    int phases = 0;
    bool output_equality = false;
    std::vector<int> diff;  // nodes whose outputs differ from the reference run

    nlohmann::json to_json() const;
};

struct CompilationResult {
    LocalProgram program;
    CompilationReport report;
    ExecutionTrace compiled;
    ExecutionTrace reference;
};

/// Compiles a single-phase pure SLOCAL algorithm with locality r into a
/// one-step LOCAL program: every node gathers radius ell*r + r, computes its
/// dependency closure (nodes reachable by label-decreasing paths in G^r) and
/// replays the sequential execution on it. The compiled outputs equal the
/// direct SLOCAL run bit for bit. `ell`, if given, must dominate the
/// measured ordering diameter of G^r.
CompilationResult compile_via_ordering(const Graph& g, const SlocalAlgorithm& algo,
                                       const Ordering& order, std::uint64_t seed,
                                       std::optional<int> ell = std::nullopt);

/// Compiles a single-phase pure SLOCAL algorithm with locality r through a
/// ball-growing decomposition of G^{r+1}: one phase per color; in phase i
/// every member of a color-i cluster gathers the cluster plus its
/// r-neighborhood and replays the cluster's portion of the sequential run
/// under the decomposition ordering. Same-color clusters cannot interact
/// (their G-distance exceeds r+1); a read across them raises
/// SeparationViolation. The decomposition itself is charged, not simulated.
CompilationResult compile_via_decomposition(const Graph& g, const SlocalAlgorithm& algo,
                                            std::uint64_t seed, double beta = 1.0);

}  // namespace slocal
