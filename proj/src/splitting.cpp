#include "slocal/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <map>

#include "slocal/errors.hpp"

namespace slocal {

nlohmann::json SplitColoring::to_json() const {
    std::vector<int> red, blue;
    for (int v = 0; v < static_cast<int>(is_red.size()); ++v)
        (is_red[v] ? red : blue).push_back(v);
    return {{"red", red}, {"blue", blue}};
}

SplitColoring SplitColoring::from_json(const nlohmann::json& j, int right_count) {
    SplitColoring c;
    c.is_red.assign(right_count, 0);
    std::vector<char> seen(right_count, 0);
    for (int v : j.at("red").get<std::vector<int>>()) {
        if (v < 0 || v >= right_count) throw InvalidArgument("red id out of range");
        c.is_red[v] = 1;
        seen[v] = 1;
    }
    for (int v : j.at("blue").get<std::vector<int>>()) {
        if (v < 0 || v >= right_count) throw InvalidArgument("blue id out of range");
        if (seen[v]) throw InvalidArgument("node listed in both colors");
        seen[v] = 1;
    }
    for (char s : seen)
        if (!s) throw InvalidArgument("split coloring must cover the right side");
    return c;
}

nlohmann::json SplitReport::to_json() const {
    return {{"valid", valid},
            {"violators", violators},
            {"red_count", red_count},
            {"blue_count", blue_count}};
}

namespace {

SplitReport verify_with_threshold(const BipartiteGraph& b, const SplitColoring& coloring,
                                  const std::function<int(int)>& threshold) {
    if (static_cast<int>(coloring.is_red.size()) != b.right_count())
        throw InvalidArgument("split coloring does not cover the right side");
    SplitReport report;
    report.red_count.resize(b.left_count());
    report.blue_count.resize(b.left_count());
    for (int u = 0; u < b.left_count(); ++u) {
        int red = 0;
        for (int v : b.left_neighbors(u)) red += coloring.is_red[v] ? 1 : 0;
        int blue = b.left_degree(u) - red;
        report.red_count[u] = red;
        report.blue_count[u] = blue;
        int need = threshold(u);
        if (red < need || blue < need) {
            report.valid = false;
            report.violators.push_back(u);
        }
    }
    return report;
}

}  // namespace

SplitReport verify_lambda_split(const BipartiteGraph& b, const SplitColoring& coloring,
                                double lambda) {
    if (lambda < 0.0 || lambda > 0.5) throw InvalidArgument("lambda must lie in [0, 1/2]");
    return verify_with_threshold(b, coloring, [&](int u) {
        return static_cast<int>(std::floor(lambda * b.left_degree(u) + 1e-12));
    });
}

SplitReport verify_weak_split(const BipartiteGraph& b, const SplitColoring& coloring) {
    return verify_with_threshold(b, coloring, [](int) { return 1; });
}

SplitColoring random_split(const BipartiteGraph& b, std::uint64_t seed) {
    Rng rng(seed);
    SplitColoring c;
    c.is_red.resize(b.right_count());
    for (int v = 0; v < b.right_count(); ++v) c.is_red[v] = rng.bernoulli(0.5);
    return c;
}

// ---------------------------------------------------------------------------
// balanced_coloring_search

namespace {

bool meets_bounds(const std::vector<char>& red, const std::map<int, int>& index,
                  const std::vector<BalancedColoringConstraint>& constraints) {
    for (const auto& c : constraints) {
        long long sum = 0;
        for (int v : c.members) sum += red[index.at(v)] ? 1 : -1;
        if (std::llabs(sum) > c.bound + 1e-9) return false;
    }
    return true;
}

}  // namespace

std::vector<char> balanced_coloring_search(const std::vector<int>& cluster,
                                           const std::vector<BalancedColoringConstraint>& constraints,
                                           int retries, Rng& rng) {
    int s = static_cast<int>(cluster.size());
    std::map<int, int> index;
    for (int i = 0; i < s; ++i) index[cluster[i]] = i;
    for (const auto& c : constraints)
        for (int v : c.members)
            if (!index.count(v)) throw InvalidArgument("constraint member outside the cluster");

    std::vector<char> red(s, 0);
    for (int attempt = 0; attempt < retries; ++attempt) {
        for (int i = 0; i < s; ++i) red[i] = rng.bernoulli(0.5);
        if (meets_bounds(red, index, constraints)) return red;
    }

    // Conditional expectations with the two-sided exponential-moment
    // estimator: term_j = e^{-l b}(E[e^{l S}] + E[e^{-l S}]), l = b/|M|.
    // Any violated constraint forces its term above 1, so keeping the sum
    // below 1 certifies success.
    {
        int m = static_cast<int>(constraints.size());
        std::vector<double> lambda(m), fixed_sum(m, 0.0);
        std::vector<int> free_count(m);
        std::vector<std::vector<int>> constraints_of(s);
        for (int j = 0; j < m; ++j) {
            const auto& c = constraints[j];
            lambda[j] = c.members.empty() || c.bound <= 0.0
                            ? 0.0
                            : c.bound / static_cast<double>(c.members.size());
            free_count[j] = static_cast<int>(c.members.size());
            for (int v : c.members) constraints_of[index.at(v)].push_back(j);
        }
        auto term = [&](int j, double extra, int free_left) {
            double l = lambda[j];
            if (l == 0.0) return 2.0;  // degenerate; handled by later fallbacks
            double sum = fixed_sum[j] + extra;
            double cosh_part = static_cast<double>(free_left) * std::log(std::cosh(l));
            double plus = std::exp(l * sum + cosh_part - l * constraints[j].bound);
            double minus = std::exp(-l * sum + cosh_part - l * constraints[j].bound);
            return plus + minus;
        };
        double estimator = 0.0;
        bool degenerate = false;
        for (int j = 0; j < m; ++j) {
            if (lambda[j] == 0.0 && !constraints[j].members.empty()) degenerate = true;
            estimator += term(j, 0.0, free_count[j]);
        }
        if (!degenerate && estimator < 1.0) {
            std::fill(red.begin(), red.end(), 0);
            for (int i = 0; i < s; ++i) {
                double with_red = estimator, with_blue = estimator;
                for (int j : constraints_of[i]) {
                    double before = term(j, 0.0, free_count[j]);
                    with_red += term(j, +1.0, free_count[j] - 1) - before;
                    with_blue += term(j, -1.0, free_count[j] - 1) - before;
                }
                bool take_red = with_red <= with_blue;
                red[i] = take_red;
                estimator = take_red ? with_red : with_blue;
                for (int j : constraints_of[i]) {
                    fixed_sum[j] += take_red ? 1.0 : -1.0;
                    --free_count[j];
                }
            }
            if (meets_bounds(red, index, constraints)) return red;
        }
    }

    // Exhaustive fallback for small clusters.
    if (s <= 20) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
            for (int i = 0; i < s; ++i) red[i] = (mask >> i) & 1;
            if (meets_bounds(red, index, constraints)) return red;
        }
    }
    throw InfeasibleError("balanced_coloring_search: no assignment meets the bounds");
}

// ---------------------------------------------------------------------------
// conflict graph and the SLOCAL splitter

Graph conflict_graph(const BipartiteGraph& b) {
    int n = b.right_count();
    std::vector<std::pair<int, int>> edges;
    std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> row(words);
    for (int v = 0; v < n; ++v) {
        std::fill(row.begin(), row.end(), 0);
        for (int u : b.right_neighbors(v))
            for (int w : b.left_neighbors(u))
                if (w > v) row[w >> 6] |= std::uint64_t{1} << (w & 63);
        for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t bits = row[k];
            while (bits) {
                int bit = __builtin_ctzll(bits);
                bits &= bits - 1;
                edges.emplace_back(v, static_cast<int>(k * 64 + bit));
            }
        }
    }
    return Graph(n, edges);
}

nlohmann::json SlocalSplitResult::to_json() const {
    return {{"coloring", coloring.to_json()},
            {"clusters_touched", clusters_touched},
            {"max_clusters_touched", max_clusters_touched},
            {"lambda_achieved", lambda_achieved},
            {"rounds_charged", rounds_charged},
            {"decomposition_colors", decomposition.num_colors}};
}

SlocalSplitResult slocal_lambda_split(const BipartiteGraph& b, const Ordering& order,
                                      SlocalSplitParams params, std::uint64_t seed) {
    int n_total = b.left_count() + b.right_count();
    double ln_n = std::log(std::max(n_total, 2));
    double alpha = params.alpha;

    Graph conflicts = conflict_graph(b);
    SlocalSplitResult result;
    result.decomposition = ball_growing_decomposition(conflicts);
    const NetworkDecomposition& decomp = result.decomposition;
    result.rounds_charged = charged_decomposition_rounds(1, std::max(b.right_count(), 1));

    int max_diam = decomp.max_weak_diameter();
    // Inputs: every right node knows its cluster, the cluster's weak
    // diameter, and its left neighbor list.
    std::vector<Value> inputs(b.right_count());
    for (int v = 0; v < b.right_count(); ++v) {
        int c = decomp.cluster_of[v];
        inputs[v] = Value{{"cluster", c},
                          {"diam", decomp.weak_diameter[c]},
                          {"lefts", b.left_neighbors(v)}};
    }

    SlocalRun run(conflicts, order, seed, inputs);
    Phase phase;
    phase.declared_locality = max_diam;
    phase.write_radius = max_diam;
    int retries = params.retries;
    phase.procedure = [alpha, ln_n, retries, seed](ProcedureContext& ctx) {
        Snapshot own = ctx.query(0);
        const NodeView& me = own.at(ctx.node());
        if (me.has_memory("split")) {
            ctx.set_output(me.mem("split").get<bool>());
            return;
        }
        int cluster = me.input->at("cluster").get<int>();
        int diam = me.input->at("diam").get<int>();
        Snapshot snap = ctx.query(diam);
        std::vector<int> members;
        for (const auto& [v, view] : snap.nodes)
            if (view.input->at("cluster").get<int>() == cluster) members.push_back(v);

        // Group the members' left neighbors into per-left constraints.
        std::map<int, std::vector<int>> by_left;
        for (int v : members)
            for (int u : snap.at(v).input->at("lefts").get<std::vector<int>>())
                by_left[u].push_back(v);
        std::vector<BalancedColoringConstraint> constraints;
        for (auto& [u, vs] : by_left) {
            BalancedColoringConstraint c;
            c.left_node = u;
            c.bound = alpha * (std::sqrt(static_cast<double>(vs.size()) * ln_n) + ln_n);
            c.members = std::move(vs);
            constraints.push_back(std::move(c));
        }
        Rng cluster_rng = Rng::sub(seed, 0x517Cu ^ static_cast<std::uint64_t>(cluster));
        std::vector<char> red = balanced_coloring_search(members, constraints, retries, cluster_rng);
        for (std::size_t i = 0; i < members.size(); ++i)
            ctx.write(members[i], "split", static_cast<bool>(red[i]));
        ctx.set_output(static_cast<bool>(red[std::distance(
            members.begin(), std::find(members.begin(), members.end(), ctx.node()))]));
    };
    run.run_phase(phase);
    result.trace = run.trace();

    result.coloring.is_red.resize(b.right_count());
    for (int v = 0; v < b.right_count(); ++v) {
        const auto& out = run.state(v).output;
        if (!out || !out->is_boolean())
            throw InvariantViolation("split output missing at node " + std::to_string(v));
        result.coloring.is_red[v] = out->get<bool>();
    }

    // Hard assertions: per-(u, cluster) and combined discrepancy bounds.
    result.clusters_touched.assign(b.left_count(), 0);
    for (int u = 0; u < b.left_count(); ++u) {
        std::map<int, long long> cluster_sum;
        std::map<int, long long> cluster_size;
        for (int v : b.left_neighbors(u)) {
            int c = decomp.cluster_of[v];
            cluster_sum[c] += result.coloring.is_red[v] ? 1 : -1;
            cluster_size[c] += 1;
        }
        long long total = 0;
        for (const auto& [c, sum] : cluster_sum) {
            double bound =
                alpha * (std::sqrt(static_cast<double>(cluster_size[c]) * ln_n) + ln_n);
            if (std::llabs(sum) > bound + 1e-9)
                throw InvariantViolation("per-cluster discrepancy bound violated at left node " +
                                         std::to_string(u));
            total += sum;
        }
        int k_u = static_cast<int>(cluster_sum.size());
        result.clusters_touched[u] = k_u;
        result.max_clusters_touched = std::max(result.max_clusters_touched, k_u);
        double combined =
            alpha * (std::sqrt(static_cast<double>(k_u) * b.left_degree(u) * ln_n) +
                     static_cast<double>(k_u) * ln_n);
        if (std::llabs(total) > combined + 1e-9)
            throw InvariantViolation("combined discrepancy bound violated at left node " +
                                     std::to_string(u));
    }

    int delta = b.min_left_degree();
    if (delta > 0) {
        int k_max = std::max(result.max_clusters_touched, 1);
        double ratio = alpha * std::sqrt(static_cast<double>(k_max) * ln_n / delta) +
                       alpha * static_cast<double>(k_max) * ln_n / delta;
        result.lambda_achieved = std::max(0.0, 0.5 - ratio / 2.0);
    }
    return result;
}

// ---------------------------------------------------------------------------
// reduce_lambda_to_weak

std::vector<int> neighborhood_partition_sizes(int degree, int delta) {
    if (delta < 2) throw InvalidArgument("partitioning needs delta >= 2");
    if (degree < delta) throw InvalidArgument("degree below delta cannot be partitioned");
    std::vector<int> sizes(degree / delta, delta);
    int rem = degree % delta;
    if (rem > 0) {
        if (2 * rem > delta) {
            sizes.push_back(rem);
        } else {
            // Rebalance the last full part with the remainder.
            int total = delta + rem;
            sizes.back() = (total + 1) / 2;
            sizes.push_back(total / 2);
        }
    }
    for (int s : sizes)
        if (2 * s <= delta || s > delta)
            throw InvariantViolation("partition produced a part outside (delta/2, delta]");
    return sizes;
}

SplitColoring reduce_lambda_to_weak(const BipartiteGraph& b, int delta,
                                    const WeakSplitOracle& oracle) {
    if (delta < 2) throw InvalidArgument("reduce_lambda_to_weak needs delta >= 2");

    std::vector<std::pair<int, int>> derived_edges;
    int parts = 0;
    for (int u = 0; u < b.left_count(); ++u) {
        int d = b.left_degree(u);
        if (d < delta) continue;  // vacuous constraint, dropped
        const auto& neighbors = b.left_neighbors(u);
        auto sizes = neighborhood_partition_sizes(d, delta);
        int at = 0;
        for (int size : sizes) {
            for (int i = 0; i < size; ++i) derived_edges.emplace_back(parts, neighbors[at + i]);
            at += size;
            ++parts;
        }
    }
    BipartiteGraph derived(parts, b.right_count(), derived_edges);
    SplitColoring coloring = oracle(derived);
    SplitReport weak = verify_weak_split(derived, coloring);
    if (!weak.valid)
        throw OracleFailure("weak splitting oracle output fails verification (" +
                            std::to_string(weak.violators.size()) + " violators)");
    SplitReport check = verify_lambda_split(b, coloring, 1.0 / delta);
    if (!check.valid)
        throw InvariantViolation("composed splitting misses the 1/delta guarantee");
    return coloring;
}

}  // namespace slocal
