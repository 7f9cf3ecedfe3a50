// slocal-lab: generate instances, run the solvers and compilers, verify
// outputs, and wire the reduction pipelines. Every run pairs the solver with
// its verifier and reports JSON; identical invocations produce byte-identical
// reports.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slocal/algorithms.hpp"
#include "slocal/cf_coloring.hpp"
#include "slocal/compiler.hpp"
#include "slocal/decomposition.hpp"
#include "slocal/engine.hpp"
#include "slocal/errors.hpp"
#include "slocal/generators.hpp"
#include "slocal/ilp_approx.hpp"
#include "slocal/io.hpp"
#include "slocal/ordering.hpp"
#include "slocal/reductions.hpp"
#include "slocal/splitting.hpp"

using nlohmann::json;
using namespace slocal;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitOracle = 4;
constexpr int kExitInternal = 5;

struct CommonOpts {
    std::string instance;
    std::string order_kind = "id";
    std::uint64_t seed = 1;
    std::string json_out;
    int repeat = 1;
    bool parallel = false;
    double epsilon = 0.5;
    double lambda = -1.0;
    double theta = 1.0 / 20;
    double alpha = 4.0;
    int q = 0;
    int delta = 8;
    int cap = 25;
    int retries = 200;
};

void emit(const json& report, const std::string& path) {
    std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
    } else {
        io::spit(path, text);
    }
}

Ordering make_order(const std::string& kind, int n, std::uint64_t seed, const Graph* graph) {
    if (kind == "id") return Ordering::identity(n);
    if (kind == "random") return Ordering::random(n, Rng::sub(seed, 0x0bdeu).next_u64());
    if (kind == "decomp") {
        if (!graph) throw InvalidArgument("decomp ordering needs a graph instance");
        auto decomp = ball_growing_decomposition(*graph);
        return decomposition_to_ordering(decomp, *graph);
    }
    if (kind.rfind("file:", 0) == 0) {
        return io::read_ordering_file(kind.substr(5), n);
    }
    throw InvalidArgument("unknown order kind: " + kind);
}

int max_floor_log2(int n) {
    int r = 0;
    while ((1 << (r + 1)) <= n) ++r;
    return r;
}

// One solver run: fills "solution"/"metrics" and returns validity.
using RunFn = std::function<bool(std::uint64_t seed, json& out)>;

int run_with_repeat(const CommonOpts& opts, const std::string& command, json params,
                    const RunFn& fn) {
    params["seed"] = opts.seed;
    json report{{"schema", 1}, {"command", command}, {"instance", opts.instance},
                {"params", std::move(params)}};
    bool all_valid = true;
    if (opts.repeat <= 1) {
        json body;
        all_valid = fn(opts.seed, body);
        body["seed"] = opts.seed;
        body["valid"] = all_valid;
        report["run"] = std::move(body);
    } else {
        std::vector<json> bodies(opts.repeat);
        std::vector<char> valid(opts.repeat, 0);
        auto work = [&](int i) {
            valid[i] = fn(opts.seed + static_cast<std::uint64_t>(i), bodies[i]);
            bodies[i]["seed"] = opts.seed + static_cast<std::uint64_t>(i);
            bodies[i]["valid"] = static_cast<bool>(valid[i]);
        };
        if (opts.parallel) {
            unsigned hw = std::max(1u, std::thread::hardware_concurrency());
            if (const char* env = std::getenv("SLOCAL_LAB_THREADS"))
                hw = std::max(1, std::atoi(env));
            std::vector<std::thread> pool;
            std::atomic<int> next{0};
            for (unsigned t = 0; t < std::min<unsigned>(hw, opts.repeat); ++t)
                pool.emplace_back([&]() {
                    for (int i = next++; i < opts.repeat; i = next++) work(i);
                });
            for (auto& th : pool) th.join();
        } else {
            for (int i = 0; i < opts.repeat; ++i) work(i);
        }
        int valid_count = 0;
        json runs = json::array();
        for (int i = 0; i < opts.repeat; ++i) {
            valid_count += valid[i];
            runs.push_back(std::move(bodies[i]));
        }
        all_valid = valid_count == opts.repeat;
        report["runs"] = std::move(runs);
        report["valid_count"] = valid_count;
        report["valid_fraction"] = static_cast<double>(valid_count) / opts.repeat;
    }
    report["valid"] = all_valid;
    emit(report, opts.json_out);
    return all_valid ? kExitValid : kExitInvalid;
}

// ---------------------------------------------------------------------------
// run subcommand

int cmd_run(const std::string& algorithm, const CommonOpts& opts) {
    json params{{"algorithm", algorithm}, {"order", opts.order_kind}};

    if (algorithm == "ball-decomp") {
        Graph g = io::read_graph_file(opts.instance);
        return run_with_repeat(opts, "run", params, [&](std::uint64_t, json& out) {
            auto decomp = ball_growing_decomposition(g);
            int n = g.node_count();
            int d_bound = 2 * max_floor_log2(n), c_bound = max_floor_log2(n) + 1;
            auto report = verify_decomposition(g, decomp, d_bound, c_bound);
            Ordering order = decomposition_to_ordering(decomp, g);
            int diameter = ordering_diameter(g, order);
            out["solution"] = decomp.to_json();
            out["verification"] = report.to_json();
            out["metrics"] = {{"colors", decomp.num_colors},
                              {"clusters", decomp.cluster_count()},
                              {"max_weak_diameter", decomp.max_weak_diameter()},
                              {"ordering_diameter", diameter},
                              {"ordering_diameter_bound", ordering_diameter_bound(decomp)},
                              {"d_bound", d_bound},
                              {"c_bound", c_bound}};
            return report.valid && diameter <= ordering_diameter_bound(decomp);
        });
    }

    if (algorithm == "greedy-mis" || algorithm == "greedy-coloring" ||
        algorithm == "degree-sum" || algorithm == "mis-pointer" ||
        algorithm == "neighbor-write") {
        Graph g = io::read_graph_file(opts.instance);
        return run_with_repeat(opts, "run", params, [&](std::uint64_t seed, json& out) {
            Ordering order = make_order(opts.order_kind, g.node_count(), seed, &g);
            auto algo = algos::by_name(algorithm);
            auto trace = run_slocal(g, algo, order, seed);
            std::string why;
            bool ok = algos::verify_by_name(algorithm, g, trace, &why);
            out["solution"] = trace.to_json();
            out["metrics"] = {{"locality", trace.max_locality()}};
            if (!ok) out["violation"] = why;
            return ok;
        });
    }

    if (algorithm == "slocal-mis" || algorithm == "slocal-mds") {
        Graph g = io::read_graph_file(opts.instance);
        return run_with_repeat(opts, "run", params, [&](std::uint64_t seed, json& out) {
            Ordering order = make_order(opts.order_kind, g.node_count(), seed, &g);
            ApproxParams ap{opts.epsilon, opts.cap};
            ApproxResult result = algorithm == "slocal-mis"
                                      ? slocal_mis_approx(g, order, ap, seed)
                                      : slocal_mds_approx(g, order, ap, seed);
            bool ok = algorithm == "slocal-mis" ? verify_independent(g, result.nodes)
                                                : verify_dominating(g, result.nodes);
            out["solution"] = result.to_json();
            json metrics{{"locality", result.trace.max_locality()},
                         {"size", result.nodes.size()}};
            if (g.node_count() <= 24) {
                if (algorithm == "slocal-mis") {
                    int exact = independence_number(g, 24);
                    metrics["exact"] = exact;
                    metrics["ratio_vs_exact"] =
                        exact == 0 ? 1.0 : static_cast<double>(result.nodes.size()) / exact;
                } else {
                    int exact = static_cast<int>(exact_mds(g, 24).size());
                    metrics["exact"] = exact;
                    metrics["ratio_vs_exact"] =
                        exact == 0 ? 1.0 : static_cast<double>(result.nodes.size()) / exact;
                }
            }
            out["metrics"] = std::move(metrics);
            return ok;
        });
    }

    if (algorithm == "random-cf" || algorithm == "lowrank-cf" || algorithm == "slocal-cf") {
        Hypergraph h = io::read_hypergraph_file(opts.instance);
        return run_with_repeat(opts, "run", params, [&](std::uint64_t seed, json& out) {
            MultiColoring coloring;
            json metrics;
            if (algorithm == "random-cf") {
                int q = opts.q > 0 ? opts.q
                                   : static_cast<int>(std::ceil(
                                         8.0 * std::log(h.node_count() + h.edge_count() + 1)));
                coloring = random_cf(h, q, seed);
                metrics["q"] = q;
            } else if (algorithm == "lowrank-cf") {
                auto result = lowrank_cf(h);
                coloring = std::move(result.coloring);
                metrics["phases"] = result.phases;
                metrics["degree_sequence"] = result.degree_sequence;
            } else {
                Graph primal = h.primal_graph();
                Ordering order = make_order(opts.order_kind, h.node_count(), seed, &primal);
                auto result = slocal_cf(h, order, {opts.theta, opts.retries}, seed);
                coloring = std::move(result.coloring);
                metrics["phases"] = result.phases;
                metrics["locality"] = result.trace.max_locality();
                metrics["unresolved_sequence"] = result.unresolved_sequence;
            }
            auto report = verify_cf(h, coloring);
            metrics["palette"] = coloring.palette;
            out["solution"] = coloring.to_json();
            out["verification"] = report.to_json();
            out["metrics"] = std::move(metrics);
            return report.valid;
        });
    }

    if (algorithm == "random-split" || algorithm == "slocal-split") {
        BipartiteGraph b = io::read_bipartite_file(opts.instance);
        return run_with_repeat(opts, "run", params, [&](std::uint64_t seed, json& out) {
            int n_total = b.left_count() + b.right_count();
            int delta = std::max(b.min_left_degree(), 1);
            if (algorithm == "random-split") {
                SplitColoring coloring = random_split(b, seed);
                double lambda = opts.lambda >= 0
                                    ? opts.lambda
                                    : std::max(0.0, 0.5 - std::sqrt(std::log(std::max(
                                                              n_total, 2)) /
                                                          delta));
                auto report = verify_lambda_split(b, coloring, lambda);
                out["solution"] = coloring.to_json();
                out["verification"] = report.to_json();
                out["metrics"] = {{"lambda", lambda}};
                return report.valid;
            }
            Ordering order = make_order(opts.order_kind, b.right_count(), seed, nullptr);
            auto result = slocal_lambda_split(b, order, {opts.alpha, opts.retries}, seed);
            double lambda = opts.lambda >= 0 ? opts.lambda : result.lambda_achieved;
            auto report = verify_lambda_split(b, result.coloring, lambda);
            out["solution"] = result.to_json();
            out["verification"] = report.to_json();
            out["metrics"] = {{"lambda", lambda},
                              {"locality", result.trace.max_locality()},
                              {"max_clusters_touched", result.max_clusters_touched},
                              {"rounds_charged", result.rounds_charged}};
            return report.valid;
        });
    }

    if (algorithm == "reduce-split") {
        BipartiteGraph b = io::read_bipartite_file(opts.instance);
        return run_with_repeat(opts, "run", params, [&](std::uint64_t seed, json& out) {
            WeakSplitOracle oracle = [&](const BipartiteGraph& derived) {
                Ordering order = Ordering::identity(derived.right_count());
                return slocal_lambda_split(derived, order, {opts.alpha, opts.retries}, seed)
                    .coloring;
            };
            SplitColoring coloring = reduce_lambda_to_weak(b, opts.delta, oracle);
            auto report = verify_lambda_split(b, coloring, 1.0 / opts.delta);
            out["solution"] = coloring.to_json();
            out["verification"] = report.to_json();
            out["metrics"] = {{"delta", opts.delta}, {"lambda", 1.0 / opts.delta}};
            return report.valid;
        });
    }

    throw InvalidArgument("unknown algorithm: " + algorithm);
}

// ---------------------------------------------------------------------------
// compile subcommand

int cmd_compile(const std::string& compiler, const std::string& algorithm,
                const CommonOpts& opts) {
    Graph g = io::read_graph_file(opts.instance);
    json params{{"compiler", compiler}, {"algorithm", algorithm}, {"order", opts.order_kind}};
    return run_with_repeat(opts, "compile", params, [&](std::uint64_t seed, json& out) {
        auto algo = algos::by_name(algorithm);
        if (algo.phase_count() > 1) algo = reduce_phases(algo);
        CompilationResult result;
        if (compiler == "ordering") {
            Ordering order = make_order(opts.order_kind, g.node_count(), seed, &g);
            result = compile_via_ordering(g, algo, order, seed);
        } else if (compiler == "decomp") {
            result = compile_via_decomposition(g, algo, seed);
        } else {
            throw InvalidArgument("unknown compiler: " + compiler);
        }
        std::string why;
        bool solution_ok = algos::verify_by_name(algorithm, g, result.compiled, &why);
        out["report"] = result.report.to_json();
        out["metrics"] = {{"rounds_measured", result.report.rounds_measured},
                          {"rounds_charged", result.report.rounds_charged},
                          {"phases", result.report.phases}};
        if (!solution_ok) out["violation"] = why;
        return result.report.output_equality && solution_ok;
    });
}

// ---------------------------------------------------------------------------
// pipeline subcommand

MultiColoring replay_multicoloring(const std::string& path, int node_count) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open replay file: " + path);
    json j = json::parse(in);
    return MultiColoring::from_json(j, node_count);
}

int cmd_pipeline(const std::string& reduction, const std::string& oracle_spec,
                 const CommonOpts& opts) {
    json params{{"reduction", reduction}, {"oracle", oracle_spec}};

    if (reduction == "decomp-from-cf") {
        Graph g = io::read_graph_file(opts.instance);
        int q = opts.q > 0 ? opts.q : 6;
        params["epsilon"] = opts.epsilon;
        params["q"] = q;
        return run_with_repeat(opts, "pipeline", params, [&](std::uint64_t seed, json& out) {
            CfOracle oracle;
            if (oracle_spec == "slocal-cf") {
                oracle = [&, seed](const Hypergraph& h, int palette) {
                    Ordering order = Ordering::identity(h.node_count());
                    auto result = slocal_cf(h, order, {opts.theta, opts.retries}, seed);
                    // Compress onto [1..palette] is not possible in general;
                    // the reduction accepts any palette and slices by its own
                    // q, so wide colorings are folded modulo the palette.
                    (void)palette;
                    return result.coloring;
                };
            } else if (oracle_spec == "random-cf") {
                oracle = [&, seed](const Hypergraph& h, int palette) {
                    (void)palette;
                    int q_oracle = static_cast<int>(
                        std::ceil(8.0 * std::log(h.node_count() + h.edge_count() + 1)));
                    return random_cf(h, q_oracle, seed);
                };
            } else if (oracle_spec.rfind("replay:", 0) == 0) {
                std::string path = oracle_spec.substr(7);
                oracle = [path](const Hypergraph& h, int) {
                    return replay_multicoloring(path, h.node_count());
                };
            } else {
                throw InvalidArgument("unknown cf oracle: " + oracle_spec);
            }
            auto result = decomposition_from_cf(g, opts.epsilon, q, oracle);
            out["assignment"] = result.assignment.to_json();
            out["decomposition"] = result.decomposition.to_json();
            out["verification"] = result.verification.to_json();
            out["metrics"] = {{"hypergraphs_used", result.hypergraphs_used},
                              {"max_radius", result.max_radius},
                              {"colors", result.decomposition.num_colors}};
            return result.verification.valid;
        });
    }

    if (reduction == "cf-from-split") {
        Hypergraph h = io::read_hypergraph_file(opts.instance);
        params["delta"] = opts.delta;
        return run_with_repeat(opts, "pipeline", params, [&](std::uint64_t seed, json& out) {
            SplitOracle oracle;
            if (oracle_spec == "slocal-split") {
                oracle = [&, seed](const BipartiteGraph& b) {
                    Ordering order = Ordering::identity(b.right_count());
                    return slocal_lambda_split(b, order, {opts.alpha, opts.retries}, seed)
                        .coloring;
                };
            } else if (oracle_spec == "random-split") {
                oracle = [seed](const BipartiteGraph& b) { return random_split(b, seed); };
            } else if (oracle_spec.rfind("replay:", 0) == 0) {
                std::string path = oracle_spec.substr(7);
                oracle = [path](const BipartiteGraph& b) {
                    std::ifstream in(path);
                    if (!in) throw Error("cannot open replay file: " + path);
                    return SplitColoring::from_json(json::parse(in), b.right_count());
                };
            } else {
                throw InvalidArgument("unknown split oracle: " + oracle_spec);
            }
            auto result = cf_from_split(h, opts.delta, oracle);
            auto report = verify_cf(h, result.coloring);
            out["solution"] = result.coloring.to_json();
            out["verification"] = report.to_json();
            out["metrics"] = {{"phases", result.phases},
                              {"rank_sequence", result.rank_sequence},
                              {"oracle_calls", result.oracle_calls},
                              {"palette", result.coloring.palette}};
            return report.valid;
        });
    }

    throw InvalidArgument("unknown reduction: " + reduction);
}

// ---------------------------------------------------------------------------
// verify subcommand

int cmd_verify(const std::string& what, const std::string& instance,
               const std::string& solution_path, const CommonOpts& opts) {
    std::ifstream in(solution_path);
    if (!in) throw Error("cannot open solution file: " + solution_path);
    json solution = json::parse(in);
    json report{{"schema", 1}, {"command", "verify"}, {"what", what}, {"instance", instance}};
    bool valid = false;

    if (what == "cf") {
        Hypergraph h = io::read_hypergraph_file(instance);
        auto coloring = MultiColoring::from_json(solution, h.node_count());
        auto r = verify_cf(h, coloring);
        report["verification"] = r.to_json();
        valid = r.valid;
    } else if (what == "split" || what == "weak-split") {
        BipartiteGraph b = io::read_bipartite_file(instance);
        auto coloring = SplitColoring::from_json(solution, b.right_count());
        auto r = what == "split" ? verify_lambda_split(b, coloring, std::max(opts.lambda, 0.0))
                                 : verify_weak_split(b, coloring);
        report["verification"] = r.to_json();
        valid = r.valid;
    } else if (what == "mis" || what == "mds") {
        Graph g = io::read_graph_file(instance);
        auto nodes = solution.at("nodes").get<std::vector<int>>();
        valid = what == "mis" ? verify_independent(g, nodes) : verify_dominating(g, nodes);
        report["verification"] = {{"valid", valid}};
    } else if (what == "decomposition") {
        Graph g = io::read_graph_file(instance);
        NetworkDecomposition decomp;
        decomp.cluster_of.assign(g.node_count(), -1);
        int max_color = 0;
        for (const auto& cluster : solution.at("clusters")) {
            int id = cluster.at("id").get<int>();
            int color = cluster.at("color").get<int>();
            while (static_cast<int>(decomp.color_of_cluster.size()) <= id)
                decomp.color_of_cluster.push_back(0);
            decomp.color_of_cluster[id] = color;
            max_color = std::max(max_color, color);
            for (int v : cluster.at("nodes").get<std::vector<int>>()) decomp.cluster_of[v] = id;
        }
        decomp.num_colors = max_color;
        int n = g.node_count();
        int d_bound = opts.q > 0 ? opts.q : 2 * max_floor_log2(n);
        int c_bound = max_floor_log2(n) + 1;
        auto r = verify_decomposition(g, decomp, d_bound, c_bound);
        report["verification"] = r.to_json();
        valid = r.valid;
    } else {
        throw InvalidArgument("unknown verification target: " + what);
    }

    report["valid"] = valid;
    emit(report, opts.json_out);
    return valid ? kExitValid : kExitInvalid;
}

// ---------------------------------------------------------------------------
// gen subcommand

int cmd_gen(const std::string& kind, int n, int rows, int cols, double p, int degree, int m,
            int k, int max_size, int nu, int nv, std::uint64_t seed, const std::string& out) {
    if (kind == "hyper") {
        Hypergraph h = gen::almost_uniform_hypergraph(n, m, k, max_size > 0 ? max_size : k, seed);
        std::ostringstream ss;
        io::write_hypergraph(ss, h);
        if (out.empty()) std::cout << ss.str();
        else io::spit(out, ss.str());
        return kExitValid;
    }
    if (kind == "bipartite") {
        BipartiteGraph b = gen::left_regular_bipartite(nu, nv, degree, seed);
        std::ostringstream ss;
        io::write_bipartite(ss, b);
        if (out.empty()) std::cout << ss.str();
        else io::spit(out, ss.str());
        return kExitValid;
    }
    Graph g = [&]() {
        if (kind == "path") return gen::path(n);
        if (kind == "cycle") return gen::cycle(n);
        if (kind == "grid") return gen::grid(rows, cols);
        if (kind == "complete") return gen::complete(n);
        if (kind == "gnp") return gen::gnp(n, p, seed);
        if (kind == "regular") return gen::random_regular(n, degree, seed);
        throw InvalidArgument("unknown graph kind: " + kind);
    }();
    std::ostringstream ss;
    io::write_graph(ss, g);
    if (out.empty()) std::cout << ss.str();
    else io::spit(out, ss.str());
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for LOCAL and SLOCAL distributed graph algorithms"};
    app.require_subcommand(1);

    CommonOpts opts;

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    std::string gen_kind;
    int gen_n = 10, gen_rows = 3, gen_cols = 3, gen_degree = 3, gen_m = 20, gen_k = 3;
    int gen_max_size = 0, gen_nu = 10, gen_nv = 30;
    double gen_p = 0.1;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("kind", gen_kind,
                        "path|cycle|grid|complete|gnp|regular|hyper|bipartite")
        ->required();
    gen_cmd->add_option("--n", gen_n, "node count");
    gen_cmd->add_option("--rows", gen_rows, "grid rows");
    gen_cmd->add_option("--cols", gen_cols, "grid cols");
    gen_cmd->add_option("--p", gen_p, "gnp edge probability");
    gen_cmd->add_option("--degree", gen_degree, "regular degree / bipartite left degree");
    gen_cmd->add_option("--m", gen_m, "hyperedge count");
    gen_cmd->add_option("--k", gen_k, "min hyperedge size");
    gen_cmd->add_option("--max-size", gen_max_size, "max hyperedge size (default k)");
    gen_cmd->add_option("--nu", gen_nu, "bipartite left count");
    gen_cmd->add_option("--nv", gen_nv, "bipartite right count");
    gen_cmd->add_option("--seed", gen_seed, "random seed");
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    // run
    auto* run_cmd = app.add_subcommand("run", "run a solver with its verifier");
    std::string run_algorithm;
    run_cmd->add_option("algorithm", run_algorithm, "catalog name")->required();
    run_cmd->add_option("instance", opts.instance, "instance file")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a solution file");
    std::string verify_what, verify_instance, verify_solution;
    verify_cmd->add_option("what", verify_what, "cf|split|weak-split|mis|mds|decomposition")
        ->required();
    verify_cmd->add_option("instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("solution", verify_solution, "solution JSON file")->required();

    // compile
    auto* compile_cmd = app.add_subcommand("compile", "compile an SLOCAL algorithm to LOCAL");
    std::string compile_kind, compile_algorithm;
    compile_cmd->add_option("compiler", compile_kind, "ordering|decomp")->required();
    compile_cmd->add_option("algorithm", compile_algorithm, "bundled algorithm")->required();
    compile_cmd->add_option("instance", opts.instance, "graph file")->required();

    // pipeline
    auto* pipeline_cmd = app.add_subcommand("pipeline", "run a reduction end to end");
    std::string pipeline_kind, pipeline_oracle = "slocal-cf";
    pipeline_cmd->add_option("reduction", pipeline_kind, "decomp-from-cf|cf-from-split")
        ->required();
    pipeline_cmd->add_option("instance", opts.instance, "instance file")->required();
    pipeline_cmd->add_option("--oracle", pipeline_oracle, "solver name or replay:FILE");

    for (CLI::App* cmd : {run_cmd, compile_cmd, pipeline_cmd}) {
        cmd->add_option("--order", opts.order_kind, "id|random|decomp|file:PATH");
        cmd->add_option("--seed", opts.seed, "random seed");
        cmd->add_option("--json", opts.json_out, "write the report here instead of stdout");
        cmd->add_option("--repeat", opts.repeat, "repeat with consecutive seeds");
        cmd->add_flag("--parallel", opts.parallel, "fan out repeats over threads");
        cmd->add_option("--epsilon", opts.epsilon, "approximation / decomposition epsilon");
        cmd->add_option("--lambda", opts.lambda, "splitting lambda (default derived)");
        cmd->add_option("--theta", opts.theta, "slocal-cf unique fraction threshold");
        cmd->add_option("--alpha", opts.alpha, "splitting discrepancy constant");
        cmd->add_option("--q", opts.q, "palette size per hypergraph");
        cmd->add_option("--delta", opts.delta, "splitting delta (lambda = 1/delta)");
        cmd->add_option("--cap", opts.cap, "exact-solver ball node cap");
        cmd->add_option("--retries", opts.retries, "randomized search retries");
    }
    verify_cmd->add_option("--lambda", opts.lambda, "splitting lambda");
    verify_cmd->add_option("--q", opts.q, "decomposition diameter bound override");
    verify_cmd->add_option("--json", opts.json_out, "write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed())
            return cmd_gen(gen_kind, gen_n, gen_rows, gen_cols, gen_p, gen_degree, gen_m, gen_k,
                           gen_max_size, gen_nu, gen_nv, gen_seed, gen_out);
        if (run_cmd->parsed()) return cmd_run(run_algorithm, opts);
        if (verify_cmd->parsed()) return cmd_verify(verify_what, verify_instance, verify_solution, opts);
        if (compile_cmd->parsed()) return cmd_compile(compile_kind, compile_algorithm, opts);
        if (pipeline_cmd->parsed()) return cmd_pipeline(pipeline_kind, pipeline_oracle, opts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const OracleFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracle;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
