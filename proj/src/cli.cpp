#include "maxkcut/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "maxkcut/analysis.hpp"
#include "maxkcut/error.hpp"
#include "maxkcut/format.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/model.hpp"
#include "maxkcut/penalty.hpp"
#include "maxkcut/rng.hpp"
#include "maxkcut/solve.hpp"

namespace mkc::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

std::string bits_string(const Bits& bits) {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

/// Options shared by every subcommand that builds a model.
struct ModelArgs {
    std::string graph;
    int k = 3;
    std::string encoding = "one_hot";
    std::string scheme = "tight";
    std::optional<double> eps;
    double t = 0.0;
    std::string penalty_file;

    void attach(CLI::App* app) {
        app->add_option("--graph", graph, "edge-list file")->required();
        app->add_option("--k", k, "number of partitions")->check(CLI::Range(2, 1 << 20));
        app->add_option("--encoding", encoding)->check(CLI::IsMember({"one_hot", "reduced"}));
        app->add_option("--scheme", scheme,
                        "tight, conjectured, naive, interp, or an explicit scheme name such as tight_rqubo");
        app->add_option("--eps", eps, "strictness margin (default 1e-6*(1+bound) per vertex)");
        app->add_option("--t", t, "interpolation parameter for --scheme interp")->check(CLI::Range(0.0, 1.0));
        app->add_option("--penalty", penalty_file, "penalty file overriding --scheme");
    }

    Encoding enc() const { return *parse_encoding(encoding); }
};

PenaltyVector make_penalty(const Graph& g, int k, Encoding enc, const std::string& scheme, std::optional<double> eps,
                           double t) {
    const bool one_hot = enc == Encoding::one_hot;
    if (scheme == "tight") return one_hot ? penalty_tight_qubo(g, k, eps) : penalty_tight_rqubo(g, eps);
    if (scheme == "conjectured") return one_hot ? penalty_conjectured_qubo(g, k, eps) : penalty_conjectured_rqubo(g, eps);
    if (scheme == "naive") return penalty_naive(g, k);
    if (scheme == "interp") {
        const auto tight = one_hot ? penalty_tight_qubo(g, k, eps) : penalty_tight_rqubo(g, eps);
        return penalty_interpolate(tight, penalty_naive(g, k), t);
    }
    if (scheme == "tight_qubo") return penalty_tight_qubo(g, k, eps);
    if (scheme == "tight_rqubo") return penalty_tight_rqubo(g, eps);
    if (scheme == "conjectured_qubo") return penalty_conjectured_qubo(g, k, eps);
    if (scheme == "conjectured_rqubo") return penalty_conjectured_rqubo(g, eps);
    throw CLI::ValidationError("--scheme", "unknown scheme \"" + scheme + "\"");
}

struct Loaded {
    Graph graph;
    PenaltyVector penalty;
    QuboModel model;
};

LoadResult load_reporting(const std::string& path, std::ostream& err) {
    auto lr = load_graph_file(path);
    if (lr.dropped_zero_weight) err << "warning: dropped " << lr.dropped_zero_weight << " zero-weight edge(s)\n";
    return lr;
}

Loaded load_model(const ModelArgs& a, std::ostream& err) {
    auto lr = load_reporting(a.graph, err);
    PenaltyVector c = a.penalty_file.empty() ? make_penalty(lr.graph, a.k, a.enc(), a.scheme, a.eps, a.t)
                                             : parse_penalty(read_file(a.penalty_file));
    QuboModel m = build_model(lr.graph, a.k, c, a.enc());
    return {std::move(lr.graph), std::move(c), std::move(m)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Penalty-tight QUBO reformulations of weighted max k-cut", "maxkcut"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::function<int()> action;
    std::string out_path;

    // gen
    auto* gen = app.add_subcommand("gen", "Erdos-Renyi G(n, p) graph with unit weights");
    int gen_n = 6;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::optional<double> gen_heavy;
    gen->add_option("--n", gen_n)->check(CLI::PositiveNumber);
    gen->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed);
    gen->add_option("--heavy", gen_heavy, "also give one random edge this weight");
    gen->add_option("--out", out_path);
    gen->callback([&] {
        action = [&] {
            Graph g = gen_erdos_renyi(gen_n, gen_p, gen_seed);
            std::string head = "# gen n=" + std::to_string(gen_n) + " p=" + format_real(gen_p) + " seed=" + std::to_string(gen_seed);
            if (gen_heavy) {
                g = apply_heavy_edge(g, *gen_heavy, SplitMix64(gen_seed).split(1)());
                head += " heavy=" + format_real(*gen_heavy);
            }
            emit(head + "\n" + serialize_graph(g), out_path, out);
            return kOk;
        };
    });

    // heavy-edge
    auto* heavy = app.add_subcommand("heavy-edge", "replace one random edge weight");
    std::string heavy_graph;
    double heavy_weight = 10.0;
    std::uint64_t heavy_seed = 1;
    heavy->add_option("--graph", heavy_graph)->required();
    heavy->add_option("--weight", heavy_weight);
    heavy->add_option("--seed", heavy_seed);
    heavy->add_option("--out", out_path);
    heavy->callback([&] {
        action = [&] {
            const auto lr = load_reporting(heavy_graph, err);
            const Graph g = apply_heavy_edge(lr.graph, heavy_weight, heavy_seed);
            emit("# heavy-edge weight=" + format_real(heavy_weight) + " seed=" + std::to_string(heavy_seed) + "\n" + serialize_graph(g),
                 out_path, out);
            return kOk;
        };
    });

    // degrees
    auto* deg = app.add_subcommand("degrees", "positive and negative weighted degrees");
    std::string deg_graph;
    deg->add_option("--graph", deg_graph)->required();
    deg->add_option("--out", out_path);
    deg->callback([&] {
        action = [&] {
            const auto lr = load_reporting(deg_graph, err);
            const auto d = weighted_degrees(lr.graph);
            std::string text = "# v d_plus d_minus\n";
            for (std::size_t v = 0; v < d.plus.size(); ++v)
                text += std::to_string(v + 1) + " " + format_real(d.plus[v]) + " " + format_real(d.minus[v]) + "\n";
            emit(text, out_path, out);
            return kOk;
        };
    });

    // penalty
    auto* pen = app.add_subcommand("penalty", "penalty coefficient vector");
    ModelArgs pen_args;
    pen->add_option("--graph", pen_args.graph)->required();
    pen->add_option("--k", pen_args.k)->check(CLI::Range(2, 1 << 20));
    pen->add_option("--encoding", pen_args.encoding)->check(CLI::IsMember({"one_hot", "reduced"}));
    pen->add_option("--scheme", pen_args.scheme);
    pen->add_option("--eps", pen_args.eps);
    pen->add_option("--t", pen_args.t)->check(CLI::Range(0.0, 1.0));
    pen->add_option("--out", out_path);
    pen->callback([&] {
        action = [&] {
            const auto lr = load_reporting(pen_args.graph, err);
            const auto c = make_penalty(lr.graph, pen_args.k, pen_args.enc(), pen_args.scheme, pen_args.eps, pen_args.t);
            emit(serialize_penalty(c), out_path, out);
            return kOk;
        };
    });

    // build
    auto* build = app.add_subcommand("build", "export the QUBO or R-QUBO model");
    ModelArgs build_args;
    bool build_min = false;
    build_args.attach(build);
    build->add_flag("--minimize", build_min, "export the sign-negated minimization form");
    build->add_option("--out", out_path);
    build->callback([&] {
        action = [&] {
            auto l = load_model(build_args, err);
            emit(export_model(build_min ? l.model.negated() : l.model), out_path, out);
            return kOk;
        };
    });

    // solve-exact
    auto* exact = app.add_subcommand("solve-exact", "exhaustive search over all bit vectors");
    ModelArgs exact_args;
    int cap_vars = kExhaustiveVarCap;
    exact_args.attach(exact);
    exact->add_option("--cap-vars", cap_vars)->check(CLI::Range(0, 62));
    exact->add_option("--out", out_path);
    exact->callback([&] {
        action = [&] {
            auto l = load_model(exact_args, err);
            const auto r = solve_exhaustive(l.model, {1e-9, cap_vars, threads});
            std::string text = "# optimum=" + format_real(r.optimum) + " optima=" + std::to_string(r.optima.size()) +
                               " states=" + std::to_string(r.states_visited) + "\n";
            for (const auto& b : r.optima)
                text += bits_string(b) + (Assignment(*l.model.layout(), b).feasible() ? " feasible" : " infeasible") + "\n";
            emit(text, out_path, out);
            return kOk;
        };
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "max k-cut by enumerating all k^n partitions");
    std::string orc_graph;
    int orc_k = 3;
    bool orc_canonical = false;
    orc->add_option("--graph", orc_graph)->required();
    orc->add_option("--k", orc_k)->check(CLI::Range(2, 1 << 20));
    orc->add_flag("--canonical", orc_canonical, "collapse optima that differ only by partition labels");
    orc->add_option("--out", out_path);
    orc->callback([&] {
        action = [&] {
            const auto lr = load_reporting(orc_graph, err);
            const auto r = solve_maxkcut_oracle(lr.graph, orc_k, {1e-9, kOracleStateCap, orc_canonical});
            std::string text = "# optimum=" + format_real(r.optimum) + " optima=" + std::to_string(r.partitions.size()) +
                               " states=" + std::to_string(r.states_visited) + "\n";
            for (const auto& p : r.partitions) {
                for (std::size_t v = 0; v < p.size(); ++v) text += (v ? " " : "") + std::to_string(p[v] + 1);
                text += "\n";
            }
            emit(text, out_path, out);
            return kOk;
        };
    });

    // anneal
    auto* ann = app.add_subcommand("anneal", "simulated-annealing samples of the model");
    ModelArgs ann_args;
    int shots = 1000;
    std::uint64_t ann_seed = 1;
    AnnealParams ann_params;
    std::string ann_config;
    std::string csv_path;
    ann_args.attach(ann);
    ann->add_option("--shots", shots)->check(CLI::PositiveNumber);
    ann->add_option("--seed", ann_seed);
    ann->add_option("--sweeps", ann_params.sweeps)->check(CLI::PositiveNumber);
    ann->add_option("--t-start", ann_params.t_start);
    ann->add_option("--t-end", ann_params.t_end);
    ann->add_option("--config", ann_config, "key=value file with sweeps, t_start, t_end");
    ann->add_option("--csv", csv_path);
    ann->callback([&] {
        action = [&] {
            AnnealParams p = ann_params;
            if (!ann_config.empty()) {
                // Flags given explicitly win over the config file.
                p = parse_anneal_config(read_file(ann_config));
                if (ann->count("--sweeps")) p.sweeps = ann_params.sweeps;
                if (ann_params.t_start) p.t_start = ann_params.t_start;
                if (ann_params.t_end) p.t_end = ann_params.t_end;
            }
            auto l = load_model(ann_args, err);
            const auto samples = solve_anneal(l.model, p, shots, ann_seed, threads);
            err << "# anneal seed=" << ann_seed << " shots=" << shots << "\n";
            emit(samples_csv(samples), csv_path, out);
            return kOk;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "compare model optima with the max k-cut oracle");
    ModelArgs ver_args;
    ver_args.attach(ver);
    ver->add_option("--cap-vars", cap_vars)->check(CLI::Range(0, 62));
    ver->add_option("--out", out_path);
    ver->callback([&] {
        action = [&] {
            const auto lr = load_reporting(ver_args.graph, err);
            const PenaltyVector c = ver_args.penalty_file.empty()
                                        ? make_penalty(lr.graph, ver_args.k, ver_args.enc(), ver_args.scheme, ver_args.eps, ver_args.t)
                                        : parse_penalty(read_file(ver_args.penalty_file));
            VerifyOptions vo;
            vo.var_cap = cap_vars;
            vo.threads = threads;
            const auto r = verify_reformulation(lr.graph, ver_args.k, c, ver_args.enc(), ver_args.graph, vo);
            emit(format_verify_summary(r) + "\n" + format_verify_report(r), out_path, out);
            return kOk;
        };
    });

    // scan-conjecture
    auto* scan = app.add_subcommand("scan-conjecture", "search random signed instances for penalty counterexamples");
    ScanConfig scfg;
    std::vector<int> scan_k{2, 3};
    std::string scan_which = "both";
    std::string dump_path;
    scan->add_option("--trials", scfg.trials)->check(CLI::NonNegativeNumber);
    scan->add_option("--seed", scfg.seed);
    scan->add_option("--k", scan_k, "k values, comma separated")->delimiter(',')->check(CLI::Range(2, 1 << 20));
    scan->add_option("--weights", scfg.weight_set, "edge weights, comma separated")->delimiter(',');
    scan->add_option("--n-min", scfg.n_min)->check(CLI::PositiveNumber);
    scan->add_option("--n-max", scfg.n_max)->check(CLI::PositiveNumber);
    scan->add_option("--p", scfg.edge_prob)->check(CLI::Range(0.0, 1.0));
    scan->add_option("--which", scan_which)->check(CLI::IsMember({"qubo", "rqubo", "both"}));
    scan->add_flag("--theorem-bounds", scfg.theorem_bounds, "use the proven bounds instead of the conjectured ones");
    scan->add_option("--eps", scfg.eps);
    scan->add_option("--dump", dump_path, "write counterexample reproducers here");
    scan->add_option("--out", out_path);
    scan->callback([&] {
        action = [&] {
            scfg.k_set = scan_k;
            scfg.which = scan_which == "qubo" ? Conjecture::qubo : scan_which == "rqubo" ? Conjecture::rqubo : Conjecture::both;
            scfg.threads = threads;
            const auto res = conjecture_scan(scfg);
            std::string text = "# scan-conjecture seed=" + std::to_string(scfg.seed) + " trials=" + std::to_string(scfg.trials) +
                               " bounds=" + (scfg.theorem_bounds ? "theorem" : "conjectured") + "\n";
            std::string dump;
            for (const auto& inst : res.instances) {
                text += inst.report.graph_id + " k=" + std::to_string(inst.report.k) + " encoding=" +
                        std::string(encoding_name(inst.report.encoding)) + " " + format_verify_summary(inst.report) + "\n";
                if (!inst.report.valid) dump += format_counterexample(inst);
            }
            text += "counterexamples=" + std::to_string(res.counterexamples()) + "\n";
            emit(text, out_path, out);
            if (!dump.empty()) {
                if (!dump_path.empty())
                    emit(dump, dump_path, out);
                else
                    err << dump;
            }
            return res.counterexamples() ? kCounterexample : kOk;
        };
    });

    // feas-ratio
    auto* feas = app.add_subcommand("feas-ratio", "feasible share of the bit-vector space");
    int feas_n = 1;
    int feas_k = 2;
    std::string feas_enc = "one_hot";
    std::uint64_t feas_samples = 0;
    std::uint64_t feas_seed = 1;
    feas->add_option("--n", feas_n)->required()->check(CLI::PositiveNumber);
    feas->add_option("--k", feas_k)->required()->check(CLI::Range(2, 62));
    feas->add_option("--encoding", feas_enc)->check(CLI::IsMember({"one_hot", "reduced"}));
    feas->add_option("--samples", feas_samples, "also estimate by uniform sampling");
    feas->add_option("--seed", feas_seed);
    feas->add_option("--out", out_path);
    feas->callback([&] {
        action = [&] {
            const auto enc = *parse_encoding(feas_enc);
            std::string text = format_real(feasible_subspace_ratio(feas_n, feas_k, enc)) + "\n";
            if (feas_samples > 0)
                text += "empirical=" + format_real(sample_feasibility_fraction(feas_n, feas_k, enc, feas_samples, feas_seed)) +
                        " samples=" + std::to_string(feas_samples) + " seed=" + std::to_string(feas_seed) + "\n";
            emit(text, out_path, out);
            return kOk;
        };
    });

    // bench
    auto* bench = app.add_subcommand("bench", "penalty-interpolation sweep with annealing samples");
    SweepConfig bcfg;
    std::vector<std::string> bench_files;
    int bench_count = 20;
    int bench_n = 6;
    double bench_p = 0.5;
    double bench_heavy = 10.0;
    bench->add_option("--graph", bench_files, "edge-list files (default: generated instances)");
    bench->add_option("--graphs", bench_count, "number of generated graphs")->check(CLI::PositiveNumber);
    bench->add_option("--n", bench_n)->check(CLI::PositiveNumber);
    bench->add_option("--p", bench_p)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--heavy", bench_heavy);
    bench->add_option("--k", bcfg.k)->check(CLI::Range(2, 1 << 20));
    bench->add_option("--t-grid", bcfg.t_grid)->delimiter(',');
    bench->add_option("--shots", bcfg.shots)->check(CLI::PositiveNumber);
    bench->add_option("--seed", bcfg.seed);
    bench->add_option("--sweeps", bcfg.anneal.sweeps)->check(CLI::PositiveNumber);
    bench->add_option("--eps", bcfg.eps);
    bench->add_option("--csv", csv_path);
    bench->callback([&] {
        action = [&] {
            std::vector<NamedGraph> graphs;
            if (bench_files.empty())
                graphs = benchmark_graphs(bench_count, bench_n, bench_p, bench_heavy, bcfg.seed);
            else
                for (const auto& f : bench_files) graphs.push_back({f, load_reporting(f, err).graph});
            bcfg.threads = threads;
            const auto rows = benchmark_sweep(graphs, bcfg);
            for (const auto& r : rows)
                if (r.error) err << "row failed: " << r.graph_id << " t=" << format_real(r.t) << ": " << *r.error << "\n";
            err << "# bench seed=" << bcfg.seed << " graphs=" << graphs.size() << " shots=" << bcfg.shots << "\n";
            emit(sweep_csv(rows), csv_path, out);
            return kOk;
        };
    });

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        return action ? action() : kUsageError;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace mkc::cli
