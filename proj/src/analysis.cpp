#include "maxkcut/analysis.hpp"

#include <cstdio>
#include <bit>
#include <cmath>

#include "maxkcut/error.hpp"
#include "maxkcut/format.hpp"
#include "maxkcut/rng.hpp"
#include "parallel.hpp"

namespace mkc {

namespace {

std::string bits_string(const Bits& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace

VerifyReport verify_reformulation(const Graph& g, int k, const PenaltyVector& c, Encoding enc, const std::string& graph_id,
                                  const VerifyOptions& opts) {
    const QuboModel model = build_model(g, k, c, enc);
    const ExactResult exact = solve_exhaustive(model, {opts.tol, opts.var_cap, opts.threads});
    const OracleResult oracle = solve_maxkcut_oracle(g, k, {opts.tol, opts.oracle_cap, false});

    VerifyReport r;
    r.graph_id = graph_id;
    r.k = k;
    r.encoding = enc;
    r.scheme = c.tag();
    r.oracle_opt = oracle.optimum;
    r.qubo_opt = exact.optimum;
    r.optima_count = exact.optima.size();

    const Bits* suboptimal = nullptr;
    for (const auto& bits : exact.optima) {
        const Assignment a(*model.layout(), bits);
        if (!a.feasible()) {
            if (r.infeasible_optima_count++ == 0) r.witness = bits;
        } else if (!suboptimal && std::abs(cut_weight(g, a) - oracle.optimum) > opts.tol) {
            suboptimal = &bits;
        }
    }
    r.valid = std::abs(r.qubo_opt - r.oracle_opt) <= opts.tol && r.infeasible_optima_count == 0 && !suboptimal;
    if (!r.valid && !r.witness) r.witness = suboptimal ? *suboptimal : exact.optima.front();
    return r;
}

std::string format_verify_summary(const VerifyReport& r) {
    return std::string(r.valid ? "valid" : "invalid") + " oracle_opt=" + format_display(r.oracle_opt) +
           " qubo_opt=" + format_display(r.qubo_opt);
}

std::string format_verify_report(const VerifyReport& r) {
    std::string out;
    out += "graph_id=" + r.graph_id + "\n";
    out += "k=" + std::to_string(r.k) + "\n";
    out += "encoding=" + std::string(encoding_name(r.encoding)) + "\n";
    out += "scheme=" + r.scheme + "\n";
    out += std::string("valid=") + (r.valid ? "true" : "false") + "\n";
    out += "oracle_opt=" + format_real(r.oracle_opt) + "\n";
    out += "qubo_opt=" + format_real(r.qubo_opt) + "\n";
    out += "optima_count=" + std::to_string(r.optima_count) + "\n";
    out += "infeasible_optima_count=" + std::to_string(r.infeasible_optima_count) + "\n";
    out += "witness=" + (r.witness ? bits_string(*r.witness) : std::string("none")) + "\n";
    return out;
}

double approximation_ratio(const Graph& g, int k, const Assignment& a, double oracle_opt) {
    if (a.k() != k) throw Error("assignment uses a different k");
    if (!(oracle_opt > 0.0)) throw Error("approximation ratio is undefined for a nonpositive optimum");
    if (!a.feasible()) throw Error("approximation ratio requires a feasible assignment");
    const double cut = a.encoding() == Encoding::reduced ? cut_weight(g, lift(a)) : cut_weight(g, a);
    return cut / oracle_opt;
}

std::size_t ScanResult::counterexamples() const {
    std::size_t c = 0;
    for (const auto& inst : instances)
        if (!inst.report.valid) ++c;
    return c;
}

ScanResult conjecture_scan(const ScanConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw Error("scan: need 1 <= n_min <= n_max");
    if (cfg.k_set.empty()) throw Error("scan: k set must not be empty");
    for (int k : cfg.k_set)
        if (k < 2) throw Error("scan: every k must be at least 2");
    if (cfg.trials < 0) throw Error("scan: trials must be nonnegative");

    const SplitMix64 master(cfg.seed);
    const int per_trial = cfg.which == Conjecture::both ? 2 : 1;
    std::vector<std::vector<ScanInstance>> slots(cfg.trials);

    detail::parallel_for(static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t trial) {
        SplitMix64 rng = master.split(trial);
        const int n = cfg.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_max - cfg.n_min + 1)));
        const int k = cfg.k_set[rng.below(cfg.k_set.size())];
        const Graph topo = gen_erdos_renyi(n, cfg.edge_prob, rng());
        const Graph g = randomize_signed_weights(topo, cfg.weight_set, rng());
        const std::string id = "scan-" + std::to_string(trial);

        for (int which = 0; which < 2; ++which) {
            const bool qubo = which == 0;
            if ((qubo && cfg.which == Conjecture::rqubo) || (!qubo && cfg.which == Conjecture::qubo)) continue;
            PenaltyVector c;
            if (qubo)
                c = cfg.theorem_bounds ? penalty_tight_qubo(g, k, cfg.eps) : penalty_conjectured_qubo(g, k, cfg.eps);
            else
                c = cfg.theorem_bounds ? penalty_tight_rqubo(g, cfg.eps) : penalty_conjectured_rqubo(g, cfg.eps);
            const auto enc = qubo ? Encoding::one_hot : Encoding::reduced;
            auto report = verify_reformulation(g, k, c, enc, id);
            slots[trial].push_back({static_cast<int>(trial), g, std::move(c), std::move(report)});
        }
    });

    ScanResult out;
    out.instances.reserve(static_cast<std::size_t>(cfg.trials) * per_trial);
    for (auto& s : slots)
        for (auto& inst : s) out.instances.push_back(std::move(inst));
    return out;
}

std::string format_counterexample(const ScanInstance& inst) {
    std::string out = "## counterexample " + inst.report.graph_id + " k=" + std::to_string(inst.report.k) +
                      " encoding=" + std::string(encoding_name(inst.report.encoding)) + "\n";
    out += "### graph\n" + serialize_graph(inst.graph);
    out += "### penalty\n" + serialize_penalty(inst.penalty);
    out += "### report\n" + format_verify_report(inst.report);
    return out;
}

double feasible_subspace_ratio(int n, int k, Encoding enc) {
    if (n < 1 || k < 2) throw Error("feasible ratio needs n >= 1 and k >= 2");
    const int width = enc == Encoding::one_hot ? k : k - 1;
    return std::pow(static_cast<double>(k) / std::ldexp(1.0, width), n);
}

double sample_feasibility_fraction(int n, int k, Encoding enc, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1 || k < 2) throw Error("feasible ratio needs n >= 1 and k >= 2");
    if (samples < 1) throw Error("need at least one sample");
    const int width = enc == Encoding::one_hot ? k : k - 1;
    if (width > 63) throw Error("row width too large");
    const std::uint64_t mask = width == 0 ? 0 : (~std::uint64_t{0} >> (64 - width));
    SplitMix64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        bool ok = true;
        // Draw every row even after a failure so each sample consumes the same stream.
        for (int v = 0; v < n; ++v) {
            const int ones = std::popcount(rng() & mask);
            ok = ok && (enc == Encoding::one_hot ? ones == 1 : ones <= 1);
        }
        if (ok) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

SampleStats summarize_samples(const std::vector<Sample>& samples, const Graph& g, int k, Encoding enc, double oracle_opt) {
    SampleStats st;
    st.n = g.num_vertices();
    st.m = g.num_edges();
    st.k = k;
    st.encoding = enc;
    st.shots = static_cast<int>(samples.size());
    const VariableLayout layout{enc, g.num_vertices(), k};
    std::vector<double> ratios;
    for (const auto& s : samples) {
        const Assignment a(layout, s.bits);
        if (!a.feasible()) continue;
        ++st.n_feasible;
        if (oracle_opt > 0.0) ratios.push_back(approximation_ratio(g, k, a, oracle_opt));
    }
    st.feasible_fraction = st.shots ? static_cast<double>(st.n_feasible) / st.shots : 0.0;
    if (!ratios.empty()) {
        double sum = 0.0;
        for (double r : ratios) sum += r;
        const double mean = sum / static_cast<double>(ratios.size());
        double ss = 0.0;
        for (double r : ratios) ss += (r - mean) * (r - mean);
        st.mean_approx_ratio = mean;
        st.std_approx_ratio = std::sqrt(ss / static_cast<double>(ratios.size()));
    }
    return st;
}

std::vector<SampleStats> benchmark_sweep(const std::vector<NamedGraph>& graphs, const SweepConfig& cfg) {
    if (graphs.empty() || cfg.t_grid.empty()) throw Error("sweep: graph list and t grid must be non-empty");
    for (double t : cfg.t_grid)
        if (!(t >= 0.0 && t <= 1.0)) throw Error("sweep: every t must lie in [0, 1]");
    if (cfg.shots < 1) throw Error("sweep: shots must be at least 1");

    constexpr Encoding kEncodings[] = {Encoding::one_hot, Encoding::reduced};
    const std::size_t per_graph = cfg.t_grid.size() * 2;
    const std::size_t total = graphs.size() * per_graph;
    const SplitMix64 master(cfg.seed);

    std::vector<std::optional<double>> oracle(graphs.size());
    std::vector<std::string> oracle_error(graphs.size());
    detail::parallel_for(graphs.size(), cfg.threads, [&](std::size_t gi) {
        try {
            oracle[gi] = solve_maxkcut_oracle(graphs[gi].graph, cfg.k).optimum;
        } catch (const std::exception& e) {
            oracle_error[gi] = e.what();
        }
    });

    std::vector<SampleStats> rows(total);
    detail::parallel_for(total, cfg.threads, [&](std::size_t row) {
        const std::size_t gi = row / per_graph;
        const std::size_t ti = (row % per_graph) / 2;
        const Encoding enc = kEncodings[row % 2];
        const auto& ng = graphs[gi];
        const double t = cfg.t_grid[ti];
        SampleStats st;
        try {
            if (!oracle[gi]) throw Error(oracle_error[gi]);
            const auto tight = enc == Encoding::one_hot ? penalty_tight_qubo(ng.graph, cfg.k, cfg.eps)
                                                        : penalty_tight_rqubo(ng.graph, cfg.eps);
            const auto naive = penalty_naive(ng.graph, cfg.k);
            const auto c = penalty_interpolate(tight, naive, t);
            const auto model = build_model(ng.graph, cfg.k, c, enc);
            const auto samples = solve_anneal(model, cfg.anneal, cfg.shots, master.split(row)(), 1);
            st = summarize_samples(samples, ng.graph, cfg.k, enc, *oracle[gi]);
        } catch (const std::exception& e) {
            st = SampleStats{};
            st.n = ng.graph.num_vertices();
            st.m = ng.graph.num_edges();
            st.k = cfg.k;
            st.encoding = enc;
            st.shots = cfg.shots;
            st.error = e.what();
        }
        st.graph_id = ng.id;
        st.t = t;
        rows[row] = std::move(st);
    });
    return rows;
}

std::string sweep_csv_header() {
    return "graph_id,n,m,k,encoding,t,shots,feasible_fraction,n_feasible,mean_approx_ratio,std_approx_ratio";
}

std::string sweep_csv(const std::vector<SampleStats>& rows) {
    std::string out = sweep_csv_header() + "\n";
    for (const auto& r : rows) {
        out += r.graph_id + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.k) + "," +
               std::string(encoding_name(r.encoding)) + "," + format_real(r.t) + "," + std::to_string(r.shots) + ",";
        if (r.error) {
            out += ",,,\n";
            continue;
        }
        out += format_real(r.feasible_fraction) + "," + std::to_string(r.n_feasible) + "," +
               (r.mean_approx_ratio ? format_real(*r.mean_approx_ratio) : std::string()) + "," +
               (r.std_approx_ratio ? format_real(*r.std_approx_ratio) : std::string()) + "\n";
    }
    return out;
}

std::vector<NamedGraph> benchmark_graphs(int count, int n, double p, double heavy_weight, std::uint64_t seed) {
    if (count < 1) throw Error("need at least one graph");
    if (!(p > 0.0) && n >= 2) throw Error("edge probability must be positive to place a heavy edge");
    if (n < 2) throw Error("need at least two vertices to place a heavy edge");
    const SplitMix64 master(seed);
    std::vector<NamedGraph> out;
    for (int i = 0; i < count; ++i) {
        SplitMix64 rng = master.split(static_cast<std::uint64_t>(i));
        Graph g = gen_erdos_renyi(n, p, rng());
        while (g.num_edges() == 0) g = gen_erdos_renyi(n, p, rng());
        char id[16];
        std::snprintf(id, sizeof(id), "er%02d", i);
        out.push_back({id, apply_heavy_edge(g, heavy_weight, rng())});
    }
    return out;
}

}  // namespace mkc
