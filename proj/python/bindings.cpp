#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxkcut/analysis.hpp"
#include "maxkcut/error.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/model.hpp"
#include "maxkcut/penalty.hpp"
#include "maxkcut/solve.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace mkc;

namespace {

// Python-facing edges use 1-based vertex ids, like the edge-list files.
Graph graph_from_edges(int n, const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back({u - 1, v - 1, w});
    return Graph(n, std::move(es));
}

std::vector<std::tuple<int, int, double>> graph_edges(const Graph& g) {
    std::vector<std::tuple<int, int, double>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u + 1, e.v + 1, e.w);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Penalty-tight QUBO and reduced-QUBO models of weighted max k-cut";

    py::register_exception<Error>(m, "MaxKCutError", PyExc_ValueError);

    py::enum_<Encoding>(m, "Encoding").value("one_hot", Encoding::one_hot).value("reduced", Encoding::reduced);
    py::enum_<Sense>(m, "Sense").value("maximize", Sense::maximize).value("minimize", Sense::minimize);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"),
             "Graph on vertices 1..n from (u, v, w) triples.")
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def_property_readonly("edges", &graph_edges)
        .def("total_weight", &Graph::total_weight)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("load_graph", [](const std::string& text) {
        auto r = load_graph(text);
        return py::make_tuple(r.graph, r.dropped_zero_weight);
    }, py::arg("text"), "Parse an edge-list document; returns (graph, dropped_zero_weight_count).");
    m.def("serialize_graph", &serialize_graph);
    m.def("weighted_degrees", [](const Graph& g) {
        const auto& d = g.degrees();
        return py::make_tuple(d.plus, d.minus);
    }, "Returns (d_plus, d_minus) lists.");
    m.def("gen_erdos_renyi", &gen_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("apply_heavy_edge", &apply_heavy_edge, py::arg("graph"), py::arg("weight"), py::arg("seed"));
    m.def("randomize_signed_weights", [](const Graph& g, const std::vector<double>& ws, std::uint64_t seed) {
        return randomize_signed_weights(g, ws, seed);
    }, py::arg("graph"), py::arg("weight_set"), py::arg("seed"));

    py::class_<PenaltyVector>(m, "PenaltyVector")
        .def_readonly("c", &PenaltyVector::c)
        .def_readonly("epsilon", &PenaltyVector::epsilon)
        .def_property_readonly("tag", &PenaltyVector::tag)
        .def("__len__", &PenaltyVector::size);

    m.def("penalty_tight_qubo", &penalty_tight_qubo, py::arg("graph"), py::arg("k"), py::arg("eps") = py::none());
    m.def("penalty_tight_rqubo", &penalty_tight_rqubo, py::arg("graph"), py::arg("eps") = py::none());
    m.def("penalty_conjectured_qubo", &penalty_conjectured_qubo, py::arg("graph"), py::arg("k"), py::arg("eps") = py::none());
    m.def("penalty_conjectured_rqubo", &penalty_conjectured_rqubo, py::arg("graph"), py::arg("eps") = py::none());
    m.def("penalty_naive", &penalty_naive, py::arg("graph"), py::arg("k"));
    m.def("penalty_interpolate", &penalty_interpolate, py::arg("c_tight"), py::arg("c_naive"), py::arg("t"));
    m.def("penalty_custom", &penalty_custom, py::arg("c"));
    m.def("serialize_penalty", &serialize_penalty);

    py::class_<QuboModel>(m, "QuboModel")
        .def_property_readonly("num_vars", &QuboModel::num_vars)
        .def_property_readonly("sense", &QuboModel::sense)
        .def_property_readonly("constant", &QuboModel::constant)
        .def_property_readonly("linear", [](const QuboModel& q) {
            return std::vector<double>(q.linear().begin(), q.linear().end());
        })
        .def_property_readonly("quadratic", [](const QuboModel& q) {
            std::vector<std::tuple<int, int, double>> out;
            for (const auto& t : q.quadratic()) out.emplace_back(t.i, t.j, t.coeff);
            return out;
        })
        .def("negated", &QuboModel::negated);

    m.def("build_qubo", &build_qubo, py::arg("graph"), py::arg("k"), py::arg("penalty"));
    m.def("build_rqubo", &build_rqubo, py::arg("graph"), py::arg("k"), py::arg("penalty"));
    m.def("evaluate", [](const QuboModel& q, const Bits& bits) { return evaluate(q, bits); }, py::arg("model"), py::arg("bits"));
    m.def("export_model", &export_model);
    m.def("is_feasible", [](const QuboModel& q, const Bits& bits) {
        if (!q.layout()) return true;
        return Assignment(*q.layout(), bits).feasible();
    }, py::arg("model"), py::arg("bits"));
    m.def("decode_partitions", [](const QuboModel& q, const Bits& bits) -> std::optional<std::vector<int>> {
        if (!q.layout()) throw Error("model has no vertex/partition layout");
        const Assignment a(*q.layout(), bits);
        if (!a.feasible()) return std::nullopt;
        auto p = a.partitions();
        for (auto& x : p) ++x;
        return p;
    }, py::arg("model"), py::arg("bits"), "1-based partition per vertex, or None if infeasible.");
    m.def("cut_weight", [](const Graph& g, std::vector<int> partition) {
        for (auto& x : partition) --x;
        return cut_weight(g, partition);
    }, py::arg("graph"), py::arg("partition"), "Cut weight of a 1-based partition vector.");

    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("optimum", &ExactResult::optimum)
        .def_readonly("optima", &ExactResult::optima)
        .def_readonly("states_visited", &ExactResult::states_visited);
    m.def("solve_exhaustive", [](const QuboModel& q, double tol, int threads) {
        return solve_exhaustive(q, {tol, kExhaustiveVarCap, threads});
    }, py::arg("model"), py::arg("tol") = 1e-9, py::arg("threads") = 1);

    m.def("solve_maxkcut_oracle", [](const Graph& g, int k, bool canonical) {
        auto r = solve_maxkcut_oracle(g, k, {1e-9, kOracleStateCap, canonical});
        for (auto& p : r.partitions)
            for (auto& x : p) ++x;
        return py::make_tuple(r.optimum, r.partitions);
    }, py::arg("graph"), py::arg("k"), py::arg("canonical") = false,
       "Returns (optimum, list of 1-based partition vectors).");

    py::class_<AnnealParams>(m, "AnnealParams")
        .def(py::init([](int sweeps, std::optional<double> t_start, std::optional<double> t_end) {
            return AnnealParams{sweeps, t_start, t_end};
        }), py::arg("sweeps") = 100, py::arg("t_start") = py::none(), py::arg("t_end") = py::none())
        .def_readwrite("sweeps", &AnnealParams::sweeps)
        .def_readwrite("t_start", &AnnealParams::t_start)
        .def_readwrite("t_end", &AnnealParams::t_end);

    py::class_<Sample>(m, "Sample")
        .def_readonly("bits", &Sample::bits)
        .def_readonly("value", &Sample::value)
        .def_readonly("feasible", &Sample::feasible)
        .def_readonly("cut", &Sample::cut);
    m.def("solve_anneal", &solve_anneal, py::arg("model"), py::arg("params"), py::arg("shots"), py::arg("seed"),
          py::arg("threads") = 1);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("graph_id", &VerifyReport::graph_id)
        .def_readonly("k", &VerifyReport::k)
        .def_readonly("encoding", &VerifyReport::encoding)
        .def_readonly("scheme", &VerifyReport::scheme)
        .def_readonly("valid", &VerifyReport::valid)
        .def_readonly("oracle_opt", &VerifyReport::oracle_opt)
        .def_readonly("qubo_opt", &VerifyReport::qubo_opt)
        .def_readonly("infeasible_optima_count", &VerifyReport::infeasible_optima_count)
        .def_readonly("witness", &VerifyReport::witness)
        .def("__str__", &format_verify_report);
    m.def("verify_reformulation", [](const Graph& g, int k, const PenaltyVector& c, Encoding enc, const std::string& id) {
        return verify_reformulation(g, k, c, enc, id);
    }, py::arg("graph"), py::arg("k"), py::arg("penalty"), py::arg("encoding"), py::arg("graph_id") = "graph");

    m.def("feasible_subspace_ratio", &feasible_subspace_ratio, py::arg("n"), py::arg("k"), py::arg("encoding"));
    m.def("sample_feasibility_fraction", &sample_feasibility_fraction, py::arg("n"), py::arg("k"), py::arg("encoding"),
          py::arg("samples"), py::arg("seed"));

    m.def("conjecture_scan", [](int trials, std::uint64_t seed, std::vector<int> k_set, std::vector<double> weights,
                                int n_max, bool theorem_bounds) {
        ScanConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.k_set = std::move(k_set);
        cfg.weight_set = std::move(weights);
        cfg.n_max = n_max;
        cfg.theorem_bounds = theorem_bounds;
        std::vector<VerifyReport> reports;
        for (auto& inst : conjecture_scan(cfg).instances) reports.push_back(std::move(inst.report));
        return reports;
    }, py::arg("trials"), py::arg("seed"), py::arg("k_set") = std::vector<int>{2, 3},
       py::arg("weight_set") = std::vector<double>{-2, -1, 1, 2}, py::arg("n_max") = 5, py::arg("theorem_bounds") = false);

    m.def("benchmark_csv", [](int graphs, std::vector<double> t_grid, int shots, int sweeps, std::uint64_t seed, int k) {
        SweepConfig cfg;
        cfg.k = k;
        cfg.t_grid = std::move(t_grid);
        cfg.shots = shots;
        cfg.anneal.sweeps = sweeps;
        cfg.seed = seed;
        return sweep_csv(benchmark_sweep(benchmark_graphs(graphs, 6, 0.5, 10.0, seed), cfg));
    }, py::arg("graphs"), py::arg("t_grid"), py::arg("shots"), py::arg("sweeps") = 100, py::arg("seed") = 1,
       py::arg("k") = 3, "Run the penalty-interpolation sweep on G(6, 0.5) instances; returns the CSV text.");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
