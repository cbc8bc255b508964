#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "maxkcut/analysis.hpp"
#include "maxkcut/cli.hpp"
#include "maxkcut/format.hpp"
#include "support.hpp"

using namespace mkc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "maxkcut");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("maxkcut-cli-" + std::to_string(SplitMix64(std::random_device{}())()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write(const TempDir& dir, const std::string& name, const std::string& text) {
    const auto p = dir.file(name);
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

}  // namespace

TEST_CASE("cli examples") {
    const auto ver = run({"verify", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--encoding", "one_hot", "--scheme",
                          "tight", "--eps", "0.1"});
    CHECK(ver.code == cli::kOk);
    CHECK(ver.out.rfind("valid oracle_opt=5 qubo_opt=5\n", 0) == 0);

    const auto feas = run({"feas-ratio", "--n", "6", "--k", "3", "--encoding", "reduced"});
    CHECK(feas.code == cli::kOk);
    CHECK(feas.out == format_real(std::pow(0.75, 6)) + "\n");

    const auto pen = run({"penalty", "--graph", fixtures::data_path("empty.txt"), "--k", "3", "--scheme", "tight_qubo", "--eps",
                          "0.5"});
    CHECK(pen.code == cli::kOk);
    CHECK(pen.out == "# scheme=tight_qubo eps=0.5\n1 0.5\n2 0.5\n3 0.5\n");
}

TEST_CASE("cli output matches the library") {
    const auto g1 = fixtures::ex1();
    const auto ex2 = fixtures::data_path("ex2.txt");
    const auto g2 = fixtures::ex2();

    CHECK(run({"penalty", "--graph", ex2, "--k", "3", "--scheme", "tight", "--eps", "0.1"}).out ==
          serialize_penalty(penalty_tight_qubo(g2, 3, 0.1)));
    CHECK(run({"penalty", "--graph", ex2, "--k", "3", "--encoding", "reduced", "--scheme", "conjectured"}).out ==
          serialize_penalty(penalty_conjectured_rqubo(g2)));
    CHECK(run({"penalty", "--graph", ex2, "--k", "3", "--scheme", "interp", "--t", "0.25", "--eps", "0.1"}).out ==
          serialize_penalty(penalty_interpolate(penalty_tight_qubo(g2, 3, 0.1), penalty_naive(g2, 3), 0.25)));

    CHECK(run({"build", "--graph", ex2, "--k", "3", "--encoding", "reduced", "--scheme", "tight", "--eps", "0.1"}).out ==
          export_model(build_rqubo(g2, 3, penalty_tight_rqubo(g2, 0.1))));
    CHECK(run({"build", "--graph", ex2, "--k", "3", "--scheme", "naive", "--minimize"}).out ==
          export_model(build_qubo(g2, 3, penalty_naive(g2, 3)).negated()));

    const auto q1 = build_qubo(g1, 3, penalty_tight_qubo(g1, 3, 0.1));
    const auto anneal = run({"anneal", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--eps", "0.1", "--shots", "64",
                             "--seed", "9", "--sweeps", "50"});
    CHECK(anneal.code == cli::kOk);
    CHECK(anneal.out == samples_csv(solve_anneal(q1, {50, {}, {}}, 64, 9)));
    CHECK(anneal.err.find("seed=9") != std::string::npos);

    const auto ver = run({"verify", "--graph", ex2, "--k", "3", "--scheme", "tight", "--eps", "0.1"});
    const auto rep = verify_reformulation(g2, 3, penalty_tight_qubo(g2, 3, 0.1), Encoding::one_hot, ex2);
    CHECK(ver.out == format_verify_summary(rep) + "\n" + format_verify_report(rep));

    SweepConfig cfg;
    cfg.t_grid = {0.0, 1.0};
    cfg.shots = 20;
    cfg.anneal.sweeps = 20;
    cfg.seed = 4;
    const auto bench = run({"bench", "--graphs", "2", "--t-grid", "0,1", "--shots", "20", "--sweeps", "20", "--seed", "4"});
    CHECK(bench.code == cli::kOk);
    CHECK(bench.out == sweep_csv(benchmark_sweep(benchmark_graphs(2, 6, 0.5, 10.0, 4), cfg)));

    ScanConfig scfg;
    scfg.trials = 20;
    scfg.seed = 6;
    const auto scan = run({"scan-conjecture", "--trials", "20", "--seed", "6"});
    CHECK(scan.code == cli::kOk);
    CHECK(scan.out.find("counterexamples=0\n") != std::string::npos);
    CHECK(scan.out.find(format_verify_summary(conjecture_scan(scfg).instances[5].report)) != std::string::npos);

    const auto gen = run({"gen", "--n", "7", "--p", "0.4", "--seed", "12"});
    CHECK(gen.out == "# gen n=7 p=0.4 seed=12\n" + serialize_graph(gen_erdos_renyi(7, 0.4, 12)));
    CHECK(run({"gen", "--n", "7", "--p", "0.4", "--seed", "12"}).out == gen.out);

    const auto deg = run({"degrees", "--graph", ex2});
    CHECK(deg.out == "# v d_plus d_minus\n1 2 -1\n2 2 -1\n3 3 0\n4 3 0\n");

    const auto orc = run({"oracle", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--canonical"});
    CHECK(orc.out.rfind("# optimum=5 optima=6 states=81\n", 0) == 0);

    const auto exact = run({"solve-exact", "--graph", fixtures::data_path("ex3.txt"), "--k", "3", "--encoding", "reduced", "--eps",
                            "0.1"});
    CHECK(exact.out.rfind("# optimum=6 ", 0) == 0);
    CHECK(exact.out.find("infeasible") == std::string::npos);
}

TEST_CASE("cli files and options") {
    const TempDir dir;
    const auto graph = write(dir, "g.txt", "# triangle plus a zero-weight pendant\n4 4\n1 2 1\n2 3 1\n1 3 1\n3 4 0\n");
    const auto loaded = run({"penalty", "--graph", graph, "--k", "2", "--scheme", "naive"});
    CHECK(loaded.code == cli::kOk);
    CHECK(loaded.err.find("dropped 1 zero-weight") != std::string::npos);

    const auto pen = write(dir, "c.txt", "1 0.4\n2 0.4\n3 0.4\n4 0.4\n");
    const auto low = run({"verify", "--graph", graph, "--k", "2", "--penalty", pen});
    CHECK(low.code == cli::kOk);
    CHECK(low.out.rfind("invalid ", 0) == 0);

    const auto cfg = write(dir, "anneal.cfg", "sweeps=40\nt_start=3\nt_end=0.01\n");
    const auto a = run({"anneal", "--graph", graph, "--k", "2", "--scheme", "naive", "--shots", "8", "--config", cfg, "--csv",
                        dir.file("samples.csv")});
    CHECK(a.code == cli::kOk);
    CHECK(a.out.empty());
    const auto b = run({"anneal", "--graph", graph, "--k", "2", "--scheme", "naive", "--shots", "8", "--sweeps", "40", "--t-start",
                        "3", "--t-end", "0.01"});
    CHECK(slurp(dir.file("samples.csv")) == b.out);

    CHECK(run({"feas-ratio", "--n", "4", "--k", "2", "--out", dir.file("ratio.txt")}).out.empty());
    CHECK(slurp(dir.file("ratio.txt")) == "0.0625\n");
    const auto mc = run({"feas-ratio", "--n", "1", "--k", "2", "--samples", "1000", "--seed", "3"});
    CHECK(mc.out.find("empirical=") != std::string::npos);

    CHECK(run({"--threads", "4", "feas-ratio", "--n", "1", "--k", "2"}).code == cli::kOk);
    CHECK(run({"feas-ratio", "--n", "1", "--k", "2", "--threads", "4"}).code == cli::kOk);

    const auto heavy = run({"heavy-edge", "--graph", graph, "--weight", "10", "--seed", "2"});
    CHECK(heavy.out.rfind("# heavy-edge weight=10 seed=2\n", 0) == 0);
    CHECK(heavy.out.find(" 10\n") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"feas-ratio", "--n", "2"}).code == cli::kUsageError);
    CHECK(run({"feas-ratio", "--n", "2", "--k", "3", "--bogus"}).code == cli::kUsageError);
    CHECK(run({"verify", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--scheme", "mystery"}).code == cli::kUsageError);
    CHECK(run({"verify", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--encoding", "binary"}).code == cli::kUsageError);

    const auto missing = run({"degrees", "--graph", "/nonexistent/graph.txt"});
    CHECK(missing.code == cli::kDomainError);
    CHECK(missing.err.rfind("error: ", 0) == 0);

    const TempDir dir;
    const auto loop = write(dir, "loop.txt", "2 2\n1 2 1\n2 2 1\n");
    const auto bad = run({"degrees", "--graph", loop});
    CHECK(bad.code == cli::kDomainError);
    CHECK(bad.err.find("line 3") != std::string::npos);

    CHECK(run({"penalty", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--eps", "0"}).code == cli::kDomainError);
    CHECK(run({"anneal", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--t-start", "1", "--t-end", "2"}).code ==
          cli::kDomainError);
    CHECK(run({"solve-exact", "--graph", fixtures::data_path("ex1.txt"), "--k", "3", "--cap-vars", "10"}).code == cli::kDomainError);

    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("built executable") {
    const TempDir dir;
    const std::string cmd = std::string(MAXKCUT_TOOL) + " verify --graph " + fixtures::data_path("ex1.txt") +
                            " --k 3 --encoding one_hot --scheme tight --eps 0.1 > " + dir.file("out.txt");
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(dir.file("out.txt")).rfind("valid oracle_opt=5 qubo_opt=5\n", 0) == 0);

    const std::string usage = std::string(MAXKCUT_TOOL) + " nonsense 2> " + dir.file("err.txt");
    const int status = std::system(usage.c_str());
    CHECK(WEXITSTATUS(status) == cli::kUsageError);
}
