#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxkcut/graph.hpp"
#include "maxkcut/model.hpp"
#include "maxkcut/penalty.hpp"
#include "maxkcut/solve.hpp"

namespace mkc {

/// Outcome of comparing a penalized model's exact optima with the max k-cut oracle.
///
/// `valid` holds when the model optimum equals the oracle optimum within `tol`
/// and every optimal bit vector decodes to a feasible partition. Otherwise
/// `witness` is an optimal bit vector that is infeasible or cuts less than the
/// oracle optimum.
struct VerifyReport {
    std::string graph_id;
    int k = 0;
    Encoding encoding = Encoding::one_hot;
    std::string scheme;
    bool valid = false;
    double oracle_opt = 0.0;
    double qubo_opt = 0.0;
    std::size_t optima_count = 0;
    std::size_t infeasible_optima_count = 0;
    std::optional<Bits> witness;
};

struct VerifyOptions {
    double tol = 1e-9;
    int var_cap = kExhaustiveVarCap;
    std::uint64_t oracle_cap = kOracleStateCap;
    int threads = 1;
};

VerifyReport verify_reformulation(const Graph& g, int k, const PenaltyVector& c, Encoding enc,
                                  const std::string& graph_id = "graph", const VerifyOptions& opts = {});

/// "valid oracle_opt=5 qubo_opt=5"
std::string format_verify_summary(const VerifyReport& r);
/// key=value lines, one per field; `witness` as a 0/1 string or "none".
std::string format_verify_report(const VerifyReport& r);

/// cut_weight / oracle_opt. Reduced assignments are lifted first. Throws on an
/// infeasible assignment or a nonpositive optimum.
double approximation_ratio(const Graph& g, int k, const Assignment& a, double oracle_opt);

enum class Conjecture { qubo, rqubo, both };

struct ScanConfig {
    int n_min = 2;
    int n_max = 5;
    std::vector<int> k_set{2, 3};
    std::vector<double> weight_set{-2, -1, 1, 2};
    double edge_prob = 0.6;
    int trials = 100;
    std::uint64_t seed = 1;
    Conjecture which = Conjecture::both;
    /// Use the proven bounds instead of the conjectured ones.
    bool theorem_bounds = false;
    std::optional<double> eps;
    int threads = 1;
};

struct ScanInstance {
    int trial = 0;
    Graph graph;
    PenaltyVector penalty;
    VerifyReport report;
};

struct ScanResult {
    std::vector<ScanInstance> instances;  ///< in (trial, qubo-before-rqubo) order
    std::size_t counterexamples() const;
};

/// Random signed instances at the conjectured (or proven) bound plus margin,
/// each checked with verify_reformulation. Invalid reports are counterexamples.
ScanResult conjecture_scan(const ScanConfig& cfg);

/// Edge list, penalty file and witness of one scan instance, for reproduction.
std::string format_counterexample(const ScanInstance& inst);

/// Fraction of the 2^(n*w) bit matrices that are feasible: (k/2^k)^n for
/// one-hot, (k/2^(k-1))^n for reduced.
double feasible_subspace_ratio(int n, int k, Encoding enc);

/// Monte-Carlo estimate of feasible_subspace_ratio from uniform bit matrices.
double sample_feasibility_fraction(int n, int k, Encoding enc, std::uint64_t samples, std::uint64_t seed);

struct SampleStats {
    std::string graph_id;
    int n = 0;
    std::size_t m = 0;
    int k = 0;
    Encoding encoding = Encoding::one_hot;
    double t = 0.0;
    int shots = 0;
    int n_feasible = 0;
    double feasible_fraction = 0.0;
    /// Empty when no sample was feasible or the oracle optimum is not positive.
    std::optional<double> mean_approx_ratio;
    std::optional<double> std_approx_ratio;
    /// Set when the row could not be computed; stats are then empty.
    std::optional<std::string> error;
};

struct SweepConfig {
    int k = 3;
    std::vector<double> t_grid{0.0, 0.25, 0.5, 0.75, 1.0};
    int shots = 1000;
    AnnealParams anneal;
    std::uint64_t seed = 1;
    std::optional<double> eps;
    int threads = 1;
};

struct NamedGraph {
    std::string id;
    Graph graph;
};

/// For each graph, t and encoding (one_hot then reduced): anneal the model with
/// penalties (1-t) c_tight + t c_naive and summarize feasible samples against
/// the oracle optimum. Rows come back in (graph, t, encoding) order.
std::vector<SampleStats> benchmark_sweep(const std::vector<NamedGraph>& graphs, const SweepConfig& cfg);

SampleStats summarize_samples(const std::vector<Sample>& samples, const Graph& g, int k, Encoding enc, double oracle_opt);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SampleStats>& rows);

/// The benchmark instance family: G(n, p) with unit weights and one heavy edge.
/// Graph i uses seeds derived from (seed, i); graphs without edges are redrawn.
std::vector<NamedGraph> benchmark_graphs(int count, int n, double p, double heavy_weight, std::uint64_t seed);

}  // namespace mkc
