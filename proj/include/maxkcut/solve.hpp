#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxkcut/graph.hpp"
#include "maxkcut/model.hpp"

namespace mkc {

inline constexpr int kExhaustiveVarCap = 30;
inline constexpr std::uint64_t kOracleStateCap = 100'000'000;

struct ExactResult {
    double optimum = 0.0;
    std::vector<Bits> optima;  ///< sorted lexicographically, all within tol of optimum
    std::uint64_t states_visited = 0;
};

struct ExhaustiveOptions {
    double tol = 1e-9;
    int var_cap = kExhaustiveVarCap;
    int threads = 0;  ///< 0 = hardware concurrency for large models
};

/// Enumerates every bit vector and returns the best value under the model's
/// sense together with all optimal vectors. Throws CapExceeded above var_cap.
ExactResult solve_exhaustive(const QuboModel& model, const ExhaustiveOptions& opts = {});

struct OracleResult {
    double optimum = 0.0;
    std::vector<std::vector<int>> partitions;  ///< 0-based partition per vertex
    std::uint64_t states_visited = 0;
};

struct OracleOptions {
    double tol = 1e-9;
    std::uint64_t state_cap = kOracleStateCap;
    /// Relabel partitions by first appearance and drop duplicates, so optima
    /// that differ only by a permutation of partition labels collapse to one.
    bool canonical = false;
};

/// Max k-cut by direct enumeration of all k^n partition vectors.
OracleResult solve_maxkcut_oracle(const Graph& g, int k, const OracleOptions& opts = {});

/// Relabels partitions in order of first appearance (vertex 0 gets label 0).
std::vector<int> canonical_partition(const std::vector<int>& partition);

/// Single-flip Metropolis with geometric cooling. Unset temperatures default
/// to t_start = max|coeff| and t_end = 1e-3 * t_start; the per-sweep cooling
/// factor is (t_end / t_start)^(1 / (sweeps - 1)).
struct AnnealParams {
    int sweeps = 100;
    std::optional<double> t_start;
    std::optional<double> t_end;
};

struct ResolvedSchedule {
    int sweeps = 0;
    double t_start = 0.0;
    double t_end = 0.0;
    double cooling = 1.0;
};

/// Fills in defaults and validates. Throws mkc::Error on invalid parameters.
ResolvedSchedule resolve_schedule(const QuboModel& model, const AnnealParams& params);

/// Reads "key=value" lines (sweeps, t_start, t_end); '#' starts a comment.
AnnealParams parse_anneal_config(const std::string& text);

struct Sample {
    Bits bits;
    double value = 0.0;
    bool feasible = true;
    std::optional<double> cut;  ///< set iff feasible
};

/// `shots` independent restarts. Shot i draws from SplitMix64(seed).split(i),
/// so results do not depend on `threads`.
std::vector<Sample> solve_anneal(const QuboModel& model, const AnnealParams& params, int shots, std::uint64_t seed,
                                 int threads = 1);

/// "shot,value,feasible,cut" with one row per sample.
std::string samples_csv(const std::vector<Sample>& samples);

}  // namespace mkc
