#pragma once

// Fixtures and brute-force reference computations shared by the test
// binaries. Everything here is written directly from the objective
// definitions and deliberately avoids the library's model builders and
// solvers, so it can serve as an independent check on them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "maxkcut/graph.hpp"
#include "maxkcut/rng.hpp"

namespace fixtures {

inline mkc::Graph graph(int n, std::vector<std::tuple<int, int, double>> one_based) {
    std::vector<mkc::Edge> edges;
    for (auto [u, v, w] : one_based) edges.push_back({u - 1, v - 1, w});
    return mkc::Graph(n, std::move(edges));
}

/// K4, unit weights.
inline mkc::Graph ex1() { return graph(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}}); }
/// K4 with w12 = -1.
inline mkc::Graph ex2() { return graph(4, {{1, 2, -1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}}); }
/// Five vertices, unit weights.
inline mkc::Graph ex3() { return graph(5, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {2, 5, 1}, {3, 4, 1}, {3, 5, 1}}); }
/// Same topology as ex3 with w12 = -1.
inline mkc::Graph ex4() { return graph(5, {{1, 2, -1}, {1, 3, 1}, {2, 4, 1}, {2, 5, 1}, {3, 4, 1}, {3, 5, 1}}); }

inline std::string data_path(const std::string& name) { return std::string(MAXKCUT_DATA_DIR) + "/" + name; }

/// Random graph on n vertices, each pair kept with probability p, weights
/// drawn uniformly from `weights`.
inline mkc::Graph random_graph(mkc::SplitMix64& rng, int n, double p, const std::vector<double>& weights) {
    std::vector<mkc::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.push_back({u, v, weights[rng.below(weights.size())]});
    return mkc::Graph(n, std::move(edges));
}

}  // namespace fixtures

namespace oracle {

/// x[v][j] as nested vectors.
using Matrix = std::vector<std::vector<int>>;

inline Matrix reshape(const std::vector<std::uint8_t>& bits, int n, int width) {
    Matrix x(n, std::vector<int>(width));
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < width; ++j) x[v][j] = bits[v * width + j];
    return x;
}

/// sum_e w (1 - sum_j x_uj x_vj) - sum_v c_v (sum_j x_vj - 1)^2, evaluated literally.
inline double qubo_objective(const mkc::Graph& g, const std::vector<double>& c, const Matrix& x) {
    double total = 0.0;
    for (const auto& e : g.edges()) {
        double same = 0.0;
        for (std::size_t j = 0; j < x[e.u].size(); ++j) same += x[e.u][j] * x[e.v][j];
        total += e.w * (1.0 - same);
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
        double s = -1.0;
        for (int b : x[v]) s += b;
        total -= c[v] * s * s;
    }
    return total;
}

/// Reduced objective with k-1 columns, evaluated literally.
inline double rqubo_objective(const mkc::Graph& g, const std::vector<double>& c, const Matrix& x) {
    double total = 0.0;
    for (const auto& e : g.edges()) {
        double same = 0.0;
        double su = 0.0;
        double sv = 0.0;
        for (std::size_t j = 0; j < x[e.u].size(); ++j) {
            same += x[e.u][j] * x[e.v][j];
            su += x[e.u][j];
            sv += x[e.v][j];
        }
        total += e.w * (1.0 - same - (1.0 - su) * (1.0 - sv));
    }
    for (std::size_t v = 0; v < x.size(); ++v)
        for (std::size_t i = 0; i < x[v].size(); ++i)
            for (std::size_t j = i + 1; j < x[v].size(); ++j) total -= c[v] * x[v][i] * x[v][j];
    return total;
}

inline double cut(const mkc::Graph& g, const std::vector<int>& part) {
    double s = 0.0;
    for (const auto& e : g.edges())
        if (part[e.u] != part[e.v]) s += e.w;
    return s;
}

/// Max k-cut by depth-first assignment of every vertex.
inline double max_k_cut(const mkc::Graph& g, int k) {
    std::vector<int> part(g.num_vertices(), 0);
    double best = -INFINITY;
    std::function<void(int)> rec = [&](int v) {
        if (v == g.num_vertices()) {
            best = std::max(best, cut(g, part));
            return;
        }
        for (int p = 0; p < k; ++p) {
            part[v] = p;
            rec(v + 1);
        }
    };
    rec(0);
    return best;
}

/// Max cut over all 2^n bipartitions encoded as bitmasks.
inline double max_cut_bipartition(const mkc::Graph& g) {
    double best = -INFINITY;
    const int n = g.num_vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double s = 0.0;
        for (const auto& e : g.edges())
            if (((mask >> e.u) ^ (mask >> e.v)) & 1U) s += e.w;
        best = std::max(best, s);
    }
    return best;
}

/// Max of a literal objective over every bit matrix of the given shape.
inline double max_over_bits(int n, int width, const std::function<double(const Matrix&)>& f) {
    double best = -INFINITY;
    const int total = n * width;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        std::vector<std::uint8_t> bits(total);
        for (int i = 0; i < total; ++i) bits[i] = (mask >> i) & 1U;
        best = std::max(best, f(reshape(bits, n, width)));
    }
    return best;
}

/// Three-sigma half-width of a binomial proportion.
inline double three_sigma(double p, double samples) { return 3.0 * std::sqrt(p * (1.0 - p) / samples); }

}  // namespace oracle
