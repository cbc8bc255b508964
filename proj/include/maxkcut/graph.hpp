#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mkc {

/// Undirected edge between 0-based vertices `u < v` with a nonzero weight.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Positive and negative weighted degrees of every vertex.
///
/// `plus[v]` sums the positive weights incident to v, `minus[v]` the negative
/// ones, so `plus[v] >= 0 >= minus[v]`.
struct WeightedDegrees {
    std::vector<double> plus;
    std::vector<double> minus;
};

/// Immutable undirected weighted graph.
///
/// Vertices are 0-based internally (files use 1-based ids). Edges are stored
/// normalized with `u < v`, without duplicates or self-loops, and with nonzero
/// weights. Weighted degrees are computed once at construction.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes `edges`; throws `mkc::Error` on a self-loop,
    /// duplicate pair, out-of-range id, or zero/non-finite weight.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const WeightedDegrees& degrees() const noexcept { return degrees_; }

    double total_weight() const noexcept;
    double total_abs_weight() const noexcept;
    bool has_negative_weight() const noexcept;

    /// Same topology, new weights (one per edge, in `edges()` order).
    Graph with_weights(std::span<const double> weights) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    WeightedDegrees degrees_;
};

struct LoadResult {
    Graph graph;
    std::size_t dropped_zero_weight = 0;
};

/// Parses the edge-list format:
///
///     # comment
///     n m
///     u v w      (m lines, 1-based ids)
///
/// Zero-weight edges are dropped and counted. Errors carry the line number.
LoadResult load_graph(std::string_view text);
LoadResult load_graph_file(const std::string& path);

/// Emits the edge-list format with round-trip precision weights.
std::string serialize_graph(const Graph& g);

WeightedDegrees weighted_degrees(const Graph& g);

/// G(n, p) with unit weights. Pairs are visited in lexicographic order and each
/// is kept with probability p.
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

/// Replaces the weight of one uniformly chosen edge.
Graph apply_heavy_edge(const Graph& g, double weight, std::uint64_t seed);

/// Redraws every edge weight uniformly from `weight_set`.
Graph randomize_signed_weights(const Graph& g, std::span<const double> weight_set, std::uint64_t seed);

}  // namespace mkc
