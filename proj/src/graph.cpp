#include "maxkcut/graph.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "maxkcut/error.hpp"
#include "maxkcut/format.hpp"
#include "maxkcut/rng.hpp"

namespace mkc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error("graph must have at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw Error("edge (" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) + ") has a vertex id out of range 1.." +
                        std::to_string(n_));
        if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u + 1));
        if (e.w == 0.0 || !std::isfinite(e.w)) throw Error("edge weights must be finite and nonzero");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.emplace(e.u, e.v).second)
            throw Error("duplicate edge {" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) + "}");
    }

    degrees_.plus.assign(n_, 0.0);
    degrees_.minus.assign(n_, 0.0);
    for (const auto& e : edges_) {
        auto& side = e.w > 0 ? degrees_.plus : degrees_.minus;
        side[e.u] += e.w;
        side[e.v] += e.w;
    }
}

double Graph::total_weight() const noexcept {
    double s = 0.0;
    for (const auto& e : edges_) s += e.w;
    return s;
}

double Graph::total_abs_weight() const noexcept {
    double s = 0.0;
    for (const auto& e : edges_) s += std::abs(e.w);
    return s;
}

bool Graph::has_negative_weight() const noexcept {
    for (const auto& e : edges_)
        if (e.w < 0) return true;
    return false;
}

Graph Graph::with_weights(std::span<const double> weights) const {
    if (weights.size() != edges_.size()) throw Error("weight count does not match edge count");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weights[i];
    return Graph(n_, std::move(edges));
}

LoadResult load_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::size_t edge_lines = 0;
    std::size_t dropped = 0;
    std::set<std::pair<int, int>> seen;

    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_ws(line);

        if (!have_header) {
            if (fields.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
            auto pn = parse_int<long long>(fields[0]);
            auto pm = parse_int<long long>(fields[1]);
            if (!pn || !pm) throw ParseError(line_no, "header fields must be integers");
            if (*pn < 1) throw ParseError(line_no, "vertex count must be positive");
            if (*pm < 0) throw ParseError(line_no, "edge count must be nonnegative");
            if (*pn > 1'000'000'000) throw ParseError(line_no, "vertex count too large");
            n = *pn;
            m = *pm;
            have_header = true;
            continue;
        }

        if (static_cast<long long>(edge_lines) >= m) throw ParseError(line_no, "more edge lines than declared in the header");
        ++edge_lines;
        if (fields.size() != 3) throw ParseError(line_no, "expected \"u v w\"");
        auto pu = parse_int<long long>(fields[0]);
        auto pv = parse_int<long long>(fields[1]);
        auto pw = parse_real(fields[2]);
        if (!pu || !pv) throw ParseError(line_no, "vertex ids must be integers");
        if (!pw || !std::isfinite(*pw)) throw ParseError(line_no, "weight must be a finite decimal real");
        if (*pu < 1 || *pu > n || *pv < 1 || *pv > n)
            throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
        if (*pu == *pv) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*pu));
        int u = static_cast<int>(*pu - 1);
        int v = static_cast<int>(*pv - 1);
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second)
            throw ParseError(line_no, "duplicate edge {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + "}");
        if (*pw == 0.0) {
            ++dropped;
            continue;
        }
        edges.push_back({u, v, *pw});
    }

    if (!have_header) throw ParseError(0, "missing header \"n m\"");
    if (static_cast<long long>(edge_lines) < m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edge_lines));
    return {Graph(static_cast<int>(n), std::move(edges)), dropped};
}

LoadResult load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + format_real(e.w) + "\n";
    return out;
}

WeightedDegrees weighted_degrees(const Graph& g) { return g.degrees(); }

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw Error("n must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph apply_heavy_edge(const Graph& g, double weight, std::uint64_t seed) {
    if (g.num_edges() == 0) throw Error("cannot place a heavy edge on a graph without edges");
    SplitMix64 rng(seed);
    const auto pick = rng.below(g.num_edges());
    std::vector<double> w;
    w.reserve(g.num_edges());
    for (const auto& e : g.edges()) w.push_back(e.w);
    w[pick] = weight;
    return g.with_weights(w);
}

Graph randomize_signed_weights(const Graph& g, std::span<const double> weight_set, std::uint64_t seed) {
    if (weight_set.empty()) throw Error("weight set must not be empty");
    for (double w : weight_set)
        if (w == 0.0 || !std::isfinite(w)) throw Error("weight set must contain only finite nonzero values");
    SplitMix64 rng(seed);
    std::vector<double> w;
    w.reserve(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) w.push_back(weight_set[rng.below(weight_set.size())]);
    return g.with_weights(w);
}

}  // namespace mkc
