#include "maxkcut/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "maxkcut/error.hpp"
#include "maxkcut/format.hpp"

namespace mkc {

namespace {

void require_k(int k) {
    if (k < 2) throw Error("k must be at least 2");
}

PenaltyVector with_margin(std::vector<double> bound, Scheme scheme, std::optional<double> eps) {
    if (eps && !(*eps > 0.0 && std::isfinite(*eps))) throw Error("epsilon must be positive");
    PenaltyVector p;
    p.scheme = scheme;
    p.epsilon = eps;
    p.c = std::move(bound);
    for (double& c : p.c) c += eps ? *eps : default_margin(c);
    return p;
}

}  // namespace

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::tight_qubo: return "tight_qubo";
        case Scheme::tight_rqubo: return "tight_rqubo";
        case Scheme::conjectured_qubo: return "conjectured_qubo";
        case Scheme::conjectured_rqubo: return "conjectured_rqubo";
        case Scheme::naive: return "naive";
        case Scheme::interpolated: return "interpolated";
        case Scheme::custom: return "custom";
    }
    return "custom";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (auto s : {Scheme::tight_qubo, Scheme::tight_rqubo, Scheme::conjectured_qubo, Scheme::conjectured_rqubo,
                   Scheme::naive, Scheme::interpolated, Scheme::custom})
        if (scheme_name(s) == name) return s;
    return std::nullopt;
}

std::string PenaltyVector::tag() const {
    if (scheme == Scheme::interpolated) return "interpolated(" + format_real(t) + ")";
    return std::string(scheme_name(scheme));
}

std::vector<double> bound_tight_qubo(const Graph& g, int k) {
    require_k(k);
    const auto& d = g.degrees();
    std::vector<double> b(g.num_vertices());
    for (std::size_t v = 0; v < b.size(); ++v) b[v] = std::max(d.plus[v] / k, -1.5 * d.minus[v]);
    return b;
}

std::vector<double> bound_tight_rqubo(const Graph& g) {
    const auto& d = g.degrees();
    std::vector<double> b(g.num_vertices());
    for (std::size_t v = 0; v < b.size(); ++v) b[v] = d.plus[v] - 2.0 * d.minus[v];
    return b;
}

std::vector<double> bound_conjectured_qubo(const Graph& g, int k) {
    require_k(k);
    const auto& d = g.degrees();
    std::vector<double> b(g.num_vertices());
    for (std::size_t v = 0; v < b.size(); ++v) b[v] = std::max(d.plus[v] / k, -0.5 * d.minus[v]);
    return b;
}

std::vector<double> bound_conjectured_rqubo(const Graph& g) {
    const auto& d = g.degrees();
    std::vector<double> b(g.num_vertices());
    for (std::size_t v = 0; v < b.size(); ++v) b[v] = d.plus[v] - d.minus[v];
    return b;
}

PenaltyVector penalty_tight_qubo(const Graph& g, int k, std::optional<double> eps) {
    return with_margin(bound_tight_qubo(g, k), Scheme::tight_qubo, eps);
}

PenaltyVector penalty_tight_rqubo(const Graph& g, std::optional<double> eps) {
    return with_margin(bound_tight_rqubo(g), Scheme::tight_rqubo, eps);
}

PenaltyVector penalty_conjectured_qubo(const Graph& g, int k, std::optional<double> eps) {
    return with_margin(bound_conjectured_qubo(g, k), Scheme::conjectured_qubo, eps);
}

PenaltyVector penalty_conjectured_rqubo(const Graph& g, std::optional<double> eps) {
    return with_margin(bound_conjectured_rqubo(g), Scheme::conjectured_rqubo, eps);
}

PenaltyVector penalty_naive(const Graph& g, int k) {
    require_k(k);
    const double value = std::max(static_cast<double>(g.num_vertices()) / k, k * g.total_abs_weight());
    PenaltyVector p;
    p.scheme = Scheme::naive;
    p.c.assign(g.num_vertices(), value);
    return p;
}

PenaltyVector penalty_interpolate(const PenaltyVector& c_tight, const PenaltyVector& c_naive, double t) {
    if (c_tight.size() != c_naive.size()) throw Error("penalty vectors differ in length");
    if (!(t >= 0.0 && t <= 1.0)) throw Error("interpolation parameter t must lie in [0, 1]");
    PenaltyVector p;
    p.scheme = Scheme::interpolated;
    p.t = t;
    p.epsilon = c_tight.epsilon;
    p.c.resize(c_tight.size());
    for (std::size_t v = 0; v < p.c.size(); ++v) {
        // Endpoints are reproduced exactly.
        if (t == 0.0)
            p.c[v] = c_tight[v];
        else if (t == 1.0)
            p.c[v] = c_naive[v];
        else
            p.c[v] = (1.0 - t) * c_tight[v] + t * c_naive[v];
    }
    return p;
}

PenaltyVector penalty_custom(std::vector<double> c) {
    for (double x : c)
        if (!(x >= 0.0) || !std::isfinite(x)) throw Error("penalty coefficients must be finite and nonnegative");
    PenaltyVector p;
    p.c = std::move(c);
    p.scheme = Scheme::custom;
    return p;
}

std::string serialize_penalty(const PenaltyVector& p) {
    std::string out = "# scheme=" + p.tag() + " eps=" + (p.epsilon ? format_real(*p.epsilon) : std::string("auto")) + "\n";
    for (std::size_t v = 0; v < p.c.size(); ++v) out += std::to_string(v + 1) + " " + format_real(p.c[v]) + "\n";
    return out;
}

PenaltyVector parse_penalty(std::string_view text) {
    std::map<long long, double> entries;
    PenaltyVector p;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty()) continue;
        if (line.front() == '#') {
            // Recover the header fields when present; unknown comments are ignored.
            for (std::string_view rest = line.substr(1); !rest.empty();) {
                const auto sp = rest.find(' ');
                const auto tok = rest.substr(0, sp);
                rest = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp + 1);
                if (tok.starts_with("scheme=")) {
                    auto name = tok.substr(7);
                    if (name.starts_with("interpolated(") && name.ends_with(")")) {
                        p.scheme = Scheme::interpolated;
                        if (auto t = parse_real(name.substr(13, name.size() - 14))) p.t = *t;
                    } else if (auto s = parse_scheme(name)) {
                        p.scheme = *s;
                    }
                } else if (tok.starts_with("eps=")) {
                    p.epsilon = parse_real(tok.substr(4));
                }
            }
            continue;
        }
        const auto sp = line.find_first_of(" \t");
        if (sp == std::string_view::npos) throw ParseError(line_no, "expected \"v c_v\"");
        auto rest = line.substr(sp + 1);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
        auto v = parse_int<long long>(line.substr(0, sp));
        auto c = parse_real(rest);
        if (!v || *v < 1) throw ParseError(line_no, "vertex id must be a positive integer");
        if (!c || !std::isfinite(*c) || *c < 0) throw ParseError(line_no, "coefficient must be a finite nonnegative real");
        if (!entries.emplace(*v, *c).second) throw ParseError(line_no, "duplicate vertex " + std::to_string(*v));
    }
    long long expect = 1;
    for (const auto& [v, c] : entries) {
        if (v != expect) throw ParseError(0, "penalty file is missing vertex " + std::to_string(expect));
        p.c.push_back(c);
        ++expect;
    }
    return p;
}

}  // namespace mkc
