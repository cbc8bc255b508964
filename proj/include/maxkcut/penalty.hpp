#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxkcut/graph.hpp"

namespace mkc {

enum class Scheme {
    tight_qubo,         ///< max{d+/k, -3/2 d-}, proven sufficient for the one-hot model
    tight_rqubo,        ///< d+ - 2 d-, proven sufficient for the reduced model
    conjectured_qubo,   ///< max{d+/k, -1/2 d-}
    conjectured_rqubo,  ///< d+ - d-
    naive,              ///< max{n/k, k * sum|w|}, uniform
    interpolated,       ///< (1-t) c_tight + t c_naive
    custom,
};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

/// Per-vertex penalty coefficients with provenance.
///
/// `epsilon` is the strictness margin added on top of the scheme's bound. An
/// empty `epsilon` means the relative default `1e-6 * (1 + bound)` was used.
struct PenaltyVector {
    std::vector<double> c;
    Scheme scheme = Scheme::custom;
    std::optional<double> epsilon;
    double t = 0.0;  ///< only meaningful for Scheme::interpolated

    std::size_t size() const noexcept { return c.size(); }
    double operator[](std::size_t v) const { return c[v]; }

    /// "tight_qubo", "interpolated(0.25)", ...
    std::string tag() const;
};

/// Relative margin used when no epsilon is supplied.
inline double default_margin(double bound) { return 1e-6 * (1.0 + bound); }

// Per-vertex bounds without any margin.
std::vector<double> bound_tight_qubo(const Graph& g, int k);
std::vector<double> bound_tight_rqubo(const Graph& g);
std::vector<double> bound_conjectured_qubo(const Graph& g, int k);
std::vector<double> bound_conjectured_rqubo(const Graph& g);

// `eps` must be positive when given; nullopt selects default_margin per vertex.
PenaltyVector penalty_tight_qubo(const Graph& g, int k, std::optional<double> eps = std::nullopt);
PenaltyVector penalty_tight_rqubo(const Graph& g, std::optional<double> eps = std::nullopt);
PenaltyVector penalty_conjectured_qubo(const Graph& g, int k, std::optional<double> eps = std::nullopt);
PenaltyVector penalty_conjectured_rqubo(const Graph& g, std::optional<double> eps = std::nullopt);

/// max{n/k, k m} on unit-weight graphs. With general weights the edge count m
/// is replaced by the total absolute weight.
PenaltyVector penalty_naive(const Graph& g, int k);

/// (1-t) c_tight + t c_naive, componentwise; `t` in [0, 1].
PenaltyVector penalty_interpolate(const PenaltyVector& c_tight, const PenaltyVector& c_naive, double t);

PenaltyVector penalty_custom(std::vector<double> c);

/// Text form: "# scheme=<tag> eps=<value|auto>" followed by "v c_v" lines (1-based v).
std::string serialize_penalty(const PenaltyVector& p);
PenaltyVector parse_penalty(std::string_view text);

}  // namespace mkc
