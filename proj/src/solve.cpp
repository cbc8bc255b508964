#include "maxkcut/solve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "maxkcut/error.hpp"
#include "maxkcut/format.hpp"
#include "maxkcut/rng.hpp"
#include "parallel.hpp"

namespace mkc {

using detail::parallel_for;
using detail::resolve_threads;

namespace {

constexpr std::size_t kMaxStoredOptima = std::size_t{1} << 20;

struct Neighbor {
    int var;
    double coeff;
};

std::vector<std::vector<Neighbor>> adjacency(const QuboModel& model) {
    std::vector<std::vector<Neighbor>> adj(model.num_vars());
    for (const auto& t : model.quadratic()) {
        adj[t.i].push_back({t.j, t.coeff});
        adj[t.j].push_back({t.i, t.coeff});
    }
    return adj;
}

/// Optima within `tol` of the best score seen so far; scores are exact
/// evaluations, never accumulated deltas.
struct TieSet {
    explicit TieSet(double t) : tol(t) {}

    double tol;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, Bits>> items;

    void offer(double score, const Bits& bits) {
        if (score < best - tol) return;
        if (score > best) {
            best = score;
            std::erase_if(items, [&](const auto& it) { return it.first < best - tol; });
        }
        if (items.size() >= kMaxStoredOptima) throw CapExceeded("more than 2^20 optimal bit vectors");
        items.emplace_back(score, bits);
    }
};

}  // namespace

ExactResult solve_exhaustive(const QuboModel& model, const ExhaustiveOptions& opts) {
    const int n = model.num_vars();
    if (n > opts.var_cap || n > 62)
        throw CapExceeded("exhaustive search over " + std::to_string(n) + " variables exceeds the cap of " +
                          std::to_string(opts.var_cap));
    if (opts.tol < 0) throw Error("tolerance must be nonnegative");

    const double sign = model.sense() == Sense::maximize ? 1.0 : -1.0;
    const auto adj = adjacency(model);
    const auto lin = model.linear();

    // High bits select a chunk; low bits are walked in Gray-code order.
    const int high = n >= 18 ? std::min(n - 12, 8) : 0;
    const int low = n - high;
    const std::uint64_t chunks = std::uint64_t{1} << high;
    const int threads = resolve_threads(opts.threads, high > 0 ? chunks : 1);

    std::vector<TieSet> partial(chunks, TieSet(opts.tol));
    parallel_for(chunks, threads, [&](std::uint64_t chunk) {
        TieSet& ties = partial[chunk];
        Bits bits(n, 0);
        for (int h = 0; h < high; ++h) bits[low + h] = static_cast<std::uint8_t>((chunk >> h) & 1U);

        std::vector<double> field(lin.begin(), lin.end());
        for (int i = 0; i < n; ++i)
            if (bits[i])
                for (const auto& nb : adj[i]) field[nb.var] += nb.coeff;

        double score = sign * evaluate(model, bits);
        ties.offer(score, bits);
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t g = 1; g < steps; ++g) {
            const int i = std::countr_zero(g);
            const double delta = bits[i] ? -field[i] : field[i];
            bits[i] ^= 1U;
            const double dir = bits[i] ? 1.0 : -1.0;
            for (const auto& nb : adj[i]) field[nb.var] += dir * nb.coeff;
            score += sign * delta;
            // The running score drifts; anything near the best is re-scored exactly.
            const double window = opts.tol + 1e-7 * (1.0 + std::abs(ties.best));
            if (score >= ties.best - window) {
                const double exact = sign * evaluate(model, bits);
                score = exact;
                ties.offer(exact, bits);
            }
        }
    });

    TieSet merged(opts.tol);
    for (auto& p : partial) merged.best = std::max(merged.best, p.best);
    ExactResult result;
    for (auto& p : partial)
        for (auto& [s, b] : p.items)
            if (s >= merged.best - opts.tol) result.optima.push_back(std::move(b));
    std::sort(result.optima.begin(), result.optima.end());
    result.optimum = sign * merged.best;
    result.states_visited = std::uint64_t{1} << n;
    return result;
}

std::vector<int> canonical_partition(const std::vector<int>& partition) {
    std::vector<int> relabel;
    std::vector<int> out(partition.size());
    for (std::size_t v = 0; v < partition.size(); ++v) {
        const int p = partition[v];
        if (p >= static_cast<int>(relabel.size())) relabel.resize(p + 1, -1);
        if (relabel[p] < 0) relabel[p] = static_cast<int>(std::count_if(relabel.begin(), relabel.end(), [](int x) { return x >= 0; }));
        out[v] = relabel[p];
    }
    return out;
}

OracleResult solve_maxkcut_oracle(const Graph& g, int k, const OracleOptions& opts) {
    if (k < 2) throw Error("k must be at least 2");
    const int n = g.num_vertices();
    std::uint64_t states = 1;
    for (int v = 0; v < n; ++v) {
        if (states > opts.state_cap / static_cast<std::uint64_t>(k))
            throw CapExceeded("k^n = " + std::to_string(k) + "^" + std::to_string(n) + " exceeds the oracle cap of " +
                              std::to_string(opts.state_cap));
        states *= static_cast<std::uint64_t>(k);
    }

    std::vector<int> part(n, 0);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::vector<int>> optima;
    for (std::uint64_t s = 0; s < states; ++s) {
        double cut = 0.0;
        for (const auto& e : g.edges())
            if (part[e.u] != part[e.v]) cut += e.w;
        if (cut > best + opts.tol) {
            best = cut;
            optima.clear();
            optima.push_back(part);
        } else if (cut >= best - opts.tol) {
            if (cut > best) best = cut;
            optima.push_back(part);
        }
        for (int v = 0; v < n; ++v) {
            if (++part[v] < k) break;
            part[v] = 0;
        }
    }
    // Drop any entry that fell out of the window after `best` crept up.
    OracleResult r;
    r.optimum = best;
    r.states_visited = states;
    for (auto& p : optima)
        if (cut_weight(g, p) >= best - opts.tol) r.partitions.push_back(std::move(p));
    if (opts.canonical) {
        std::set<std::vector<int>> uniq;
        for (const auto& p : r.partitions) uniq.insert(canonical_partition(p));
        r.partitions.assign(uniq.begin(), uniq.end());
    }
    return r;
}

ResolvedSchedule resolve_schedule(const QuboModel& model, const AnnealParams& params) {
    if (params.sweeps < 1) throw Error("anneal: sweeps must be at least 1");
    ResolvedSchedule s;
    s.sweeps = params.sweeps;
    double scale = model.max_abs_coeff();
    if (scale == 0.0) scale = 1.0;
    s.t_start = params.t_start.value_or(scale);
    s.t_end = params.t_end.value_or(1e-3 * s.t_start);
    if (!(s.t_start > s.t_end && s.t_end > 0.0 && std::isfinite(s.t_start)))
        throw Error("anneal: temperatures must satisfy t_start > t_end > 0");
    s.cooling = s.sweeps > 1 ? std::pow(s.t_end / s.t_start, 1.0 / (s.sweeps - 1)) : s.t_end / s.t_start;
    if (!(s.cooling > 0.0 && s.cooling < 1.0)) throw Error("anneal: cooling factor must lie in (0, 1)");
    return s;
}

AnnealParams parse_anneal_config(const std::string& text) {
    AnnealParams p;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }), line.end());
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
        const auto key = line.substr(0, eq);
        const auto val = std::string_view(line).substr(eq + 1);
        if (key == "sweeps") {
            auto v = parse_int<int>(val);
            if (!v) throw ParseError(line_no, "sweeps must be an integer");
            p.sweeps = *v;
        } else if (key == "t_start" || key == "t_end") {
            auto v = parse_real(val);
            if (!v) throw ParseError(line_no, key + " must be a real number");
            (key == "t_start" ? p.t_start : p.t_end) = *v;
        } else {
            throw ParseError(line_no, "unknown anneal parameter \"" + key + "\"");
        }
    }
    return p;
}

std::vector<Sample> solve_anneal(const QuboModel& model, const AnnealParams& params, int shots, std::uint64_t seed,
                                 int threads) {
    if (shots < 1) throw Error("anneal: shots must be at least 1");
    const auto sched = resolve_schedule(model, params);
    const int n = model.num_vars();
    const double sign = model.sense() == Sense::maximize ? 1.0 : -1.0;
    const auto adj = adjacency(model);
    const auto lin = model.linear();
    const SplitMix64 master(seed);

    std::vector<Sample> out(shots);
    parallel_for(static_cast<std::uint64_t>(shots), resolve_threads(threads, shots), [&](std::uint64_t shot) {
        SplitMix64 rng = master.split(shot);
        Bits bits(n);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
        std::vector<double> field(lin.begin(), lin.end());
        for (int i = 0; i < n; ++i)
            if (bits[i])
                for (const auto& nb : adj[i]) field[nb.var] += nb.coeff;

        double temp = sched.t_start;
        for (int sweep = 0; sweep < sched.sweeps; ++sweep, temp *= sched.cooling) {
            for (int i = 0; i < n; ++i) {
                const double gain = sign * (bits[i] ? -field[i] : field[i]);
                if (gain < 0.0 && rng.uniform() >= std::exp(gain / temp)) continue;
                bits[i] ^= 1U;
                const double dir = bits[i] ? 1.0 : -1.0;
                for (const auto& nb : adj[i]) field[nb.var] += dir * nb.coeff;
            }
        }

        Sample& s = out[shot];
        s.value = evaluate(model, bits);
        if (const auto& layout = model.layout()) {
            const Assignment a(*layout, bits);
            s.feasible = a.feasible();
            if (s.feasible) s.cut = model.source_graph() ? cut_weight(*model.source_graph(), a) : s.value;
        } else {
            s.feasible = true;
            s.cut = s.value;
        }
        s.bits = std::move(bits);
    });
    return out;
}

std::string samples_csv(const std::vector<Sample>& samples) {
    std::string out = "shot,value,feasible,cut\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        out += std::to_string(i) + "," + format_real(s.value) + "," + (s.feasible ? "1" : "0") + "," +
               (s.cut ? format_real(*s.cut) : std::string()) + "\n";
    }
    return out;
}

}  // namespace mkc
