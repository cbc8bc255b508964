#include <doctest.h>

#include <cmath>

#include "maxkcut/error.hpp"
#include "maxkcut/penalty.hpp"
#include "support.hpp"

using namespace mkc;
using doctest::Approx;

namespace {

void check_all(const PenaltyVector& p, double value) {
    for (double c : p.c) CHECK(c == Approx(value).epsilon(1e-12));
}

}  // namespace

TEST_CASE("tight one-hot penalties") {
    const auto k4 = penalty_tight_qubo(fixtures::ex1(), 3, 0.1);
    CHECK(k4.size() == 4);
    CHECK(k4.scheme == Scheme::tight_qubo);
    check_all(k4, 1.1);

    const auto signed_k4 = penalty_tight_qubo(fixtures::ex2(), 3, 0.1);
    CHECK(signed_k4[0] == Approx(1.6));
    CHECK(signed_k4[1] == Approx(1.6));
    CHECK(signed_k4[2] == Approx(1.1));
    CHECK(signed_k4[3] == Approx(1.1));

    check_all(penalty_tight_qubo(fixtures::graph(4, {}), 5, 0.25), 0.25);
}

TEST_CASE("tight reduced penalties") {
    const auto c3 = penalty_tight_rqubo(fixtures::ex3(), 0.1);
    CHECK(c3[0] == Approx(2.1));
    CHECK(c3[1] == Approx(3.1));
    CHECK(c3[2] == Approx(3.1));
    CHECK(c3[3] == Approx(2.1));
    CHECK(c3[4] == Approx(2.1));

    const auto c4 = penalty_tight_rqubo(fixtures::ex4(), 0.1);
    CHECK(c4[1] == Approx(4.1));
    CHECK(c4[0] == Approx(3.1));
    CHECK(c4[2] == Approx(3.1));
    CHECK(c4[3] == Approx(2.1));
    CHECK(c4[4] == Approx(2.1));

    check_all(penalty_tight_rqubo(fixtures::graph(2, {}), 0.5), 0.5);
}

TEST_CASE("conjectured penalties") {
    // Same as the proven scheme when no weight is negative.
    const auto g = fixtures::ex3();
    CHECK(penalty_conjectured_qubo(g, 3, 0.1).c == penalty_tight_qubo(g, 3, 0.1).c);
    CHECK(penalty_conjectured_rqubo(g, 0.1).c == penalty_tight_rqubo(g, 0.1).c);

    const auto q = penalty_conjectured_qubo(fixtures::ex2(), 3, 0.1);
    CHECK(q[0] == Approx(2.0 / 3.0 + 0.1));
    CHECK(q.scheme == Scheme::conjectured_qubo);

    const auto r = penalty_conjectured_rqubo(fixtures::ex4(), 0.1);
    CHECK(r[1] == Approx(3.1));

    check_all(penalty_conjectured_qubo(fixtures::graph(3, {}), 2, 0.3), 0.3);
    check_all(penalty_conjectured_rqubo(fixtures::graph(3, {}), 0.3), 0.3);
}

TEST_CASE("naive penalties") {
    check_all(penalty_naive(fixtures::ex1(), 3), 18.0);

    SplitMix64 rng(3);
    Graph g = fixtures::graph(6, {});
    while (g.num_edges() != 8) g = fixtures::random_graph(rng, 6, 0.5, {1.0});
    check_all(penalty_naive(g, 3), 24.0);

    check_all(penalty_naive(fixtures::graph(6, {}), 3), 2.0);

    // Weighted graphs use the total absolute weight in place of m.
    check_all(penalty_naive(fixtures::graph(3, {{1, 2, -2.5}, {2, 3, 1.5}}), 2), 8.0);
}

TEST_CASE("interpolation") {
    const auto tight = penalty_tight_qubo(fixtures::ex2(), 3, 0.1);
    const auto naive = penalty_naive(fixtures::ex2(), 3);
    CHECK(penalty_interpolate(tight, naive, 0.0).c == tight.c);
    CHECK(penalty_interpolate(tight, naive, 1.0).c == naive.c);

    const auto mid = penalty_interpolate(penalty_custom({1, 1}), penalty_custom({3, 5}), 0.5);
    CHECK(mid[0] == 2.0);
    CHECK(mid[1] == 3.0);
    CHECK(mid.tag() == "interpolated(0.5)");

    CHECK_THROWS_AS(penalty_interpolate(tight, penalty_custom({1, 2}), 0.5), Error);
    CHECK_THROWS_AS(penalty_interpolate(tight, naive, 1.5), Error);
    CHECK_THROWS_AS(penalty_interpolate(tight, naive, -0.1), Error);

    // Componentwise monotone in t when naive dominates tight.
    double prev_t = 0.0;
    auto prev = penalty_interpolate(tight, naive, prev_t);
    for (double t = 0.05; t <= 1.0; t += 0.05) {
        const auto cur = penalty_interpolate(tight, naive, t);
        for (std::size_t v = 0; v < cur.size(); ++v) CHECK(cur[v] >= prev[v]);
        prev = cur;
    }
}

TEST_CASE("margins") {
    CHECK_THROWS_AS(penalty_tight_qubo(fixtures::ex1(), 3, 0.0), Error);
    CHECK_THROWS_AS(penalty_tight_rqubo(fixtures::ex1(), -1.0), Error);
    CHECK_THROWS_AS(penalty_tight_qubo(fixtures::ex1(), 1, 0.1), Error);

    const auto def = penalty_tight_rqubo(fixtures::ex4());
    const auto bound = bound_tight_rqubo(fixtures::ex4());
    CHECK_FALSE(def.epsilon.has_value());
    for (std::size_t v = 0; v < bound.size(); ++v) {
        CHECK(def[v] > bound[v]);
        CHECK(def[v] - bound[v] == Approx(1e-6 * (1 + bound[v])));
    }
}

TEST_CASE("scheme ordering and homogeneity on random signed graphs") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const int k = 2 + static_cast<int>(rng.below(4));
        const Graph g = fixtures::random_graph(rng, n, 0.6, {-3, -2, -0.5, 1, 2, 4});
        const auto tq = bound_tight_qubo(g, k);
        const auto tr = bound_tight_rqubo(g);
        const auto cq = bound_conjectured_qubo(g, k);
        const auto cr = bound_conjectured_rqubo(g);
        for (int v = 0; v < n; ++v) {
            CHECK(cq[v] <= tq[v]);
            CHECK(cr[v] <= tr[v]);
            CHECK(tq[v] <= tr[v]);
        }

        const double lambda = 0.5 + rng.uniform() * 3;
        std::vector<double> scaled;
        for (const auto& e : g.edges()) scaled.push_back(e.w * lambda);
        const Graph gs = g.with_weights(scaled);
        const auto tq2 = bound_tight_qubo(gs, k);
        const auto tr2 = bound_tight_rqubo(gs);
        const auto cq2 = bound_conjectured_qubo(gs, k);
        const auto cr2 = bound_conjectured_rqubo(gs);
        for (int v = 0; v < n; ++v) {
            CHECK(tq2[v] == Approx(lambda * tq[v]));
            CHECK(tr2[v] == Approx(lambda * tr[v]));
            CHECK(cq2[v] == Approx(lambda * cq[v]));
            CHECK(cr2[v] == Approx(lambda * cr[v]));
        }
    }
}

TEST_CASE("penalty text format") {
    const auto p = penalty_tight_qubo(fixtures::ex2(), 3, 0.1);
    const auto text = serialize_penalty(p);
    CHECK(text.rfind("# scheme=tight_qubo eps=0.1\n1 1.6\n", 0) == 0);
    const auto back = parse_penalty(text);
    CHECK(back.c == p.c);
    CHECK(back.scheme == Scheme::tight_qubo);
    CHECK(back.epsilon == p.epsilon);

    const auto interp = penalty_interpolate(p, penalty_naive(fixtures::ex2(), 3), 0.25);
    const auto iback = parse_penalty(serialize_penalty(interp));
    CHECK(iback.scheme == Scheme::interpolated);
    CHECK(iback.t == 0.25);
    CHECK(iback.c == interp.c);

    CHECK(serialize_penalty(penalty_tight_qubo(fixtures::ex1(), 3)).rfind("# scheme=tight_qubo eps=auto\n", 0) == 0);
    CHECK_THROWS_AS(parse_penalty("1 1\n3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_penalty("1 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_penalty("1 1\n1 2\n"), ParseError);
}
