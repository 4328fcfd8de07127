#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twinwl/generators.hpp"
#include "twinwl/tww_search.hpp"

using namespace twinwl;
namespace tst = twinwl::testing;

TEST_CASE("cographs have twin-width 0") {
    CHECK(exact_twinwidth(tst::complete(4)).width() == 0);
    // join of P3 with an apex is a cograph
    ColoredGraph p3_join(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(exact_twinwidth(p3_join).width() == 0);
    for (uint64_t seed = 0; seed < 8; ++seed)
        CHECK(exact_twinwidth(random_cograph(6, seed)).width() == 0);
}

TEST_CASE("P4 has twin-width 1 and C5 has twin-width 2") {
    CHECK(tst::naive_twinwidth(tst::path(4)) == 1);
    CHECK(exact_twinwidth(tst::path(4)).width() == 1);
    CHECK(tst::naive_twinwidth(tst::cycle(5)) == 2);
    CHECK(exact_twinwidth(tst::cycle(5)).width() == 2);
}

TEST_CASE("certificates replay to the claimed width") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        ColoredGraph g = tst::random_graph(3 + (int)(rng() % 5), 0.5, rng());
        ExactResult r = exact_twinwidth(g);
        REQUIRE(r.certificate.has_value());
        CHECK(verify_sequence(g, *r.certificate).width == r.width());
    }
}

TEST_CASE("oracle equivalence on random graphs up to n = 7") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + (int)(rng() % 6);
        ColoredGraph g = tst::random_graph(n, 0.3 + 0.05 * (trial % 9), rng());
        CHECK(exact_twinwidth(g).width() == tst::naive_twinwidth(g));
    }
}

TEST_CASE("twin-width is monotone under induced subgraphs (spot check)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        ColoredGraph g = tst::random_graph(7, 0.5, rng());
        int w = exact_twinwidth(g).width();
        std::vector<int> S;
        for (int v = 0; v < 7; ++v)
            if (rng() % 2) S.push_back(v);
        if (S.empty()) continue;
        CHECK(exact_twinwidth(g.induced_subgraph(S).first).width() <= w);
    }
}

TEST_CASE("budget exhaustion is a distinguished result with bounds") {
    ColoredGraph g = tst::random_graph(14, 0.5, 123);
    SearchBudget tiny;
    tiny.max_nodes = 20;
    ExactResult r = exact_twinwidth(g, tiny);
    CHECK(r.exhausted);
    CHECK_THROWS_AS(r.width(), Error);
    if (r.upper != -1) {
        REQUIRE(r.certificate.has_value());
        CHECK(verify_sequence(g, *r.certificate).width == r.upper);
        CHECK(r.lower <= r.upper);
    }
}

TEST_CASE("heuristic finds width-1 sequences for P4 and half-graphs") {
    HeuristicResult p4 = heuristic_sequence(tst::path(4), 1);
    REQUIRE(p4.found);
    CHECK(verify_sequence(tst::path(4), *p4.sequence).width <= 1);

    HalfGraph h6 = half_graph(6);
    HeuristicResult r = heuristic_sequence(h6.g, 1);
    REQUIRE(r.found);
    CHECK(verify_sequence(h6.g, *r.sequence).width <= 1);
}

TEST_CASE("heuristic is sound: reported width matches the certificate") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        ColoredGraph g = tst::random_graph(10, 0.4, rng());
        HeuristicResult r = heuristic_sequence(g, 2);
        REQUIRE(r.sequence.has_value());
        CHECK(verify_sequence(g, *r.sequence).width == r.achieved);
        if (r.found) CHECK(r.achieved <= 2);
    }
}
