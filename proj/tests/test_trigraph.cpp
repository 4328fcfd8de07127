#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twinwl/generators.hpp"
#include "twinwl/trigraph.hpp"

using namespace twinwl;
namespace tst = twinwl::testing;

TEST_CASE("quotient of P4 by {{a,b},{c},{d}}") {
    ColoredGraph p4 = tst::path(4);
    Trigraph t = Trigraph::quotient(p4, {{0, 1}, {2}, {3}});
    CHECK(t.num_live() == 3);
    CHECK(t.red(0, 1));    // {ab} - c
    CHECK(t.black(1, 2));  // c - d
    CHECK(!t.adjacent(0, 2));
}

TEST_CASE("discrete quotient is the graph, all black") {
    ColoredGraph g = tst::random_graph(7, 0.5, 11);
    std::vector<std::vector<int>> P;
    for (int v = 0; v < 7; ++v) P.push_back({v});
    Trigraph t = Trigraph::quotient(g, P);
    CHECK(t.red_edge_count() == 0);
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) CHECK(t.black(u, v) == g.adjacent(u, v));
}

TEST_CASE("fully connected parts join black") {
    Trigraph t = Trigraph::quotient(tst::complete(4), {{0, 1}, {2, 3}});
    CHECK(t.black(0, 1));
    CHECK(t.red_edge_count() == 0);
}

TEST_CASE("quotient rejects non-partitions") {
    ColoredGraph g = tst::path(3);
    CHECK_THROWS_AS(Trigraph::quotient(g, {{0, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(Trigraph::quotient(g, {{0, 1}}), Error);
}

TEST_CASE("contract examples") {
    ColoredGraph p4 = tst::path(4);
    Trigraph t = Trigraph::from_graph(p4).contract(0, 1);
    int merged = 4;  // fresh id
    CHECK(t.red(merged, 2));
    CHECK(t.black(2, 3));
    CHECK(t.red_edge_count() == 1);

    Trigraph k2 = Trigraph::from_graph(parse_graph("p graph 2 1\ne 0 1\n")).contract(0, 1);
    CHECK(k2.num_live() == 1);
    CHECK(k2.red_edge_count() == 0);

    // C5, contract two adjacent vertices: both outside neighbors of the pair
    // see exactly one endpoint, so the merged part has two red edges.
    Trigraph c5 = Trigraph::from_graph(tst::cycle(5)).contract(0, 1);
    CHECK(c5.red_degree(5) == 2);
    CHECK(c5.red(5, 2));
    CHECK(c5.red(5, 4));
    CHECK(c5.black(2, 3));
    CHECK(c5.black(3, 4));

    CHECK_THROWS_AS(c5.contract(0, 2), Error);  // dead part
    CHECK_THROWS_AS(c5.contract(2, 2), Error);
}

TEST_CASE("replay consistency: incremental contract equals from-scratch quotient") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + (int)(rng() % 7);
        ColoredGraph g = tst::random_graph(n, 0.5, rng());
        Trigraph t = Trigraph::from_graph(g);
        while (t.num_live() > 1) {
            auto ids = t.live_ids();
            int a = ids[rng() % ids.size()], b;
            do {
                b = ids[rng() % ids.size()];
            } while (a == b);
            t = t.contract(a, b);
            std::vector<std::vector<int>> P;
            for (int id : t.live_ids()) P.push_back(t.part(id));
            CHECK(t.canonical_view() == Trigraph::quotient(g, P).canonical_view());
        }
    }
}

TEST_CASE("verify_sequence: P4 sequence has width 1") {
    ColoredGraph p4 = tst::path(4);
    // (a,b), (c,d), ({ab},{cd}) with fresh ids 4 and 5
    ContractionSequence s{p4, {{0, 1}, {2, 3}, {4, 5}}};
    WidthReport rep = verify_sequence(p4, s);
    CHECK(rep.width == 1);
    CHECK(rep.per_step.size() == 3);
    CHECK(rep.width == std::max({rep.per_step[0].first, rep.per_step[1].first,
                                 rep.per_step[2].first}));
}

TEST_CASE("verify_sequence: cograph contracted twin-first has width 0") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        ColoredGraph g = random_cograph(2 + (int)(seed % 7), seed);
        Trigraph t = Trigraph::from_graph(g);
        ContractionSequence s{g, {}};
        while (t.num_live() > 1) {
            auto ids = t.live_ids();
            bool found = false;
            for (size_t i = 0; i < ids.size() && !found; ++i)
                for (size_t j = i + 1; j < ids.size() && !found; ++j) {
                    Bitset diff = t.black_row(ids[i]) ^ t.black_row(ids[j]);
                    diff.reset(ids[i]);
                    diff.reset(ids[j]);
                    if (diff.none() && t.red_degree(ids[i]) == 0 &&
                        t.red_degree(ids[j]) == 0) {
                        s.merges.emplace_back(ids[i], ids[j]);
                        t = t.contract(ids[i], ids[j]);
                        found = true;
                    }
                }
            REQUIRE(found);  // twin-width 0: twins exist at every step
        }
        CHECK(verify_sequence(g, s).width == 0);
    }
}

TEST_CASE("verify_sequence: half-graph side schedule has width 1") {
    HalfGraph h = half_graph(3);
    WidthReport rep = verify_sequence(h.g, h.side_schedule);
    CHECK(rep.width == 1);
    // replay to inspect the final parts: they are the two sides
    Trigraph t = Trigraph::from_graph(h.g);
    for (auto [a, b] : h.side_schedule.merges) t = t.contract(a, b);
    REQUIRE(t.num_live() == 2);
    auto ids = t.live_ids();
    std::vector<std::vector<int>> parts{t.part(ids[0]), t.part(ids[1])};
    std::sort(parts.begin(), parts.end());
    CHECK(parts[0] == h.left);
    CHECK(parts[1] == h.right);
}

TEST_CASE("verify_sequence rejects bad merges with the step index") {
    ColoredGraph p4 = tst::path(4);
    try {
        verify_sequence(p4, ContractionSequence{p4, {{0, 1}, {0, 2}}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_CASE("width report of a prefix is a prefix of the full report") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + (int)(rng() % 5);
        ColoredGraph g = tst::random_graph(n, 0.5, rng());
        Trigraph t = Trigraph::from_graph(g);
        ContractionSequence full{g, {}};
        while (t.num_live() > 1) {
            auto ids = t.live_ids();
            int a = ids[rng() % ids.size()], b;
            do {
                b = ids[rng() % ids.size()];
            } while (a == b);
            full.merges.emplace_back(a, b);
            t = t.contract(a, b);
        }
        WidthReport whole = verify_sequence(g, full);
        ContractionSequence prefix{g, {full.merges.begin(), full.merges.begin() + 2}};
        WidthReport part = verify_sequence(g, prefix);
        for (size_t i = 0; i < part.per_step.size(); ++i)
            CHECK(part.per_step[i] == whole.per_step[i]);
    }
}

TEST_CASE("red components") {
    ColoredGraph p4 = tst::path(4);
    Trigraph t = Trigraph::from_graph(p4);
    CHECK(t.red_components().size() == 4);  // all singletons
    CHECK(t.max_red_component() == 1);

    Trigraph one = t.contract(0, 1);  // a single red edge
    CHECK(one.max_red_component() == 2);
    CHECK(one.red_components().size() == 2);

    // a red 4-path: quotient of P8 by consecutive pairs alternating...
    ColoredGraph p8 = tst::path(8);
    Trigraph q = Trigraph::quotient(p8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    // {0,2}-{1,3} red (1-2 edge but 0-1 only partial): verify a component of 4
    CHECK(q.max_red_component() == 4);
}

TEST_CASE("sequence files round-trip") {
    HalfGraph h = half_graph(4);
    std::string text = render_sequence(h.side_schedule);
    ContractionSequence parsed = parse_sequence(text);
    CHECK(parsed.base == h.g);
    CHECK(parsed.merges == h.side_schedule.merges);
}
