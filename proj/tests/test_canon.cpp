#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twinwl/canon.hpp"
#include "twinwl/generators.hpp"
#include "twinwl/iso.hpp"
#include "twinwl/modular.hpp"
#include "twinwl/tww_search.hpp"

using namespace twinwl;
namespace tst = twinwl::testing;

namespace {

bool is_prime(const ColoredGraph& g) { return mod_tree(g).is_prime_graph(); }

// Replays the run implied by a successful cs trace and checks the
// single-red-edge property at every non-terminal step.
void check_single_red_replay(const ColoredGraph& g, const CsTrace& trace) {
    std::vector<std::pair<int, int>> reps = trace.rep_merges;
    int v_rep = trace.red_steps.empty() ? trace.v : trace.red_steps.back();
    reps.emplace_back(trace.u, v_rep);
    ContractionSequence seq = sequence_from_reps(g, reps);
    CHECK(verify_sequence(g, seq).width <= 1);
    Trigraph t = Trigraph::from_graph(g);
    for (size_t i = 0; i < seq.merges.size(); ++i) {
        t = t.contract(seq.merges[i].first, seq.merges[i].second);
        if (t.num_live() > 1 && i + 1 < seq.merges.size()) CHECK(t.red_edge_count() == 1);
        CHECK(t.red_edge_count() <= 1);
    }
    CHECK(t.num_live() == 1);
}

}  // namespace

TEST_CASE("near twins on the P4 trace") {
    ColoredGraph p4 = tst::path(4);
    Trigraph t = Trigraph::quotient(p4, {{0, 1}, {2}, {3}});  // red {ab}-c, black c-d
    // w = d with types (nonedge to the merged part, edge to c), host c
    auto hit = near_twins(t, NearTwinQuery{false, true, 1, 0});
    CHECK(hit == std::vector<int>{2});
    // the u side hosts nothing
    CHECK(near_twins(t, NearTwinQuery{false, true, 0, 0}).empty());
    // other type combinations are empty as well
    CHECK(near_twins(t, NearTwinQuery{true, true, 1, 0}).empty());
    CHECK(near_twins(t, NearTwinQuery{false, false, 1, 0}).empty());
}

TEST_CASE("near twins require exactly one red edge") {
    ColoredGraph p3 = tst::path(3);
    Trigraph t = Trigraph::quotient(p3, {{0, 1}, {2}});  // red K2, no third part
    CHECK(t.red_edge_count() == 1);
    CHECK(near_twins(t, NearTwinQuery{false, true, 0, 0}).empty());
    CHECK(near_twins(t, NearTwinQuery{false, true, 1, 0}).empty());
    Trigraph none = Trigraph::from_graph(p3);
    CHECK_THROWS_AS(near_twins(none, NearTwinQuery{false, true, 0, 0}), Error);
}

TEST_CASE("cs on P4 from the adjacent pair (a,b)") {
    ColoredGraph p4 = tst::path(4);
    CsTrace trace;
    CsString s = cs(p4, 0, 1, &trace);
    REQUIRE(!s.failure);
    REQUIRE(s.tokens.size() == 3);
    CHECK(std::get<CsInit>(s.tokens[0]) == CsInit{1, 0, 0});
    // the red partner c is adjacent to the v side
    CHECK(std::get<CsRed>(s.tokens[1]) == CsRed{0, 0});
    // d counted at type pair (nonedge, edge), side v; palette has one color
    std::vector<uint32_t> expect(8, 0);
    expect[3] = 1;  // (t0,t1) index 1, side v: slot (1*2+1)*1 = 3
    CHECK(std::get<CsCounts>(s.tokens[2]).counts == expect);
    check_single_red_replay(p4, trace);
}

TEST_CASE("cs on P4 from the nonadjacent pair (a,c) succeeds") {
    // The spec's example table expects Failure here, but the paper's procedure
    // accepts: W = {d} at the first step and b is then a near twin of the
    // merged endpoint, giving the valid width-1 run (a,c),(ac,b),(abc,d).
    ColoredGraph p4 = tst::path(4);
    CsTrace trace;
    CsString s = cs(p4, 0, 2, &trace);
    REQUIRE(!s.failure);
    check_single_red_replay(p4, trace);
}

TEST_CASE("cs fails when no unique red successor exists") {
    ColoredGraph p4 = tst::path(4);
    CHECK(cs(p4, 0, 3, nullptr).failure);  // both b and c differ on {a,d}
    ColoredGraph c5 = tst::cycle(5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) CHECK(cs(c5, u, v, nullptr).failure);
}

TEST_CASE("cs_invariant of K1 is the leaf color") {
    ColoredGraph one(1, {}, {7});
    CsString s = cs_invariant(one);
    REQUIRE(!s.failure);
    REQUIRE(s.tokens.size() == 1);
    CHECK(std::get<CsLeaf>(s.tokens[0]) == CsLeaf{7});
}

TEST_CASE("cs_invariant equals the direct minimum over all ordered pairs") {
    auto direct_min = [](const ColoredGraph& g) {
        CsString best = CsString::fail();
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v) {
                if (u == v) continue;
                CsString s = cs(g, u, v, nullptr);
                if (!s.failure && s < best) best = s;
            }
        return best;
    };
    ColoredGraph p4 = tst::path(4);
    CHECK(cs_invariant(p4) == direct_min(p4));
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Tww1Sample s = random_tww1_prime(9, seed);
        CHECK(cs_invariant(s.g) == direct_min(s.g));
    }
}

TEST_CASE("cs_invariant is Failure exactly on prime graphs of larger twin-width") {
    CHECK(cs_invariant(tst::cycle(5)).failure);
    CHECK(cs_invariant(tst::cycle(6)).failure);
    CHECK(!cs_invariant(tst::path(5)).failure);
}

TEST_CASE("Lemma 4.4, forward: cs is invariant under isomorphism") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        Tww1Sample s = random_tww1_prime(10, rng());
        auto perm = tst::random_permutation(10, rng());
        ColoredGraph h = s.g.relabeled(perm);
        for (int reps = 0; reps < 6; ++reps) {
            int u = (int)(rng() % 10), v;
            do {
                v = (int)(rng() % 10);
            } while (u == v);
            CHECK(cs(s.g, u, v, nullptr) == cs(h, perm[u], perm[v], nullptr));
        }
        CHECK(cs_invariant(s.g) == cs_invariant(h));
    }
}

TEST_CASE("Lemma 4.4, backward: equal strings reconstruct a verified isomorphism") {
    // identical graphs, identical pairs
    ColoredGraph p4 = tst::path(4);
    auto f = reconstruct_isomorphism(p4, 0, 1, p4, 0, 1);
    CHECK(is_isomorphism(p4, p4, f));
    CHECK(f[0] == 0);
    CHECK(f[1] == 1);

    // P4 against its reversal
    ColoredGraph r4 = p4.relabeled({3, 2, 1, 0});
    auto g = reconstruct_isomorphism(p4, 0, 1, r4, 3, 2);
    CHECK(is_isomorphism(p4, r4, g));
    CHECK(g[0] == 3);
    CHECK(g[1] == 2);

    // random prime pairs matched via their lex-min witnesses
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        Tww1Sample s = random_tww1_prime(11, rng());
        auto perm = tst::random_permutation(11, rng());
        ColoredGraph h = s.g.relabeled(perm);
        CsInvariantResult a = cs_invariant_witness(s.g);
        CsInvariantResult b = cs_invariant_witness(h);
        REQUIRE(!a.value.failure);
        REQUIRE(a.value == b.value);
        auto iso = reconstruct_isomorphism(s.g, a.u, a.v, h, b.u, b.v);
        CHECK(is_isomorphism(s.g, h, iso));
    }

    // mismatched strings are an error
    CHECK_THROWS_AS(reconstruct_isomorphism(p4, 0, 1, p4, 0, 2), Error);
}

TEST_CASE("replay soundness on random prime samples") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        Tww1Sample s = random_tww1_prime(12, rng());
        CsInvariantResult w = cs_invariant_witness(s.g);
        REQUIRE(!w.value.failure);
        check_single_red_replay(s.g, w.trace);
    }
}

TEST_CASE("recognition: cographs, P4, C5") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Tww1Result r = is_twinwidth_le1(random_cograph(8, seed));
        CHECK(r.accepted);  // no prime nodes in a cograph's tree
    }
    Tww1Result p4 = is_twinwidth_le1(tst::path(4));
    REQUIRE(p4.accepted);
    CHECK(verify_sequence(tst::path(4), *p4.certificate).width <= 1);
    CHECK(p4.certificate->merges.size() == 3);
    CHECK(!is_twinwidth_le1(tst::cycle(5)).accepted);
}

TEST_CASE("recognition agrees with the exact oracle exhaustively at n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        tst::for_each_graph(n, [&](const ColoredGraph& g) {
            bool le1 = tst::naive_twinwidth(g) <= 1;
            Tww1Result r = is_twinwidth_le1(g);
            REQUIRE(r.accepted == le1);
            if (r.accepted) {
                REQUIRE(r.certificate.has_value());
                CHECK(verify_sequence(g, *r.certificate).width <= 1);
            }
        });
    }
}

TEST_CASE("recognition agrees with the exact search on random n = 7, 8") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 7 + (trial & 1);
        ColoredGraph g = trial % 3 == 0 ? random_tww1(n, rng()).g
                                        : tst::random_graph(n, 0.25 + 0.05 * (trial % 7), rng());
        CHECK(is_twinwidth_le1(g).accepted == (exact_twinwidth(g).width() <= 1));
    }
}

TEST_CASE("generated tww-1 samples are recognized and certified") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Tww1Sample s = random_tww1(4 + (int)(rng() % 20), rng());
        CHECK(verify_sequence(s.g, s.certificate).width <= 1);
        Tww1Result r = is_twinwidth_le1(s.g);
        REQUIRE(r.accepted);
        CHECK(verify_sequence(s.g, *r.certificate).width <= 1);
    }
}

TEST_CASE("canonical form: relabelings agree, different graphs differ") {
    CHECK(canonical_form(tst::path(4)).bytes != canonical_form(tst::path(3)).bytes);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + (int)(rng() % 14);
        Tww1Sample s = random_tww1(n, rng());
        ColoredGraph h = s.g.relabeled(tst::random_permutation(n, rng()));
        CanonicalForm a = canonical_form(s.g);
        CanonicalForm b = canonical_form(h);
        CHECK(a.bytes == b.bytes);
        // the canonical order relabels both graphs to the same labeled graph
        std::vector<int> pa(n), pb(n);
        for (int i = 0; i < n; ++i) pa[a.order[i]] = i, pb[b.order[i]] = i;
        CHECK(s.g.relabeled(pa) == h.relabeled(pb));
    }
}

TEST_CASE("canonical form equality coincides with the isomorphism oracle") {
    std::mt19937_64 rng(53);
    std::vector<ColoredGraph> pool;
    for (int trial = 0; trial < 16; ++trial) pool.push_back(random_tww1(7, rng()).g);
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            bool same = canonical_form(pool[i]).bytes == canonical_form(pool[j]).bytes;
            CHECK(same == isomorphic(pool[i], pool[j]));
        }
}

TEST_CASE("canonical form distinguishes colors") {
    ColoredGraph a(3, {{0, 1}, {1, 2}}, {0, 1, 0});
    ColoredGraph b(3, {{0, 1}, {1, 2}}, {1, 0, 0});
    ColoredGraph c(3, {{0, 1}, {1, 2}}, {0, 0, 1});
    CHECK(canonical_form(a).bytes != canonical_form(b).bytes);   // center vs end colored
    CHECK(canonical_form(a).bytes == canonical_form(a.relabeled({2, 1, 0})).bytes);
    CHECK(canonical_form(b).bytes == canonical_form(c).bytes);   // mirror images
}

TEST_CASE("canonical form rejects twin-width > 1") {
    CHECK_THROWS_AS(canonical_form(tst::cycle(5)), Error);
}
