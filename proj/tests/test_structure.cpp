#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twinwl/generators.hpp"
#include "twinwl/structure.hpp"

using namespace twinwl;
namespace tst = twinwl::testing;

namespace {

BipartiteView view_of(const ColoredGraph& g, std::vector<int> l, std::vector<int> r) {
    return BipartiteView::of(g, std::move(l), std::move(r));
}

BipartiteView half_view(int t) {
    HalfGraph h = half_graph(t);
    return view_of(h.g, h.left, h.right);
}

ColoredGraph kab(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return ColoredGraph(a + b, std::move(e));
}

std::vector<int> iota_vec(int from, int count) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

// random disjoint vertex sets
std::vector<std::vector<int>> random_disjoint(int n, int parts, std::mt19937_64& rng) {
    std::vector<std::vector<int>> out(parts);
    for (int v = 0; v < n; ++v) {
        int where = (int)(rng() % (parts + 1));
        if (where < parts) out[where].push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("gf2 rank basics") {
    CHECK(gf2_rank(Gf2Matrix::biadjacency(half_graph(3).g, iota_vec(0, 3), iota_vec(3, 3))) == 3);
    CHECK(cut_rank(kab(4, 4), iota_vec(0, 4), iota_vec(4, 4)) == 1);  // all ones
    CHECK(cut_rank(ColoredGraph(6), iota_vec(0, 3), iota_vec(3, 3)) == 0);  // zero matrix
}

TEST_CASE("gf2 rank properties") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        ColoredGraph g = tst::random_graph(9, 0.5, rng());
        auto sets = random_disjoint(9, 3, rng);
        auto &A = sets[0], &B = sets[1], &C = sets[2];
        std::vector<int> BC = B;
        BC.insert(BC.end(), C.begin(), C.end());
        // rank subadditivity
        CHECK(cut_rank(g, A, BC) <= cut_rank(g, A, B) + cut_rank(g, A, C));
        CHECK(cut_rank(g, A, B) <= (int)std::min(A.size(), B.size()));
        CHECK(cut_rank(g, A, B) == cut_rank(g, B, A));
    }
}

TEST_CASE("chain recognition examples") {
    ChainCheck h3 = is_partial_half_graph(half_view(3));
    CHECK(h3.is_chain);

    // 2K2 as a bipartite graph: false, with an incomparable witness returned
    ColoredGraph two_k2(4, {{0, 2}, {1, 3}});
    ChainCheck bad = is_partial_half_graph(view_of(two_k2, {0, 1}, {2, 3}));
    CHECK(!bad.is_chain);
    REQUIRE(bad.counterexample.has_value());
    auto [x, y] = *bad.counterexample;
    CHECK(x != y);

    ChainCheck empty = is_partial_half_graph(view_of(ColoredGraph(3), {0}, {1, 2}));
    CHECK(empty.is_chain);
}

TEST_CASE("chain recognition equals 2K2-freeness, embeddings certify") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        int a = 1 + (int)(rng() % 5), b = 1 + (int)(rng() % 5);
        ColoredGraph g = tst::random_graph(a + b, 0.0, rng());
        // random bipartite edges
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rng() % 100 < 55) e.emplace_back(i, a + j);
        g = ColoredGraph(a + b, std::move(e));
        BipartiteView view = view_of(g, iota_vec(0, a), iota_vec(a, b));
        ChainCheck chk = is_partial_half_graph(view);
        CHECK(chk.is_chain == tst::chain_by_2k2_freeness(g, view.left, view.right));
        if (chk.is_chain) {
            // the explicit embedding realizes the half-graph pattern
            std::map<int, int> pos;
            for (auto [v, i] : chk.left_embedding) pos[v] = i;
            for (auto [v, i] : chk.right_embedding) pos[v] = i;
            for (int l : view.left)
                for (int r : view.right)
                    CHECK(g.adjacent(l, r) == (pos[l] <= pos[r]));
        } else {
            auto [x, y] = *chk.counterexample;
            // incomparable: each has a private neighbor
            const auto& other = (x < a) ? view.right : view.left;
            bool x_private = false, y_private = false;
            for (int z : other) {
                x_private |= g.adjacent(x, z) && !g.adjacent(y, z);
                y_private |= g.adjacent(y, z) && !g.adjacent(x, z);
            }
            CHECK(x_private);
            CHECK(y_private);
        }
    }
}

TEST_CASE("max induced half-graph examples") {
    CHECK(max_induced_half_graph(half_view(3)).t == 3);

    // H_3 plus an isolated left vertex: still 3
    HalfGraph h3 = half_graph(3);
    ColoredGraph g(7, h3.g.edge_list());
    std::vector<int> left = h3.left;
    left.push_back(6);
    CHECK(max_induced_half_graph(view_of(g, left, h3.right)).t == 3);

    CHECK(max_induced_half_graph(view_of(kab(3, 3), iota_vec(0, 3), iota_vec(3, 3))).t == 1);
}

TEST_CASE("Lemma 5.3: max induced half-graph equals the reduced rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        BipartiteView b = random_chain_graph(2 + (int)(rng() % 7), 2 + (int)(rng() % 7),
                                             0.4 + 0.1 * (trial % 6), rng());
        HalfGraphWitness w = max_induced_half_graph(b);
        // witness pairs form a semi-induced H_t
        for (int i = 1; i <= w.t; ++i)
            for (int j = 1; j <= w.t; ++j)
                CHECK(b.parent->adjacent(w.pairs[i - 1].first, w.pairs[j - 1].second) ==
                      (i <= j));
        // rank of the original biadjacency equals t (twins and isolated
        // vertices do not change the rank)
        CHECK(cut_rank(*b.parent, b.left, b.right) == w.t);
    }
}

TEST_CASE("max matching") {
    for (int t = 1; t <= 5; ++t) CHECK(max_matching(half_view(t)).size == t);
    CHECK(max_matching(view_of(kab(3, 3), iota_vec(0, 3), iota_vec(3, 3))).size == 3);
    CHECK(max_matching(view_of(ColoredGraph(4), {0, 1}, {2, 3})).size == 0);
    // returned edges form a matching
    MatchingResult m = max_matching(half_view(4));
    std::set<int> used;
    for (auto [l, r] : m.edges) {
        CHECK(used.insert(l).second);
        CHECK(used.insert(r).second);
        CHECK(half_graph(4).g.adjacent(l, r));
    }
}

TEST_CASE("balanced bicliques in chain graphs") {
    BicliqueWitness h3 = max_balanced_biclique_chain(half_view(3));
    CHECK(h3.t == 2);
    CHECK(max_balanced_biclique_chain(view_of(kab(3, 3), iota_vec(0, 3), iota_vec(3, 3))).t == 3);
    CHECK(max_balanced_biclique_chain(view_of(kab(1, 1), {0}, {1})).t == 1);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        BipartiteView b = random_chain_graph(2 + (int)(rng() % 6), 2 + (int)(rng() % 6),
                                             0.5, rng());
        BicliqueWitness w = max_balanced_biclique_chain(b);
        CHECK(w.t == tst::exhaustive_balanced_biclique(*b.parent, b.left, b.right));
        // the witness is a biclique
        for (int l : w.left)
            for (int r : w.right) CHECK(b.parent->adjacent(l, r));
        // Lemma 5.4: a matching of size 2t-1 forces a K_{t,t}
        int mm = max_matching(b).size;
        for (int t = 1; 2 * t - 1 <= mm; ++t) CHECK(w.t >= t);
    }
}

TEST_CASE("rank connectivity examples") {
    CHECK(rank_connectivity(tst::complete(5), {0}, {4}) == 1);
    CHECK(rank_connectivity(ColoredGraph(2), {0}, {1}) == 0);  // separate components

    // P4, A={a}, B={d}: enumerate the four admissible cuts by hand
    ColoredGraph p4 = tst::path(4);
    int by_hand = std::min({cut_rank(p4, {0}, {1, 2, 3}), cut_rank(p4, {0, 1}, {2, 3}),
                            cut_rank(p4, {0, 2}, {1, 3}), cut_rank(p4, {0, 1, 2}, {3})});
    CHECK(by_hand == 1);
    CHECK(rank_connectivity(p4, {0}, {3}) == 1);

    CHECK_THROWS_AS(rank_connectivity(tst::random_graph(21, 0.5, 1), {0}, {1}),
                    BudgetError);
}

TEST_CASE("Lemma 2.1: monotonicity and subadditivity of rank connectivity") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + (int)(rng() % 5);
        ColoredGraph g = tst::random_graph(n, 0.45, rng());
        auto sets = random_disjoint(n, 3, rng);
        auto &A = sets[0], &B = sets[1], &C = sets[2];
        if (A.empty() || B.empty()) continue;
        std::vector<int> BC = B;
        BC.insert(BC.end(), C.begin(), C.end());
        CHECK(rank_connectivity(g, A, B) <= rank_connectivity(g, A, BC));

        std::vector<int> keepB, keepC;
        for (int v = 0; v < n; ++v) {
            bool inB = std::find(B.begin(), B.end(), v) != B.end();
            bool inC = std::find(C.begin(), C.end(), v) != C.end();
            if (!inC) keepB.push_back(v);
            if (!inB) keepC.push_back(v);
        }
        auto [gminusC, mapC] = g.induced_subgraph(keepB);
        auto [gminusB, mapB] = g.induced_subgraph(keepC);
        auto reindex = [](const std::vector<int>& S, const std::vector<int>& keep) {
            std::vector<int> out;
            for (int v : S) {
                auto it = std::find(keep.begin(), keep.end(), v);
                out.push_back((int)(it - keep.begin()));
            }
            return out;
        };
        int lhs = rank_connectivity(g, A, BC);
        int rhs = rank_connectivity(gminusC, reindex(A, keepB), reindex(B, keepB)) +
                  rank_connectivity(gminusB, reindex(A, keepC), reindex(C, keepC));
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("red-cut audit accepts width-1 sequences") {
    ColoredGraph p4 = tst::path(4);
    RedCutAudit a = audit_red_cuts(p4, ContractionSequence{p4, {{0, 1}, {2, 3}, {4, 5}}});
    CHECK(a.ok);
    CHECK(a.steps_checked == 4);

    HalfGraph h4 = half_graph(4);
    RedCutAudit b = audit_red_cuts(h4.g, h4.side_schedule);
    CHECK(b.ok);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Tww1Sample s = random_tww1(4 + (int)(rng() % 12), rng());
        CHECK(audit_red_cuts(s.g, s.certificate).ok);
    }
}

TEST_CASE("red-cut audit rejects wide sequences up front") {
    ColoredGraph c5 = tst::cycle(5);
    CHECK_THROWS_AS(audit_red_cuts(c5, ContractionSequence{c5, {{0, 2}, {5, 4}}}), Error);
}
