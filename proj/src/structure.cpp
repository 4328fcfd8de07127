#include "twinwl/structure.hpp"

#include <algorithm>
#include <numeric>

namespace twinwl {

Gf2Matrix Gf2Matrix::biadjacency(const ColoredGraph& g, const std::vector<int>& A,
                                 const std::vector<int>& B) {
    for (int a : A)
        for (int b : B)
            if (a == b) throw Error("biadjacency: sets must be disjoint");
    Gf2Matrix m;
    m.cols = (int)B.size();
    m.row_labels = A;
    m.col_labels = B;
    for (int a : A) {
        Bitset row((int)B.size());
        for (int j = 0; j < (int)B.size(); ++j)
            if (g.adjacent(a, B[j])) row.set(j);
        m.rows.push_back(std::move(row));
    }
    return m;
}

int gf2_rank(Gf2Matrix m) {
    int rank = 0;
    std::vector<Bitset> pivots;
    std::vector<int> pivot_col;
    for (auto& row : m.rows) {
        for (size_t p = 0; p < pivots.size(); ++p)
            if (row.test(pivot_col[p])) row ^= pivots[p];
        int lead = row.find_first();
        if (lead == -1) continue;
        pivots.push_back(row);
        pivot_col.push_back(lead);
        ++rank;
    }
    return rank;
}

int cut_rank(const ColoredGraph& g, const std::vector<int>& A, const std::vector<int>& B) {
    return gf2_rank(Gf2Matrix::biadjacency(g, A, B));
}

namespace {

// Right side sorted by neighborhood size ascending (nested when chain).
struct SideData {
    std::vector<Bitset> left_nbhd;  // over right positions
    std::vector<int> right_sorted;  // indices into b.right
    std::vector<int> left_deg;
};

SideData side_data(const BipartiteView& b) {
    SideData d;
    int nr = (int)b.right.size();
    std::vector<int> rdeg(nr, 0);
    d.left_nbhd.assign(b.left.size(), Bitset(nr));
    for (size_t i = 0; i < b.left.size(); ++i)
        for (int j = 0; j < nr; ++j)
            if (b.adjacent(b.left[i], b.right[j])) {
                d.left_nbhd[i].set(j);
                ++rdeg[j];
            }
    d.right_sorted.resize(nr);
    std::iota(d.right_sorted.begin(), d.right_sorted.end(), 0);
    std::sort(d.right_sorted.begin(), d.right_sorted.end(),
              [&](int x, int y) { return rdeg[x] != rdeg[y] ? rdeg[x] < rdeg[y] : x < y; });
    d.left_deg.resize(b.left.size());
    for (size_t i = 0; i < b.left.size(); ++i) d.left_deg[i] = d.left_nbhd[i].count();
    return d;
}

std::optional<std::pair<int, int>> incomparable_pair(const BipartiteView& b) {
    // search both sides for neighborhoods that neither contain one another
    auto scan = [&](const std::vector<int>& side, const std::vector<int>& other)
        -> std::optional<std::pair<int, int>> {
        std::vector<Bitset> nb(side.size(), Bitset((int)other.size()));
        for (size_t i = 0; i < side.size(); ++i)
            for (size_t j = 0; j < other.size(); ++j)
                if (b.adjacent(side[i], other[j])) nb[i].set((int)j);
        for (size_t i = 0; i < side.size(); ++i)
            for (size_t j = i + 1; j < side.size(); ++j)
                if (!nb[i].is_subset_of(nb[j]) && !nb[j].is_subset_of(nb[i]))
                    return std::make_pair(side[i], side[j]);
        return std::nullopt;
    };
    if (auto p = scan(b.left, b.right)) return p;
    return scan(b.right, b.left);
}

}  // namespace

ChainCheck is_partial_half_graph(const BipartiteView& b) {
    ChainCheck out;
    int a = (int)b.left.size(), r = (int)b.right.size();
    if (a == 0 || r == 0) {
        out.is_chain = true;
        out.embed_t = std::max(1, a + r);
        int idx = 1;
        for (int v : b.left) out.left_embedding.emplace_back(v, idx++);
        for (int v : b.right) out.right_embedding.emplace_back(v, idx++);
        return out;
    }
    SideData d = side_data(b);

    // Chain iff every left neighborhood is a suffix of the size-sorted right
    // order (ties on the right are twins in a chain graph, so any tie order
    // works).
    for (int i = 0; i < a; ++i) {
        Bitset suffix(r);
        for (int j = r - d.left_deg[i]; j < r; ++j) suffix.set(d.right_sorted[j]);
        if (!(suffix == d.left_nbhd[i])) {
            out.is_chain = false;
            out.counterexample = incomparable_pair(b);
            return out;
        }
    }
    out.is_chain = true;

    // Merge order: before right position j comes every left vertex whose
    // neighborhood starts at j; edge iff left index <= right index in H_t.
    std::vector<std::vector<int>> starts(r + 2);
    for (int i = 0; i < a; ++i) starts[r - d.left_deg[i] + 1].push_back(i);
    int idx = 0;
    for (int j = 1; j <= r + 1; ++j) {
        for (int i : starts[j]) out.left_embedding.emplace_back(b.left[i], ++idx);
        if (j <= r) out.right_embedding.emplace_back(b.right[d.right_sorted[j - 1]], ++idx);
    }
    out.embed_t = idx;
    return out;
}

HalfGraphWitness max_induced_half_graph(const BipartiteView& b) {
    ChainCheck chk = is_partial_half_graph(b);
    if (!chk.is_chain)
        throw Error("max_induced_half_graph: input is not a partial half-graph");
    HalfGraphWitness out;
    int a = (int)b.left.size(), r = (int)b.right.size();
    if (a == 0 || r == 0) return out;
    SideData d = side_data(b);

    // Delete isolated vertices and twins: one left representative per
    // distinct nonzero neighborhood, one right representative per distinct
    // nonzero "column".
    std::vector<int> lrep;  // left indices, distinct nbhds, size descending
    {
        std::vector<int> ord(a);
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](int x, int y) {
            return d.left_deg[x] != d.left_deg[y] ? d.left_deg[x] > d.left_deg[y] : x < y;
        });
        for (int i : ord) {
            if (d.left_deg[i] == 0) continue;
            if (!lrep.empty() && d.left_nbhd[lrep.back()] == d.left_nbhd[i]) continue;
            lrep.push_back(i);
        }
    }
    std::vector<int> rrep;  // right positions, distinct columns, degree ascending
    {
        std::vector<Bitset> col(r, Bitset(a));
        for (int i = 0; i < a; ++i)
            d.left_nbhd[i].for_each([&](int j) { col[j].set(i); });
        for (int j : d.right_sorted) {
            if (col[j].none()) continue;
            if (!rrep.empty() && col[rrep.back()] == col[j]) continue;
            rrep.push_back(j);
        }
    }

    // The reduction of a partial half-graph is a perfect staircase H_t.
    int t = (int)lrep.size();
    if ((int)rrep.size() != t)
        throw Error("max_induced_half_graph: internal: reduction is not square");
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (d.left_nbhd[lrep[i]].test(rrep[j]) != (i <= j))
                throw Error("max_induced_half_graph: internal: reduction is not H_t");
    out.t = t;
    for (int i = 0; i < t; ++i)
        out.pairs.emplace_back(b.left[lrep[i]], b.right[rrep[i]]);
    return out;
}

MatchingResult max_matching(const BipartiteView& b) {
    int a = (int)b.left.size(), r = (int)b.right.size();
    std::vector<int> match_r(r, -1), match_l(a, -1);
    std::vector<char> used(r);
    auto augment = [&](auto&& self, int i) -> bool {
        for (int j = 0; j < r; ++j) {
            if (used[j] || !b.adjacent(b.left[i], b.right[j])) continue;
            used[j] = 1;
            if (match_r[j] == -1 || self(self, match_r[j])) {
                match_r[j] = i;
                match_l[i] = j;
                return true;
            }
        }
        return false;
    };
    MatchingResult out;
    for (int i = 0; i < a; ++i) {
        std::fill(used.begin(), used.end(), 0);
        if (augment(augment, i)) ++out.size;
    }
    for (int i = 0; i < a; ++i)
        if (match_l[i] != -1) out.edges.emplace_back(b.left[i], b.right[match_l[i]]);
    return out;
}

BicliqueWitness max_balanced_biclique_chain(const BipartiteView& b) {
    ChainCheck chk = is_partial_half_graph(b);
    if (!chk.is_chain)
        throw Error("max_balanced_biclique_chain: input is not a partial half-graph");
    BicliqueWitness out;
    int a = (int)b.left.size();
    if (a == 0 || b.right.empty()) return out;
    SideData d = side_data(b);
    std::vector<int> ord(a);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int x, int y) {
        return d.left_deg[x] != d.left_deg[y] ? d.left_deg[x] > d.left_deg[y] : x < y;
    });
    int best = 0, best_i = -1;
    for (int i = 0; i < a; ++i) {
        int t = std::min(i + 1, d.left_deg[ord[i]]);
        if (t > best) {
            best = t;
            best_i = i;
        }
    }
    out.t = best;
    if (best == 0) return out;
    for (int i = 0; i < best; ++i) out.left.push_back(b.left[ord[i]]);
    std::vector<int> nb = d.left_nbhd[ord[best_i]].to_vector();
    for (int k = 0; k < best; ++k) out.right.push_back(b.right[nb[k]]);
    return out;
}

int rank_connectivity(const ColoredGraph& g, const std::vector<int>& A,
                      const std::vector<int>& B) {
    if (g.n() > 20)
        throw BudgetError("rank_connectivity: brute-force cuts guarded to n <= 20");
    Bitset inA(g.n()), inB(g.n());
    for (int v : A) inA.set(v);
    for (int v : B) {
        if (inA.test(v)) throw Error("rank_connectivity: A and B must be disjoint");
        inB.set(v);
    }
    std::vector<int> free;
    for (int v = 0; v < g.n(); ++v)
        if (!inA.test(v) && !inB.test(v)) free.push_back(v);

    int best = -1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << free.size()); ++mask) {
        std::vector<int> X = A, Y;
        for (size_t i = 0; i < free.size(); ++i)
            (mask >> i & 1 ? X : Y).push_back(free[i]);
        for (int v : B) Y.push_back(v);
        int rk = cut_rank(g, X, Y);
        if (best == -1 || rk < best) best = rk;
        if (best == 0) break;
    }
    return best;
}

RedCutAudit audit_red_cuts(const ColoredGraph& g, const ContractionSequence& s) {
    if (verify_sequence(g, s).width > 1)
        throw Error("audit_red_cuts: sequence has width > 1");
    RedCutAudit out;
    auto parent = std::make_shared<ColoredGraph>(g);
    Trigraph t = Trigraph::from_graph(g);

    auto check_state = [&](int step) {
        auto ids = t.live_ids();
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) {
                BipartiteView view;
                view.parent = parent;
                view.left = t.part(ids[i]);
                view.right = t.part(ids[j]);
                ++out.cuts_checked;
                if (!is_partial_half_graph(view).is_chain) {
                    out.ok = false;
                    out.violation = RedCutAudit::Violation{step, view.left, view.right};
                    return false;
                }
            }
        return true;
    };

    if (!check_state(0)) return out;
    ++out.steps_checked;
    for (size_t i = 0; i < s.merges.size(); ++i) {
        t = t.contract(s.merges[i].first, s.merges[i].second);
        if (!check_state((int)i + 1)) return out;
        ++out.steps_checked;
    }
    return out;
}

}  // namespace twinwl
