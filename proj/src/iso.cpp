#include "twinwl/iso.hpp"

#include <algorithm>

#include "twinwl/wl.hpp"

namespace twinwl {

namespace {

struct Vf2 {
    const ColoredGraph& g;
    const ColoredGraph& h;
    std::vector<uint32_t> class_g, class_h;  // joint stable 1-WL colors
    std::vector<int> fwd, bwd;               // partial mapping, -1 = free
    uint64_t nodes = 0, max_nodes;

    Vf2(const ColoredGraph& g_, const ColoredGraph& h_, uint64_t cap)
        : g(g_), h(h_), max_nodes(cap) {
        std::tie(class_g, class_h) = joint_color_refinement(g_, h_);
        fwd.assign(g.n(), -1);
        bwd.assign(h.n(), -1);
    }

    // Next vertex to match: prefer one adjacent to the mapped core, then the
    // rarest class. Deterministic.
    int pick() const {
        int best = -1;
        long best_key = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (fwd[v] != -1) continue;
            long attached = 0;
            g.neighbors(v).for_each([&](int u) { attached += fwd[u] != -1; });
            long key = -(attached << 20) + v;
            if (best == -1 || key < best_key) {
                best = v;
                best_key = key;
            }
        }
        return best;
    }

    bool feasible(int v, int w) const {
        if (class_g[v] != class_h[w]) return false;
        int dm = 0;
        bool ok = true;
        g.neighbors(v).for_each([&](int u) {
            if (fwd[u] != -1) {
                ++dm;
                if (!h.adjacent(w, fwd[u])) ok = false;
            }
        });
        if (!ok) return false;
        int dm2 = 0;
        h.neighbors(w).for_each([&](int u) { dm2 += bwd[u] != -1; });
        return dm == dm2;
    }

    bool search(int depth) {
        if (++nodes > max_nodes) throw BudgetError("find_isomorphism: node budget exceeded");
        if (depth == g.n()) return true;
        int v = pick();
        for (int w = 0; w < h.n(); ++w) {
            if (bwd[w] != -1 || !feasible(v, w)) continue;
            fwd[v] = w;
            bwd[w] = v;
            if (search(depth + 1)) return true;
            fwd[v] = -1;
            bwd[w] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g,
                                                 const ColoredGraph& h,
                                                 uint64_t max_nodes) {
    if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
    {
        // Fast invariant screens before the search proper.
        auto key = [](const ColoredGraph& x) {
            std::vector<std::pair<int, int>> k(x.n());
            for (int v = 0; v < x.n(); ++v) k[v] = {x.color(v), x.degree(v)};
            std::sort(k.begin(), k.end());
            return k;
        };
        if (key(g) != key(h)) return std::nullopt;
    }
    Vf2 vf(g, h, max_nodes);
    {
        std::vector<uint32_t> a = vf.class_g, b = vf.class_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    if (!vf.search(0)) return std::nullopt;
    return vf.fwd;
}

bool isomorphic(const ColoredGraph& g, const ColoredGraph& h, uint64_t max_nodes) {
    return find_isomorphism(g, h, max_nodes).has_value();
}

bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                    const std::vector<int>& f) {
    if (g.n() != h.n() || (int)f.size() != g.n()) return false;
    std::vector<bool> hit(h.n(), false);
    for (int v = 0; v < g.n(); ++v) {
        if (f[v] < 0 || f[v] >= h.n() || hit[f[v]]) return false;
        hit[f[v]] = true;
        if (g.color(v) != h.color(f[v])) return false;
    }
    for (int v = 0; v < g.n(); ++v)
        for (int w = v + 1; w < g.n(); ++w)
            if (g.adjacent(v, w) != h.adjacent(f[v], f[w])) return false;
    return true;
}

}  // namespace twinwl
