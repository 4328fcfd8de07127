#include "twinwl/modular.hpp"

#include <algorithm>
#include <numeric>

namespace twinwl {

std::string to_string(ModLabel l) {
    switch (l) {
        case ModLabel::Single: return "single";
        case ModLabel::Parallel: return "parallel";
        case ModLabel::Series: return "series";
        case ModLabel::Prime: return "prime";
    }
    return "?";
}

namespace {

// Smallest module containing S: repeatedly absorb every vertex that is
// non-homogeneous to the current set. Returns a bitset; may grow to V.
Bitset module_closure(const ColoredGraph& g, Bitset S) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (int w = 0; w < g.n(); ++w) {
            if (S.test(w)) continue;
            Bitset inter = g.neighbors(w) & S;
            if (inter.none()) continue;
            if (!S.is_subset_of(g.neighbors(w))) {
                S.set(w);
                grew = true;
            }
        }
    }
    return S;
}

}  // namespace

std::vector<std::vector<int>> maximal_modules(const ColoredGraph& g) {
    if (g.n() < 2) throw Error("maximal_modules: need n >= 2");
    if (!g.is_connected())
        throw Error("maximal_modules: input disconnected; recurse via mod_tree");
    if (!g.complement().is_connected())
        throw Error("maximal_modules: complement disconnected; recurse via mod_tree");

    // For connected and coconnected G, the maximal strong module containing u
    // is the union of all proper closures of pairs through u (every module
    // containing both u and an outside vertex must already be all of V).
    std::vector<int> owner(g.n(), -1);
    std::vector<std::vector<int>> parts;
    for (int u = 0; u < g.n(); ++u) {
        if (owner[u] != -1) continue;
        Bitset M(g.n());
        M.set(u);
        for (int v = 0; v < g.n(); ++v) {
            if (v == u || M.test(v)) continue;
            Bitset seed(g.n());
            seed.set(u);
            seed.set(v);
            Bitset cl = module_closure(g, seed);
            if (cl.count() < g.n()) M |= cl;
        }
        int id = (int)parts.size();
        parts.push_back(M.to_vector());
        for (int v : parts.back()) owner[v] = id;
    }
    return parts;
}

ModTree mod_tree(const ColoredGraph& g) {
    if (g.n() < 1) throw Error("mod_tree: empty graph");
    ModTree t;

    // Recursive build; module vertex lists are in original ids.
    auto build = [&](auto&& self, const ColoredGraph& sub,
                     const std::vector<int>& ids, int parent) -> int {
        int me = (int)t.nodes.size();
        t.nodes.push_back({});
        t.nodes[me].module = ids;
        t.nodes[me].parent = parent;

        if (sub.n() == 1) {
            t.nodes[me].label = ModLabel::Single;
            return me;
        }

        std::vector<std::vector<int>> childs;
        if (!sub.is_connected()) {
            t.nodes[me].label = ModLabel::Parallel;
            childs = sub.components();
        } else if (auto co = sub.complement(); !co.is_connected()) {
            t.nodes[me].label = ModLabel::Series;
            childs = co.components();
        } else {
            t.nodes[me].label = ModLabel::Prime;
            childs = maximal_modules(sub);
        }
        std::sort(childs.begin(), childs.end());
        for (auto& c : childs) {
            auto [csub, cmap] = sub.induced_subgraph(c);
            std::vector<int> cids(c.size());
            for (size_t i = 0; i < c.size(); ++i) cids[i] = ids[c[i]];
            int child = self(self, csub, cids, me);
            t.nodes[me].children.push_back(child);
        }
        return me;
    };

    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    build(build, g, all, -1);
    return t;
}

std::vector<std::vector<int>> twins_partition(const ColoredGraph& g) {
    std::vector<int> rep(g.n());
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            Bitset diff = g.neighbors(u) ^ g.neighbors(v);
            diff.reset(u);
            diff.reset(v);
            if (diff.none()) rep[find(u)] = find(v);
        }
    std::vector<std::vector<int>> classes;
    std::vector<int> where(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        int r = find(v);
        if (where[r] == -1) {
            where[r] = (int)classes.size();
            classes.push_back({});
        }
        classes[where[r]].push_back(v);
    }
    return classes;
}

// quotient_star lives in canon.cpp: it colors modules by the rank of their
// canonical encodings.

}  // namespace twinwl
