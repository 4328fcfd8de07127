#include "twinwl/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "twinwl/modular.hpp"

namespace twinwl {

HalfGraph half_graph(int t) {
    if (t < 1) throw Error("half_graph: t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= t; ++i)
        for (int j = i; j <= t; ++j) edges.emplace_back(i - 1, t + j - 1);
    HalfGraph h;
    h.g = ColoredGraph(2 * t, std::move(edges));
    for (int i = 0; i < t; ++i) h.left.push_back(i);
    for (int i = 0; i < t; ++i) h.right.push_back(t + i);
    std::vector<std::pair<int, int>> reps;
    for (int i = t; i >= 2; --i) {
        reps.emplace_back(t + i - 1, t + i - 2);  // w_i, w_{i-1}
        reps.emplace_back(i - 1, i - 2);          // v_i, v_{i-1}
    }
    h.side_schedule = sequence_from_reps(h.g, reps);
    return h;
}

CfiPair cfi_pair(const ColoredGraph& base) {
    if (!base.is_connected()) throw Error("cfi_pair: base must be connected");
    for (int v = 0; v < base.n(); ++v)
        if (base.degree(v) != 3) throw Error("cfi_pair: base must be cubic");

    auto base_edges = base.edge_list();  // sorted (min,max)
    int nb = base.n();
    // incident edge indices per vertex, ascending
    std::vector<std::vector<int>> inc(nb);
    for (int e = 0; e < (int)base_edges.size(); ++e) {
        inc[base_edges[e].first].push_back(e);
        inc[base_edges[e].second].push_back(e);
    }

    // Vertex block layout (10 ids per base vertex v at offset 10v):
    //   0..3   inner vertices for the even subsets {}, {0,1}, {0,2}, {1,2}
    //          of the three incident edge positions
    //   4+2p   endpoint vertex a(v,p,1), 5+2p endpoint vertex a(v,p,0)
    const int subsets[4] = {0b000, 0b011, 0b101, 0b110};
    auto inner = [&](int v, int s) { return 10 * v + s; };
    auto ep = [&](int v, int p, int bit) { return 10 * v + 4 + 2 * p + (1 - bit); };

    auto build = [&](bool twist) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < nb; ++v)
            for (int s = 0; s < 4; ++s)
                for (int p = 0; p < 3; ++p)
                    edges.emplace_back(inner(v, s), ep(v, p, (subsets[s] >> p) & 1));
        for (int e = 0; e < (int)base_edges.size(); ++e) {
            auto [u, w] = base_edges[e];
            int pu = (int)(std::find(inc[u].begin(), inc[u].end(), e) - inc[u].begin());
            int pw = (int)(std::find(inc[w].begin(), inc[w].end(), e) - inc[w].begin());
            bool tw = twist && e == 0;  // odd companion: twist the least edge
            edges.emplace_back(ep(u, pu, 1), ep(w, pw, tw ? 0 : 1));
            edges.emplace_back(ep(u, pu, 0), ep(w, pw, tw ? 1 : 0));
        }
        return ColoredGraph(10 * nb, std::move(edges));
    };

    CfiPair out;
    out.base = base;
    out.even = build(false);
    out.odd = build(true);
    return out;
}

ColoredGraph subdivide(const ColoredGraph& g, int s) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    return subdivide(g, s, order);
}

ColoredGraph subdivide(const ColoredGraph& g, int s, const std::vector<int>& order) {
    if (s < 0) throw Error("subdivide: s >= 0");
    if ((int)order.size() != g.n()) throw Error("subdivide: order size mismatch");
    auto edges_in = g.edge_list();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors(g.n() + (int)edges_in.size() * s, 0);
    for (int v = 0; v < g.n(); ++v) colors[v] = g.color(v);
    int next = g.n();
    for (auto [u, w] : edges_in) {
        int lo = order[u] < order[w] ? u : w;
        int hi = lo == u ? w : u;
        if (s == 0) {
            edges.emplace_back(lo, hi);
            continue;
        }
        int prev = lo;
        for (int j = 0; j < s; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, hi);
    }
    return ColoredGraph(g.n() + (int)edges_in.size() * s, std::move(edges),
                        std::move(colors));
}

ColoredGraph random_cograph(int n, uint64_t seed) {
    if (n < 1) throw Error("random_cograph: n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // Random cotree: split blocks of vertex ids recursively, joining or
    // uniting with equal probability.
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo <= 1) return;
        std::uniform_int_distribution<int> cut(lo + 1, hi - 1);
        int mid = cut(rng);
        bool join = rng() & 1;
        if (join)
            for (int a = lo; a < mid; ++a)
                for (int b = mid; b < hi; ++b) edges.emplace_back(a, b);
        self(self, lo, mid);
        self(self, mid, hi);
    };
    rec(rec, 0, n);
    return ColoredGraph(n, std::move(edges));
}

namespace {

// Growing state of the un-contraction process: blobs are future vertices,
// created 0,1,2,... so blob ids are the final vertex ids. Exactly one pair,
// the current red edge, is undecided at any time.
struct Grow {
    int n;
    std::vector<Bitset> adj;
    std::vector<std::pair<int, int>> forward;  // recorded newest-first
    int u, v;  // red endpoints
    std::mt19937_64 rng;

    Grow(int n_, uint64_t seed) : n(n_), rng(seed) {
        adj.assign(n, Bitset(n));
        u = 0;
        v = 1;
    }

    void link(int a, int b) {
        adj[a].set(b);
        adj[b].set(a);
    }
    bool coin() { return rng() & 1; }

    int fresh_blob = 2;

    // Split a near twin w out of endpoint x: w copies x's outside relations,
    // is adjacent to x, and relates to the other endpoint at random.
    void grow_near_twin() {
        int x = coin() ? u : v;
        int other = x == u ? v : u;
        int w = fresh_blob++;
        for (int y = 0; y < fresh_blob - 1; ++y) {
            if (y == u || y == v) continue;
            if (adj[x].test(y)) link(w, y);
        }
        link(w, x);
        if (coin()) link(w, other);
        forward.emplace_back(x, w);
    }

    // Undo the red-edge contraction: u splits into (u, fresh); the old v
    // becomes an outside vertex adjacent to exactly one of them.
    void grow_red_step() {
        int np = fresh_blob++;
        for (int y = 0; y < fresh_blob - 1; ++y) {
            if (y == u || y == v || y == np) continue;
            if (adj[u].test(y)) link(np, y);
        }
        link(v, coin() ? u : np);
        forward.emplace_back(u, np);
        v = np;
    }

    // Undo the very first contraction: the red edge disappears.
    void grow_init() {
        int np = fresh_blob++;
        for (int y = 0; y < fresh_blob - 1; ++y) {
            if (y == u || y == v || y == np) continue;
            if (adj[u].test(y)) link(np, y);
        }
        if (coin()) link(u, np);       // the Init pair's own edge
        link(v, coin() ? u : np);      // v saw exactly one of them
        forward.emplace_back(u, np);
    }
};

}  // namespace

Tww1Sample random_tww1(int n, uint64_t seed) {
    if (n < 2) throw Error("random_tww1: n >= 2");
    Tww1Sample out;
    if (n == 2) {
        bool edge = (std::mt19937_64(seed)() % 4) != 0;
        out.g = ColoredGraph(2, edge ? std::vector<std::pair<int, int>>{{0, 1}}
                                     : std::vector<std::pair<int, int>>{});
        out.certificate = sequence_from_reps(out.g, {{0, 1}});
        out.start_u = 0;
        out.start_v = 1;
        return out;
    }
    Grow grow(n, seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int step = 0; step < n - 3; ++step) {
        if (unit(grow.rng) < 0.55)
            grow.grow_near_twin();
        else
            grow.grow_red_step();
    }
    int last_u = grow.u;
    grow.grow_init();
    int last_v = grow.fresh_blob - 1;

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = grow.adj[a].find_next(a + 1); b != -1; b = grow.adj[a].find_next(b + 1))
            edges.emplace_back(a, b);
    out.g = ColoredGraph(n, std::move(edges));
    std::vector<std::pair<int, int>> reps(grow.forward.rbegin(), grow.forward.rend());
    reps.emplace_back(0, 1);  // the last two live parts are the starting blobs
    out.certificate = sequence_from_reps(out.g, reps);
    out.start_u = last_u;
    out.start_v = last_v;
    return out;
}

Tww1Sample random_tww1_prime(int n, uint64_t seed, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        Tww1Sample s = random_tww1(n, seed + 0x9e3779b97f4a7c15ull * (uint64_t)t);
        ModTree mt = mod_tree(s.g);
        if (mt.is_prime_graph()) return s;
    }
    throw Error("random_tww1_prime: no prime sample found within retry budget");
}

BipartiteView random_chain_graph(int a, int b, double density, uint64_t seed) {
    if (a < 1 || b < 1) throw Error("random_chain_graph: sides must be nonempty");
    if (!(density > 0.0 && density <= 1.0))
        throw Error("random_chain_graph: density in (0,1]");
    std::mt19937_64 rng(seed);
    int t = (int)std::max<double>(std::max(a, b), std::max(a, b) / density);

    auto sample_sorted = [&](int count) {
        std::vector<int> pool(t);
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < count; ++i) {
            std::uniform_int_distribution<int> pick(i, t - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        pool.resize(count);
        std::sort(pool.begin(), pool.end());
        return pool;
    };
    std::vector<int> li = sample_sorted(a), ri = sample_sorted(b);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (li[i] <= ri[j]) edges.emplace_back(i, a + j);
    ColoredGraph g(a + b, std::move(edges));
    std::vector<int> left(a), right(b);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), a);
    return BipartiteView::of(std::move(g), std::move(left), std::move(right));
}

namespace {

ColoredGraph from_edges(int n, std::vector<std::pair<int, int>> e) {
    return ColoredGraph(n, std::move(e));
}

}  // namespace

ColoredGraph cubic_base(const std::string& name) {
    if (name == "k4")
        return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "k33")
        return from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (name == "cube")
        return from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                              {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    if (name == "petersen") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
            e.emplace_back(i, 5 + i);
        }
        return from_edges(10, std::move(e));
    }
    auto starts_with = [&](const char* p) { return name.rfind(p, 0) == 0; };
    if (starts_with("mobius:")) {
        int k = std::stoi(name.substr(7));
        if (k < 3) throw Error("cubic_base: mobius:<k> needs k >= 3");
        int n = 2 * k;
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        for (int i = 0; i < k; ++i) e.emplace_back(i, i + k);
        return from_edges(n, std::move(e));
    }
    if (starts_with("prism:") || starts_with("gp:")) {
        int n, k;
        if (starts_with("prism:")) {
            n = std::stoi(name.substr(6));
            k = 1;
        } else {
            auto rest = name.substr(3);
            auto colon = rest.find(':');
            if (colon == std::string::npos) throw Error("cubic_base: gp:<n>:<k>");
            n = std::stoi(rest.substr(0, colon));
            k = std::stoi(rest.substr(colon + 1));
        }
        if (n < 3 || k < 1 || 2 * k == n) throw Error("cubic_base: bad generalized Petersen parameters");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(i, (i + 1) % n);
            e.emplace_back(n + i, n + (i + k) % n);
            e.emplace_back(i, n + i);
        }
        // inner "cycle" edges may repeat when k = n/2 (excluded above)
        std::sort(e.begin(), e.end(), [](auto a, auto b) {
            auto na = std::minmax(a.first, a.second);
            auto nb = std::minmax(b.first, b.second);
            return na < nb;
        });
        std::vector<std::pair<int, int>> dedup;
        for (auto [x, y] : e) {
            auto [lo, hi] = std::minmax(x, y);
            if (dedup.empty() || dedup.back() != std::make_pair(lo, hi))
                dedup.emplace_back(lo, hi);
        }
        return from_edges(2 * n, std::move(dedup));
    }
    throw Error("cubic_base: unknown base '" + name + "'");
}

std::vector<std::string> cubic_base_names() {
    return {"k4", "k33", "cube", "petersen", "mobius:<k>", "prism:<k>", "gp:<n>:<k>"};
}

}  // namespace twinwl
