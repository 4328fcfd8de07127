#include "twinwl/wl.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_map>

namespace twinwl {

namespace {

// ---------------------------------------------------------------------------
// Shared refinement machinery. A "space" is the tuple set V(g)^k of one
// graph; wl_refine uses one space, wl_distinguish two. Classes live in one
// pooled id space so colors stay comparable. Per round, each tuple of a
// non-singleton class gets a signature
//     (old color, sorted multiset of (atp bits of w, rank(c(w)), subst colors))
// and new ids are assigned by content order (old color, then signature),
// which keeps ids canonical. Signatures are compared by their full byte
// content; hashes only bucket them.
// ---------------------------------------------------------------------------

struct SigPool {
    struct Entry {
        uint64_t h1, h2;
        uint32_t old_color;
        uint32_t offset, length;  // into arena
        uint32_t new_id = 0;
    };
    std::vector<uint32_t> arena;
    std::vector<Entry> sigs;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

    void clear() {
        arena.clear();
        sigs.clear();
        buckets.clear();
    }

    static std::pair<uint64_t, uint64_t> hash(const uint32_t* p, size_t len) {
        uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x9e3779b97f4a7c15ull;
        for (size_t i = 0; i < len; ++i) {
            h1 = (h1 ^ p[i]) * 0x100000001b3ull;
            h2 = (h2 ^ (p[i] + 0x517cc1b727220a95ull)) * 0xff51afd7ed558ccdull;
            h2 ^= h2 >> 29;
        }
        return {h1, h2};
    }

    // Interns sig (first element must be the old color); returns sig index.
    uint32_t intern(const std::vector<uint32_t>& sig) {
        auto [h1, h2] = hash(sig.data(), sig.size());
        auto& bucket = buckets[h1];
        for (uint32_t id : bucket) {
            const Entry& e = sigs[id];
            if (e.h2 != h2 || e.length != sig.size()) continue;
            if (std::memcmp(arena.data() + e.offset, sig.data(),
                            sig.size() * sizeof(uint32_t)) == 0)
                return id;
        }
        Entry e;
        e.h1 = h1;
        e.h2 = h2;
        e.old_color = sig[0];
        e.offset = (uint32_t)arena.size();
        e.length = (uint32_t)sig.size();
        arena.insert(arena.end(), sig.begin(), sig.end());
        uint32_t id = (uint32_t)sigs.size();
        sigs.push_back(e);
        bucket.push_back(id);
        return id;
    }

    // Content order within an old class: (h1, h2, bytes).
    bool content_less(uint32_t a, uint32_t b) const {
        const Entry &x = sigs[a], &y = sigs[b];
        if (x.h1 != y.h1) return x.h1 < y.h1;
        if (x.h2 != y.h2) return x.h2 < y.h2;
        if (x.length != y.length) return x.length < y.length;
        return std::memcmp(arena.data() + x.offset, arena.data() + y.offset,
                           x.length * sizeof(uint32_t)) < 0;
    }
};

struct Space {
    const ColoredGraph* g;
    uint64_t count = 0;              // n^k
    std::vector<uint64_t> pow;       // pow[i] = n^(k-1-i)
    std::vector<uint32_t> color;     // current tuple colors
    std::vector<uint32_t> sig_of;    // per-round: sig index or UNSET
};

constexpr uint32_t UNSET = 0xffffffffu;

struct Refiner {
    int k;
    std::vector<Space> spaces;
    std::vector<int> palette;  // pooled input palette
    uint32_t num_colors = 0;
    int rounds = 0;

    int color_rank(int c) const {
        return (int)(std::lower_bound(palette.begin(), palette.end(), c) -
                     palette.begin());
    }

    void add_space(const ColoredGraph& g) {
        Space s;
        s.g = &g;
        s.pow.assign(k, 1);
        for (int i = k - 2; i >= 0; --i) s.pow[i] = s.pow[i + 1] * g.n();
        s.count = s.pow.empty() ? 1 : s.pow[0] * g.n();
        if (g.n() == 0) s.count = 0;
        spaces.push_back(std::move(s));
    }

    void pool_palette() {
        for (auto& s : spaces) {
            auto p = s.g->color_palette();
            palette.insert(palette.end(), p.begin(), p.end());
        }
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    }

    // Initial coloring by atomic types, pooled over spaces.
    void init_colors() {
        SigPool pool;
        std::vector<uint32_t> key;
        for (auto& s : spaces) {
            s.color.assign(s.count, 0);
            std::vector<int> tup(k);
            for (uint64_t t = 0; t < s.count; ++t) {
                uint64_t rest = t;
                for (int i = 0; i < k; ++i) {
                    tup[i] = (int)(rest / s.pow[i]);
                    rest %= s.pow[i];
                }
                uint32_t eq = 0, adj = 0;
                int bit = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j, ++bit) {
                        if (tup[i] == tup[j]) eq |= 1u << bit;
                        if (s.g->adjacent(tup[i], tup[j])) adj |= 1u << bit;
                    }
                key.clear();
                key.push_back(0);  // uniform "old color" slot
                key.push_back(eq);
                key.push_back(adj);
                for (int i = 0; i < k; ++i)
                    key.push_back((uint32_t)color_rank(s.g->color(tup[i])));
                s.color[t] = pool.intern(key);
            }
        }
        num_colors = assign_ids(pool);
        for (auto& s : spaces)
            for (auto& c : s.color) c = pool.sigs[c].new_id;
    }

    // Orders interned sigs canonically and stores new ids into the pool.
    // Returns the number of distinct ids handed out for sigs (callers add
    // untouched singleton classes separately).
    static uint32_t assign_ids(SigPool& pool) {
        std::vector<uint32_t> order(pool.sigs.size());
        for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            if (pool.sigs[a].old_color != pool.sigs[b].old_color)
                return pool.sigs[a].old_color < pool.sigs[b].old_color;
            return pool.content_less(a, b);
        });
        for (uint32_t r = 0; r < order.size(); ++r) pool.sigs[order[r]].new_id = r;
        return (uint32_t)order.size();
    }

    // One synchronous k-WL round; returns true if some class split.
    template <int K>
    bool round() {
        std::vector<uint64_t> size(num_colors, 0);
        for (auto& s : spaces)
            for (uint32_t c : s.color) ++size[c];

        SigPool pool;
        std::vector<uint32_t> sig;
        std::array<uint32_t, K + 2> ent;
        std::vector<std::array<uint32_t, K + 2>> entries;
        std::vector<int> tup(K);
        std::vector<uint64_t> sub_base(K);

        for (auto& s : spaces) {
            int n = s.g->n();
            s.sig_of.assign(s.count, UNSET);
            entries.resize(n);
            for (uint64_t t = 0; t < s.count; ++t) {
                if (size[s.color[t]] < 2) continue;  // singletons never split
                uint64_t rest = t;
                for (int i = 0; i < K; ++i) {
                    tup[i] = (int)(rest / s.pow[i]);
                    rest %= s.pow[i];
                    sub_base[i] = t - (uint64_t)tup[i] * s.pow[i];
                }
                for (int w = 0; w < n; ++w) {
                    uint32_t bits = 0;
                    for (int i = 0; i < K; ++i) {
                        bits |= (uint32_t)(tup[i] == w) << i;
                        bits |= (uint32_t)s.g->adjacent(tup[i], w) << (K + i);
                    }
                    ent[0] = bits;
                    ent[1] = (uint32_t)color_rank(s.g->color(w));
                    for (int i = 0; i < K; ++i)
                        ent[2 + i] = s.color[sub_base[i] + (uint64_t)w * s.pow[i]];
                    entries[w] = ent;
                }
                std::sort(entries.begin(), entries.end());
                sig.clear();
                sig.push_back(s.color[t]);
                uint32_t run = 1;
                for (int w = 1; w <= n; ++w) {
                    if (w < n && entries[w] == entries[w - 1]) {
                        ++run;
                        continue;
                    }
                    sig.insert(sig.end(), entries[w - 1].begin(), entries[w - 1].end());
                    sig.push_back(run);
                    run = 1;
                }
                s.sig_of[t] = pool.intern(sig);
            }
        }

        // Canonical renumbering: walk old ids in order; singleton classes
        // keep their slot, split classes expand into content-ordered ids.
        std::vector<std::vector<uint32_t>> by_old(num_colors);
        for (uint32_t i = 0; i < pool.sigs.size(); ++i)
            by_old[pool.sigs[i].old_color].push_back(i);
        std::vector<uint32_t> single_new(num_colors, UNSET);
        uint32_t next = 0;
        for (uint32_t c = 0; c < num_colors; ++c) {
            if (by_old[c].empty()) {
                single_new[c] = next++;
            } else {
                std::sort(by_old[c].begin(), by_old[c].end(),
                          [&](uint32_t a, uint32_t b) { return pool.content_less(a, b); });
                for (uint32_t id : by_old[c]) pool.sigs[id].new_id = next++;
            }
        }
        bool split = next != num_colors;
        num_colors = next;
        for (auto& s : spaces) {
            for (uint64_t t = 0; t < s.count; ++t)
                s.color[t] = s.sig_of[t] == UNSET ? single_new[s.color[t]]
                                                  : pool.sigs[s.sig_of[t]].new_id;
            s.sig_of.clear();
            s.sig_of.shrink_to_fit();
        }
        return split;
    }

    bool round_any() {
        switch (k) {
            case 1: return round<1>();
            case 2: return round<2>();
            case 3: return round<3>();
            case 4: return round<4>();
            default: throw BudgetError("wl_refine: k > 4 not supported at desk scale");
        }
    }

    void run() {
        pool_palette();
        init_colors();
        rounds = 0;
        while (round_any()) ++rounds;
    }
};

uint64_t checked_pow(int n, int k, uint64_t cap) {
    uint64_t p = 1;
    for (int i = 0; i < k; ++i) {
        if (n != 0 && p > cap / (uint64_t)n)
            throw BudgetError(
                "wl_refine: n^k exceeds the 1e8 tuple budget; lower k or shrink "
                "the graph");
        p *= (uint64_t)n;
    }
    return p;
}

void guard_wl(const ColoredGraph& g, int k) {
    if (k < 1) throw Error("wl_refine: k must be >= 1");
    if (g.n() == 0) throw Error("wl_refine: empty graph");
    checked_pow(g.n(), k, 100'000'000ull);
}

// ---------------------------------------------------------------------------
// 1-WL fast path: synchronous canonical rounds over neighbor color multisets.
// ---------------------------------------------------------------------------

struct CrSpace {
    const ColoredGraph* g;
    std::vector<uint32_t> color;
    std::vector<uint32_t> sig_of;
};

struct CrRefiner {
    std::vector<CrSpace> spaces;
    std::vector<int> palette;
    uint32_t num_colors = 0;
    int rounds = 0;

    void add_space(const ColoredGraph& g) { spaces.push_back({&g, {}, {}}); }

    void run() {
        for (auto& s : spaces) {
            auto p = s.g->color_palette();
            palette.insert(palette.end(), p.begin(), p.end());
        }
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        for (auto& s : spaces) {
            s.color.resize(s.g->n());
            for (int v = 0; v < s.g->n(); ++v)
                s.color[v] = (uint32_t)(std::lower_bound(palette.begin(), palette.end(),
                                                         s.g->color(v)) -
                                        palette.begin());
        }
        num_colors = (uint32_t)palette.size();
        rounds = 0;
        while (round()) ++rounds;
    }

    bool round() {
        std::vector<uint64_t> size(num_colors, 0);
        for (auto& s : spaces)
            for (uint32_t c : s.color) ++size[c];

        SigPool pool;
        std::vector<uint32_t> sig, nbr;
        for (auto& s : spaces) {
            s.sig_of.assign(s.g->n(), UNSET);
            for (int v = 0; v < s.g->n(); ++v) {
                if (size[s.color[v]] < 2) continue;
                nbr.clear();
                s.g->neighbors(v).for_each([&](int w) { nbr.push_back(s.color[w]); });
                std::sort(nbr.begin(), nbr.end());
                sig.clear();
                sig.push_back(s.color[v]);
                uint32_t run = 1;
                for (size_t i = 1; i <= nbr.size(); ++i) {
                    if (i < nbr.size() && nbr[i] == nbr[i - 1]) {
                        ++run;
                        continue;
                    }
                    sig.push_back(nbr[i - 1]);
                    sig.push_back(run);
                    run = 1;
                }
                s.sig_of[v] = pool.intern(sig);
            }
        }

        std::vector<std::vector<uint32_t>> by_old(num_colors);
        for (uint32_t i = 0; i < pool.sigs.size(); ++i)
            by_old[pool.sigs[i].old_color].push_back(i);
        std::vector<uint32_t> single_new(num_colors, UNSET);
        uint32_t next = 0;
        for (uint32_t c = 0; c < num_colors; ++c) {
            if (by_old[c].empty()) {
                single_new[c] = next++;
            } else {
                std::sort(by_old[c].begin(), by_old[c].end(),
                          [&](uint32_t a, uint32_t b) { return pool.content_less(a, b); });
                for (uint32_t id : by_old[c]) pool.sigs[id].new_id = next++;
            }
        }
        bool split = next != num_colors;
        num_colors = next;
        for (auto& s : spaces)
            for (int v = 0; v < s.g->n(); ++v)
                s.color[v] = s.sig_of[v] == UNSET ? single_new[s.color[v]]
                                                  : pool.sigs[s.sig_of[v]].new_id;
        return split;
    }
};

}  // namespace

std::map<uint32_t, uint64_t> WlColoring::histogram() const {
    std::map<uint32_t, uint64_t> h;
    for (uint32_t c : color) ++h[c];
    return h;
}

WlColoring wl_refine(const ColoredGraph& g, int k) {
    guard_wl(g, k);
    Refiner r;
    r.k = k;
    r.add_space(g);
    r.run();
    WlColoring out;
    out.k = k;
    out.num_colors = r.num_colors;
    out.rounds = r.rounds;
    out.color = std::move(r.spaces[0].color);
    return out;
}

WlVerdict wl_distinguish(const ColoredGraph& g, const ColoredGraph& h, int k) {
    guard_wl(g, k);
    guard_wl(h, k);
    Refiner r;
    r.k = k;
    r.add_space(g);
    r.add_space(h);
    r.run();

    std::map<uint32_t, std::pair<uint64_t, uint64_t>> counts;
    for (uint32_t c : r.spaces[0].color) ++counts[c].first;
    for (uint32_t c : r.spaces[1].color) ++counts[c].second;
    WlVerdict v;
    v.rounds = r.rounds;
    for (auto& [c, pair] : counts) {
        if (pair.first != pair.second) {
            v.distinguished = true;
            v.witness_color = c;
            v.count_g = pair.first;
            v.count_h = pair.second;
            break;
        }
    }
    return v;
}

WlColoring color_refinement(const ColoredGraph& g) {
    CrRefiner r;
    r.add_space(g);
    r.run();
    WlColoring out;
    out.k = 1;
    out.num_colors = r.num_colors;
    out.rounds = r.rounds;
    out.color = std::move(r.spaces[0].color);
    return out;
}

std::pair<std::vector<uint32_t>, std::vector<uint32_t>> joint_color_refinement(
    const ColoredGraph& g, const ColoredGraph& h) {
    CrRefiner r;
    r.add_space(g);
    r.add_space(h);
    r.run();
    return {std::move(r.spaces[0].color), std::move(r.spaces[1].color)};
}

// --- bijective pebble game -----------------------------------------------------

namespace {

// Kuhn's augmenting-path matching on an n x n boolean relation.
bool has_perfect_matching(int n, const std::vector<char>& adj) {
    std::vector<int> match_r(n, -1);
    std::vector<char> used(n);
    auto augment = [&](auto&& self, int a) -> bool {
        for (int b = 0; b < n; ++b) {
            if (!adj[a * n + b] || used[b]) continue;
            used[b] = 1;
            if (match_r[b] == -1 || self(self, match_r[b])) {
                match_r[b] = a;
                return true;
            }
        }
        return false;
    };
    for (int a = 0; a < n; ++a) {
        std::fill(used.begin(), used.end(), 0);
        if (!augment(augment, a)) return false;
    }
    return true;
}

}  // namespace

GameVerdict pebble_game(const ColoredGraph& g, const ColoredGraph& h, int k) {
    if (k < 2) throw Error("pebble_game: k must be >= 2");
    GameVerdict verdict;
    if (g.n() != h.n()) {
        // No bijection exists, so Duplicator cannot answer the first move.
        verdict.winner = GameVerdict::Winner::Spoiler;
        verdict.spoiler_depth = 0;
        return verdict;
    }
    int n = g.n();
    uint64_t nn = (uint64_t)n * n;
    uint64_t total = 0, p = 1;
    for (int l = 0; l <= k; ++l) {
        if (p > 20'000'000ull)
            throw BudgetError("pebble_game: position space too large; shrink the graphs");
        total += p;
        p *= nn;
    }
    (void)total;

    // survive[l][idx]: idx encodes the pair tuple base n*n, most recent last.
    std::vector<std::vector<char>> survive(k + 1);
    std::vector<std::vector<char>> extend_ok(k);  // levels 0..k-1
    survive[0] = {1};
    for (int l = 1; l <= k; ++l) {
        uint64_t cnt = 1;
        for (int i = 0; i < l; ++i) cnt *= nn;
        survive[l].assign(cnt, 0);
        for (uint64_t prev = 0; prev < survive[l - 1].size(); ++prev) {
            if (!survive[l - 1][prev]) continue;
            // decode prefix pairs
            std::vector<int> ga(l - 1), hb(l - 1);
            uint64_t rest = prev;
            for (int i = l - 2; i >= 0; --i) {
                uint64_t pr = rest % nn;
                rest /= nn;
                ga[i] = (int)(pr / n);
                hb[i] = (int)(pr % n);
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (g.color(a) != h.color(b)) continue;
                    bool ok = true;
                    for (int i = 0; i < l - 1 && ok; ++i) {
                        if ((ga[i] == a) != (hb[i] == b)) ok = false;
                        if (g.adjacent(ga[i], a) != h.adjacent(hb[i], b)) ok = false;
                    }
                    if (ok) survive[l][prev * nn + (uint64_t)a * n + b] = 1;
                }
        }
    }

    auto compute_extend = [&](int l, uint64_t q) -> char {
        std::vector<char> rel(nn, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                rel[a * n + b] = survive[l + 1][q * nn + (uint64_t)a * n + b];
        return has_perfect_matching(n, rel);
    };

    int sweep = 0;
    bool changed = true;
    while (changed) {
        ++sweep;
        changed = false;
        for (int l = 0; l < k; ++l) {
            extend_ok[l].assign(survive[l].size(), 0);
            for (uint64_t q = 0; q < survive[l].size(); ++q)
                extend_ok[l][q] = compute_extend(l, q);
        }
        for (int l = 0; l <= k; ++l) {
            for (uint64_t idx = 0; idx < survive[l].size(); ++idx) {
                if (!survive[l][idx]) continue;
                bool ok = true;
                if (l < k && !extend_ok[l][idx]) ok = false;
                // Spoiler may remove any pebble pair, then Duplicator must
                // still offer a full bijection.
                for (int i = 0; i < l && ok; ++i) {
                    // remove pair at index i
                    uint64_t hi = idx, rebuilt = 0;
                    std::vector<uint64_t> digits(l);
                    for (int d = l - 1; d >= 0; --d) {
                        digits[d] = hi % nn;
                        hi /= nn;
                    }
                    for (int d = 0; d < l; ++d)
                        if (d != i) rebuilt = rebuilt * nn + digits[d];
                    if (!extend_ok[l - 1][rebuilt]) ok = false;
                }
                if (!ok) {
                    survive[l][idx] = 0;
                    changed = true;
                    if (l == 0) {
                        verdict.winner = GameVerdict::Winner::Spoiler;
                        verdict.spoiler_depth = sweep;
                        return verdict;
                    }
                }
            }
        }
    }

    verdict.winner = GameVerdict::Winner::Duplicator;
    int64_t alive = 0;
    for (auto& lvl : survive)
        for (char c : lvl) alive += c;
    verdict.surviving_positions = alive;
    return verdict;
}

}  // namespace twinwl
