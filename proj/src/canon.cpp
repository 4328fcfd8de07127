#include "twinwl/canon.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "twinwl/iso.hpp"
#include "twinwl/modular.hpp"

namespace twinwl {

std::strong_ordering compare(const CsToken& a, const CsToken& b) {
    if (a.index() != b.index()) return a.index() <=> b.index();
    return std::visit(
        [&](const auto& x) -> std::strong_ordering {
            using T = std::decay_t<decltype(x)>;
            return x <=> std::get<T>(b);
        },
        a);
}

bool operator==(const CsString& a, const CsString& b) {
    if (a.failure || b.failure) return a.failure == b.failure;
    return a.palette == b.palette && a.tokens == b.tokens;
}

bool operator<(const CsString& a, const CsString& b) {
    if (a.failure) return false;       // Failure above everything
    if (b.failure) return true;
    if (a.palette != b.palette) return a.palette < b.palette;
    size_t m = std::min(a.tokens.size(), b.tokens.size());
    for (size_t i = 0; i < m; ++i) {
        auto c = compare(a.tokens[i], b.tokens[i]);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    }
    return a.tokens.size() < b.tokens.size();
}

std::string to_json(const CsString& s) {
    nlohmann::json j;
    if (s.failure) {
        j["failure"] = true;
        return j.dump();
    }
    j["failure"] = false;
    j["palette"] = s.palette;
    nlohmann::json toks = nlohmann::json::array();
    for (const auto& t : s.tokens) {
        nlohmann::json o;
        if (auto* init = std::get_if<CsInit>(&t)) {
            o = {{"t", "init"}, {"edge", init->edge != 0}, {"cu", init->cu}, {"cv", init->cv}};
        } else if (auto* cnt = std::get_if<CsCounts>(&t)) {
            o = {{"t", "counts"}, {"counts", cnt->counts}};
        } else if (auto* red = std::get_if<CsRed>(&t)) {
            o = {{"t", "red"}, {"side", red->to_u ? "u" : "v"}, {"color", red->color}};
        } else if (auto* leaf = std::get_if<CsLeaf>(&t)) {
            o = {{"t", "leaf"}, {"color", leaf->color}};
        }
        toks.push_back(o);
    }
    j["tokens"] = toks;
    return j.dump();
}

// --- near twins (public form, over Trigraph values) ---------------------------

std::vector<int> near_twins(const Trigraph& t, const NearTwinQuery& q) {
    auto reds = t.red_edges();
    if (reds.size() != 1)
        throw Error("near_twins: trigraph must have exactly one red edge");
    auto [u, v] = reds[0];
    if (q.x != u && q.x != v) throw Error("near_twins: x must be a red endpoint");

    // Contracting w into x deletes w and changes nothing else exactly when w
    // and x have the same relation to every other live part (the red edge
    // absorbs either host). A vertex that qualifies for both endpoints is
    // assigned to the v side, so per-host answers stay disjoint.
    auto agrees_with = [&](int w, int x) {
        for (int y : t.live_ids()) {
            if (y == u || y == v || y == w) continue;
            if (t.black(w, y) != t.black(x, y)) return false;
        }
        return true;
    };
    std::vector<int> out;
    for (int w : t.live_ids()) {
        if (w == u || w == v) continue;
        if (t.part(w).size() != 1) continue;  // colors live on original vertices
        if (t.black(u, w) != q.t_is_edge) continue;
        if (t.black(v, w) != q.tp_is_edge) continue;
        bool to_v = agrees_with(w, v);
        bool to_u = !to_v && agrees_with(w, u);
        if ((q.x == v && to_v) || (q.x == u && to_u)) out.push_back(w);
    }
    return out;
}

// --- cs engine -----------------------------------------------------------------

namespace {

struct CsEngine {
    const ColoredGraph& g;
    int n;
    std::vector<int> palette;
    int k;

    explicit CsEngine(const ColoredGraph& graph)
        : g(graph), n(graph.n()), palette(graph.color_palette()), k((int)palette.size()) {}

    int rank(int c) const {
        return (int)(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    }

    enum class Outcome { Done, Failed, Pruned };

    // Runs the canonical sequence from (u,v). `bound`, when given, prunes the
    // run as soon as the emitted prefix exceeds it lexicographically.
    Outcome run(int u, int v, CsString& out, CsTrace* trace, const CsString* bound) {
        out.failure = false;
        out.palette = palette;
        out.tokens.clear();
        bound_ = bound && !bound->failure ? bound : nullptr;
        pos_ = 0;
        undecided_ = bound_ != nullptr;

        if (trace) {
            *trace = CsTrace{};
            trace->u = u;
            trace->v = v;
            trace->leave_order = {u, v};
        }

        Bitset upart(n), vpart(n), outside(n);
        upart.set(u);
        vpart.set(v);
        for (int w = 0; w < n; ++w)
            if (w != u && w != v) outside.set(w);
        int v_rep = v;

        if (!emit(out, CsInit{g.adjacent(u, v) ? 1 : 0, g.color(u), g.color(v)}))
            return Outcome::Pruned;

        Bitset fullU(n), fullV(n), diff(n);
        auto recompute_full = [&]() {
            fullU.clear();
            fullV.clear();
            outside.for_each([&](int w) {
                if (upart.is_subset_of(g.neighbors(w))) fullU.set(w);
                if (vpart.is_subset_of(g.neighbors(w))) fullV.set(w);
            });
        };

        while (true) {
            // 2a: stop at two parts, else contract the current pair; the
            // unique vertex adjacent to exactly one side carries the red edge.
            if (outside.none()) return Outcome::Done;
            recompute_full();
            Bitset W = fullU ^ fullV;
            if (W.count() != 1) {
                out = CsString::fail();
                return Outcome::Failed;
            }
            int w = W.find_first();
            if (!emit(out, CsRed{fullU.test(w) ? 1 : 0, g.color(w)})) return Outcome::Pruned;
            if (trace) {
                trace->red_steps.push_back(w);
                trace->rep_merges.emplace_back(u, v_rep);
                trace->leave_order.push_back(w);
            }
            upart |= vpart;
            vpart.clear();
            vpart.set(w);
            outside.reset(w);
            v_rep = w;

            // 2b: contraction phase, sub-rounds to fixpoint. The first
            // sub-round's counts are always recorded; later sub-rounds only
            // happen after a contraction and are recorded when nonempty.
            if (trace) trace->phases.push_back({});
            bool first = true;
            while (true) {
                recompute_full();
                std::vector<uint32_t> counts(8 * k, 0);
                std::vector<std::vector<int>> members(8 * k);
                bool nonzero = false;
                for (int w2 = outside.find_first(); w2 != -1;
                     w2 = outside.find_next(w2 + 1)) {
                    bool tU = fullU.test(w2), tV = fullV.test(w2);
                    // near twin of a side: same relation as that side to all
                    // other singletons; double qualifiers go to the v side
                    int side = -1;
                    if (agrees(w2, fullV, outside, diff)) {
                        side = 1;
                    } else if (agrees(w2, fullU, outside, diff)) {
                        side = 0;
                    }
                    if (side < 0) continue;
                    int ti = 2 * (tU ? 1 : 0) + (tV ? 1 : 0);
                    int slot = (ti * 2 + side) * k + rank(g.color(w2));
                    ++counts[slot];
                    members[slot].push_back(w2);
                    nonzero = true;
                }
                if (!first && !nonzero) break;
                if (!emit(out, CsCounts{counts})) return Outcome::Pruned;
                if (trace) trace->phases.back().push_back(members);
                if (!nonzero) break;
                for (int slot = 0; slot < 8 * k; ++slot) {
                    int side = (slot / k) % 2;
                    for (int w2 : members[slot]) {
                        if (side == 0)
                            upart.set(w2);
                        else
                            vpart.set(w2);
                        outside.reset(w2);
                        if (trace) {
                            trace->rep_merges.emplace_back(side == 0 ? u : v_rep, w2);
                            trace->leave_order.push_back(w2);
                        }
                    }
                }
                first = false;
            }
        }
    }

private:
    const CsString* bound_ = nullptr;
    size_t pos_ = 0;
    bool undecided_ = false;  // emitted prefix still equals the bound

    // Near-twin agreement with the host side: same relation as the host to
    // every other singleton (host relations to outsiders are the full-set).
    bool agrees(int w, const Bitset& full_host, const Bitset& outside, Bitset& diff) {
        diff = g.neighbors(w);
        diff &= outside;
        diff ^= full_host;
        diff.reset(w);
        return diff.none();
    }

    // False = prune now.
    bool emit(CsString& out, CsToken tok) {
        if (undecided_) {
            if (pos_ >= bound_->tokens.size()) return false;  // longer, so greater
            auto c = compare(tok, bound_->tokens[pos_]);
            if (c == std::strong_ordering::greater) return false;
            if (c == std::strong_ordering::less) undecided_ = false;
        }
        ++pos_;
        out.tokens.push_back(std::move(tok));
        return true;
    }
};

}  // namespace

CsString cs(const ColoredGraph& g, int u, int v, CsTrace* trace) {
    if (g.n() < 2) throw Error("cs: need n >= 2 (one-vertex graphs are a Leaf)");
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw Error("cs: invalid starting pair");
    CsEngine e(g);
    CsString out;
    e.run(u, v, out, trace, nullptr);
    return out;
}

CsInvariantResult cs_invariant_witness(const ColoredGraph& g) {
    if (g.n() == 0) throw Error("cs_invariant: empty graph");
    CsInvariantResult res;
    if (g.n() == 1) {
        res.value.failure = false;
        res.value.palette = g.color_palette();
        res.value.tokens = {CsLeaf{g.color(0)}};
        res.u = res.v = 0;
        res.trace.leave_order = {0};
        return res;
    }

    // Pairs grouped by their Init token: any completed run from a lower tier
    // beats every run from a higher tier at the first token, so tiers are
    // processed in order and the first tier with a success wins.
    struct Cand {
        CsInit init;
        int u, v;
    };
    std::vector<Cand> cands;
    cands.reserve((size_t)g.n() * (g.n() - 1));
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v)
                cands.push_back({CsInit{g.adjacent(u, v) ? 1 : 0, g.color(u), g.color(v)}, u, v});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (auto c = a.init <=> b.init; c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });

    CsEngine engine(g);
    CsString best = CsString::fail();
    int best_u = -1, best_v = -1;
    size_t i = 0;
    while (i < cands.size()) {
        size_t j = i;
        while (j < cands.size() && cands[j].init == cands[i].init) ++j;
        for (size_t c = i; c < j; ++c) {
            CsString cur;
            auto outcome = engine.run(cands[c].u, cands[c].v, cur, nullptr,
                                      best.failure ? nullptr : &best);
            if (outcome == CsEngine::Outcome::Done && cur < best) {
                best = std::move(cur);
                best_u = cands[c].u;
                best_v = cands[c].v;
            }
        }
        if (!best.failure) break;  // later tiers start with a larger Init token
        i = j;
    }

    if (best.failure) {
        res.value = CsString::fail();
        return res;
    }
    res.u = best_u;
    res.v = best_v;
    CsString rerun;
    engine.run(best_u, best_v, rerun, &res.trace, nullptr);
    res.value = std::move(rerun);
    return res;
}

CsString cs_invariant(const ColoredGraph& g) { return cs_invariant_witness(g).value; }

std::vector<int> reconstruct_isomorphism(const ColoredGraph& g, int u, int v,
                                         const ColoredGraph& h, int u2, int v2) {
    CsTrace tg, th;
    CsString a = cs(g, u, v, &tg);
    CsString b = cs(h, u2, v2, &th);
    if (a.failure || !(a == b))
        throw Error("reconstruct_isomorphism: cs strings differ or failed");
    // Equal strings align the leave orders slot by slot; mapping them
    // pointwise sends pivots to pivots and each near-twin class to its
    // counterpart (members are interchangeable within a slot).
    std::vector<int> f(g.n(), -1);
    for (size_t i = 0; i < tg.leave_order.size(); ++i)
        f[tg.leave_order[i]] = th.leave_order[i];
    if (!is_isomorphism(g, h, f))
        throw Error(
            "reconstruct_isomorphism: invariant violation: reconstructed map "
            "is not an isomorphism");
    return f;
}

// --- recognition ---------------------------------------------------------------

namespace {

// Quotient of the node's children (already contracted) as a plain graph on
// child indices; module homogeneity makes representative adjacency exact.
ColoredGraph child_quotient(const ColoredGraph& g, const ModTree& t, int node,
                            std::vector<int>& reps, int colors_from_ranks) {
    const auto& children = t.nodes[node].children;
    int q = (int)children.size();
    reps.resize(q);
    for (int i = 0; i < q; ++i) reps[i] = t.nodes[children[i]].module[0];
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (g.adjacent(reps[i], reps[j])) edges.emplace_back(i, j);
    (void)colors_from_ranks;
    return ColoredGraph(q, std::move(edges));
}

}  // namespace

Tww1Result is_twinwidth_le1(const ColoredGraph& g) {
    if (g.n() == 0) return {true, ContractionSequence{g, {}}};
    ModTree t = mod_tree(g);
    std::vector<std::pair<int, int>> rep_merges;

    // Children have larger node indices than their parents, so reverse index
    // order contracts every child module before its parent links them up.
    for (int node = (int)t.nodes.size() - 1; node >= 0; --node) {
        const auto& nd = t.nodes[node];
        if (nd.label == ModLabel::Single) continue;
        std::vector<int> reps;
        if (nd.label == ModLabel::Parallel || nd.label == ModLabel::Series) {
            for (int c : nd.children) reps.push_back(t.nodes[c].module[0]);
            for (size_t i = 1; i < reps.size(); ++i)
                rep_merges.emplace_back(reps[0], reps[i]);
            continue;
        }
        // prime: search a successful cs pair on the child quotient
        ColoredGraph q = child_quotient(g, t, node, reps, 0);
        bool found = false;
        for (int a = 0; a < q.n() && !found; ++a) {
            for (int b = 0; b < q.n() && !found; ++b) {
                if (a == b) continue;
                CsTrace trace;
                CsString s = cs(q, a, b, &trace);
                if (s.failure) continue;
                found = true;
                for (auto [x, y] : trace.rep_merges)
                    rep_merges.emplace_back(reps[x], reps[y]);
                // close out the final two live parts of the quotient run;
                // the v side is represented by the last red step (or the
                // start vertex when no iteration ran)
                int v_rep = trace.red_steps.empty() ? trace.v : trace.red_steps.back();
                rep_merges.emplace_back(reps[trace.u], reps[v_rep]);
            }
        }
        if (!found) return {false, std::nullopt};
    }
    return {true, sequence_from_reps(g, rep_merges)};
}

// --- canonical form -------------------------------------------------------------

namespace {

void put_varint(std::vector<uint8_t>& out, uint64_t x) {
    while (x >= 0x80) {
        out.push_back((uint8_t)(x | 0x80));
        x >>= 7;
    }
    out.push_back((uint8_t)x);
}

struct Enc {
    std::vector<uint8_t> bytes;
    std::vector<int> order;
};

Enc encode_node(const ColoredGraph& g, const ModTree& t, int node) {
    const auto& nd = t.nodes[node];
    Enc e;
    if (nd.label == ModLabel::Single) {
        e.bytes.push_back(0x01);
        put_varint(e.bytes, (uint64_t)g.color(nd.module[0]));
        e.order = {nd.module[0]};
        return e;
    }

    std::vector<Enc> child(nd.children.size());
    for (size_t i = 0; i < nd.children.size(); ++i)
        child[i] = encode_node(g, t, nd.children[i]);

    if (nd.label == ModLabel::Parallel || nd.label == ModLabel::Series) {
        std::vector<int> idx(child.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (child[a].bytes != child[b].bytes) return child[a].bytes < child[b].bytes;
            return t.nodes[nd.children[a]].module < t.nodes[nd.children[b]].module;
        });
        e.bytes.push_back(nd.label == ModLabel::Parallel ? 0x02 : 0x03);
        put_varint(e.bytes, child.size());
        for (int i : idx) {
            put_varint(e.bytes, child[i].bytes.size());
            e.bytes.insert(e.bytes.end(), child[i].bytes.begin(), child[i].bytes.end());
            e.order.insert(e.order.end(), child[i].order.begin(), child[i].order.end());
        }
        return e;
    }

    // prime: color the child quotient by encoding ranks, canonize it through
    // the lex-min contraction string, and lay the matrix out in the unwound
    // vertex order.
    int q = (int)nd.children.size();
    std::vector<std::vector<uint8_t>> distinct;
    for (auto& c : child) distinct.push_back(c.bytes);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto rank_of = [&](const std::vector<uint8_t>& b) {
        return (int)(std::lower_bound(distinct.begin(), distinct.end(), b) - distinct.begin());
    };

    std::vector<int> reps(q);
    std::vector<int> colors(q);
    for (int i = 0; i < q; ++i) {
        reps[i] = t.nodes[nd.children[i]].module[0];
        colors[i] = rank_of(child[i].bytes);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (g.adjacent(reps[i], reps[j])) edges.emplace_back(i, j);
    ColoredGraph quotient(q, std::move(edges), colors);

    CsInvariantResult inv = cs_invariant_witness(quotient);
    if (inv.value.failure)
        throw Error("canonical_form: prime quotient has twin-width > 1");
    const std::vector<int>& perm = inv.trace.leave_order;

    e.bytes.push_back(0x04);
    put_varint(e.bytes, (uint64_t)q);
    for (int i = 0; i < q; ++i) put_varint(e.bytes, (uint64_t)quotient.color(perm[i]));
    uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            acc = (uint8_t)((acc << 1) | (quotient.adjacent(perm[i], perm[j]) ? 1 : 0));
            if (++nbits == 8) {
                e.bytes.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) e.bytes.push_back((uint8_t)(acc << (8 - nbits)));
    put_varint(e.bytes, distinct.size());
    for (const auto& d : distinct) {
        put_varint(e.bytes, d.size());
        e.bytes.insert(e.bytes.end(), d.begin(), d.end());
    }
    for (int i = 0; i < q; ++i) {
        const auto& co = child[perm[i]].order;
        e.order.insert(e.order.end(), co.begin(), co.end());
    }
    return e;
}

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
    if (g.n() == 0) return {{0x00}, {}};
    ModTree t = mod_tree(g);
    Enc e = encode_node(g, t, t.root);
    return {std::move(e.bytes), std::move(e.order)};
}

std::string hex_bytes(const std::vector<uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

// quotient_star is declared in modular.hpp; it needs canonical_form, so it
// lives here.
ColoredGraph quotient_star(const ColoredGraph& g) {
    auto modules = maximal_modules(g);
    std::sort(modules.begin(), modules.end());
    int q = (int)modules.size();
    std::vector<std::vector<uint8_t>> encs(q);
    for (int i = 0; i < q; ++i) {
        auto [sub, map] = g.induced_subgraph(modules[i]);
        encs[i] = canonical_form(sub).bytes;
    }
    std::vector<std::vector<uint8_t>> distinct = encs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> colors(q);
    for (int i = 0; i < q; ++i)
        colors[i] = (int)(std::lower_bound(distinct.begin(), distinct.end(), encs[i]) -
                          distinct.begin());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (g.adjacent(modules[i][0], modules[j][0])) edges.emplace_back(i, j);
    return ColoredGraph(q, std::move(edges), std::move(colors));
}

}  // namespace twinwl
