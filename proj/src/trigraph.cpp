#include "twinwl/trigraph.hpp"

#include <algorithm>
#include <sstream>

namespace twinwl {

void Trigraph::init(const ColoredGraph& g, const std::vector<std::vector<int>>& P) {
    base_n_ = g.n();
    // A full merge history needs at most 2n-1 ids.
    int cap = std::max(1, 2 * g.n() - 1);
    live_ = Bitset(cap);
    members_.assign(P.size(), {});
    black_.assign(cap, Bitset(cap));
    red_.assign(cap, Bitset(cap));

    std::vector<int> owner(g.n(), -1);
    for (int id = 0; id < (int)P.size(); ++id) {
        if (P[id].empty()) throw Error("quotient: empty part");
        members_[id] = P[id];
        std::sort(members_[id].begin(), members_[id].end());
        for (int v : members_[id]) {
            if (v < 0 || v >= g.n()) throw Error("quotient: vertex out of range");
            if (owner[v] != -1) throw Error("quotient: parts overlap");
            owner[v] = id;
        }
        live_.set(id);
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] == -1) throw Error("quotient: not a partition (vertex uncovered)");

    next_id_ = (int)P.size();
    for (int a = 0; a < (int)P.size(); ++a) {
        for (int b = a + 1; b < (int)P.size(); ++b) {
            long long cross = 0;
            for (int v : members_[a]) {
                Bitset row = g.neighbors(v);
                for (int w : members_[b]) cross += row.test(w);
            }
            long long full = (long long)members_[a].size() * members_[b].size();
            if (cross == full) {
                black_[a].set(b);
                black_[b].set(a);
            } else if (cross > 0) {
                red_[a].set(b);
                red_[b].set(a);
            }
        }
    }
}

Trigraph Trigraph::from_graph(const ColoredGraph& g) {
    Trigraph t;
    t.base_n_ = g.n();
    int cap = std::max(1, 2 * g.n() - 1);
    t.live_ = Bitset(cap);
    t.members_.resize(g.n());
    t.black_.assign(cap, Bitset(cap));
    t.red_.assign(cap, Bitset(cap));
    t.next_id_ = g.n();
    for (int v = 0; v < g.n(); ++v) {
        t.members_[v] = {v};
        t.live_.set(v);
        g.neighbors(v).for_each([&](int w) { t.black_[v].set(w); });
    }
    return t;
}

Trigraph Trigraph::quotient(const ColoredGraph& g, const std::vector<std::vector<int>>& P) {
    Trigraph t;
    t.init(g, P);
    return t;
}

int Trigraph::max_red_degree() const {
    int best = 0;
    live_.for_each([&](int id) { best = std::max(best, red_[id].count()); });
    return best;
}

int Trigraph::red_edge_count() const {
    int total = 0;
    live_.for_each([&](int id) { total += red_[id].count(); });
    return total / 2;
}

std::vector<std::pair<int, int>> Trigraph::red_edges() const {
    std::vector<std::pair<int, int>> out;
    live_.for_each([&](int a) {
        for (int b = red_[a].find_next(a + 1); b != -1; b = red_[a].find_next(b + 1))
            out.emplace_back(a, b);
    });
    return out;
}

Trigraph Trigraph::contract(int a, int b) const {
    if (a == b) throw Error("contract: parts must be distinct");
    if (!is_live(a) || !is_live(b)) throw Error("contract: dead part");
    Trigraph t(*this);
    int id = t.next_id_++;
    if (id >= (int)t.black_.size()) throw Error("contract: id capacity exceeded");

    t.members_[a].clear();
    t.members_[b].clear();
    t.members_.resize(std::max((int)t.members_.size(), id + 1));
    auto& mem = t.members_[id];
    mem = members_[a];
    mem.insert(mem.end(), members_[b].begin(), members_[b].end());
    std::sort(mem.begin(), mem.end());

    // Quotient recoloring: black to x iff both a and b were black to x,
    // nothing iff neither was adjacent, red otherwise.
    Bitset blk = black_[a] & black_[b];
    Bitset touched = (black_[a] | black_[b] | red_[a] | red_[b]);
    blk.reset(a);
    blk.reset(b);
    touched.reset(a);
    touched.reset(b);
    Bitset red = touched;
    red.and_not(blk);

    t.live_.reset(a);
    t.live_.reset(b);
    t.live_.set(id);
    t.black_[id] = blk;
    t.red_[id] = red;
    t.live_.for_each([&](int x) {
        if (x == id) return;
        t.black_[x].reset(a);
        t.black_[x].reset(b);
        t.red_[x].reset(a);
        t.red_[x].reset(b);
        if (blk.test(x))
            t.black_[x].set(id);
        else if (red.test(x))
            t.red_[x].set(id);
    });
    t.black_[a] = Bitset((int)t.black_[a].size());
    t.black_[b] = Bitset((int)t.black_[b].size());
    t.red_[a] = Bitset((int)t.red_[a].size());
    t.red_[b] = Bitset((int)t.red_[b].size());
    return t;
}

std::vector<std::vector<int>> Trigraph::red_components() const {
    std::vector<std::vector<int>> comps;
    Bitset seen(live_.size());
    live_.for_each([&](int s) {
        if (seen.test(s)) return;
        std::vector<int> comp, stack{s};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            red_[v].for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    });
    return comps;
}

int Trigraph::max_red_component() const {
    int best = 0;
    for (auto& c : red_components()) best = std::max(best, (int)c.size());
    return best;
}

Trigraph::Canonical Trigraph::canonical_view() const {
    std::vector<int> ids = live_ids();
    std::vector<std::vector<int>> parts;
    for (int id : ids) parts.push_back(members_[id]);
    std::vector<int> order(parts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return parts[x] < parts[y]; });

    Canonical out;
    std::vector<int> pos(ids.size());
    for (size_t r = 0; r < order.size(); ++r) {
        out.first.push_back(parts[order[r]]);
        pos[order[r]] = (int)r;
    }
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < ids.size(); ++j) {
            if (pos[i] >= pos[j]) continue;
            char c = black(ids[i], ids[j]) ? 'b' : red(ids[i], ids[j]) ? 'r' : 0;
            if (c) out.second[{pos[i], pos[j]}] = c;
        }
    return out;
}

WidthReport verify_sequence(const ColoredGraph& g, const ContractionSequence& s) {
    Trigraph t = Trigraph::from_graph(g);
    WidthReport rep;
    for (size_t i = 0; i < s.merges.size(); ++i) {
        auto [a, b] = s.merges[i];
        if (a == b || !t.is_live(a) || !t.is_live(b))
            throw Error("verify_sequence: bad merge at step " + std::to_string(i));
        t = t.contract(a, b);
        int d = t.max_red_degree();
        int c = t.max_red_component();
        rep.per_step.emplace_back(d, c);
        rep.width = std::max(rep.width, d);
        rep.max_red_component = std::max(rep.max_red_component, c);
    }
    return rep;
}

std::string render_sequence(const ContractionSequence& s) {
    std::ostringstream out;
    out << render_graph(s.base);
    for (auto [a, b] : s.merges) out << "m " << a << " " << b << "\n";
    return out.str();
}

ContractionSequence sequence_from_reps(const ColoredGraph& g,
                                       const std::vector<std::pair<int, int>>& rep_merges) {
    std::vector<int> parent(g.n()), id_at_root(g.n());
    for (int v = 0; v < g.n(); ++v) parent[v] = id_at_root[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    ContractionSequence s{g, {}};
    int next = g.n();
    for (auto [a, b] : rep_merges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) throw Error("sequence_from_reps: representatives share a part");
        s.merges.emplace_back(id_at_root[ra], id_at_root[rb]);
        parent[ra] = rb;
        id_at_root[rb] = next++;
    }
    return s;
}

ContractionSequence parse_sequence(const std::string& text) {
    std::string graph_part;
    std::vector<std::pair<int, int>> merges;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string stripped = raw;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped.erase(hash);
        std::istringstream ls(stripped);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "m") {
            int a, b;
            if (!(ls >> a >> b))
                throw ParseError("line " + std::to_string(lineno) + ": malformed merge");
            merges.emplace_back(a, b);
        } else {
            graph_part += raw + "\n";
        }
    }
    return ContractionSequence{parse_graph(graph_part), std::move(merges)};
}

}  // namespace twinwl
