#include "twinwl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace twinwl {

ColoredGraph::ColoredGraph(int n, std::vector<std::pair<int, int>> edges,
                           std::vector<int> colors)
    : n_(n), colors_(std::move(colors)) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    if (colors_.empty()) colors_.assign(n, 0);
    if ((int)colors_.size() != n) throw Error("color vector size mismatch");
    for (int c : colors_)
        if (c < 0) throw Error("colors must be nonnegative");
    adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop");
        if (adj_[u].test(v)) throw Error("duplicate edge");
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }
}

std::vector<std::pair<int, int>> ColoredGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].find_next(u + 1); v != -1; v = adj_[u].find_next(v + 1))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> ColoredGraph::color_palette() const {
    std::vector<int> p = colors_;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

ColoredGraph ColoredGraph::complement() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) edges.emplace_back(u, v);
    return ColoredGraph(n_, std::move(edges), colors_);
}

std::pair<ColoredGraph, std::vector<int>> ColoredGraph::induced_subgraph(
    const std::vector<int>& S) const {
    std::vector<int> index(n_, -1);
    for (int i = 0; i < (int)S.size(); ++i) {
        if (S[i] < 0 || S[i] >= n_) throw Error("induced_subgraph: vertex out of range");
        if (index[S[i]] != -1) throw Error("induced_subgraph: repeated vertex");
        index[S[i]] = i;
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors(S.size());
    for (int i = 0; i < (int)S.size(); ++i) {
        colors[i] = colors_[S[i]];
        for (int j = i + 1; j < (int)S.size(); ++j)
            if (adj_[S[i]].test(S[j])) edges.emplace_back(i, j);
    }
    return {ColoredGraph((int)S.size(), std::move(edges), std::move(colors)), S};
}

ColoredGraph ColoredGraph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v) colors[perm[v]] = colors_[v];
    for (auto [u, v] : edge_list()) edges.emplace_back(perm[u], perm[v]);
    return ColoredGraph(n_, std::move(edges), std::move(colors));
}

std::vector<std::vector<int>> ColoredGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            adj_[v].for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool ColoredGraph::is_connected() const { return n_ <= 1 || components().size() == 1; }

uint64_t AtomicType::hash() const {
    uint64_t h = arity;
    auto mix = [&](uint64_t x) { h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (int e : eq) mix(e);
    for (bool b : adj) mix(b);
    for (int c : colors) mix(c);
    return h;
}

AtomicType atomic_type(const ColoredGraph& g, const std::vector<int>& tuple) {
    AtomicType t;
    t.arity = (int)tuple.size();
    t.eq.resize(tuple.size());
    t.colors.resize(tuple.size());
    for (int i = 0; i < t.arity; ++i) {
        int v = tuple[i];
        if (v < 0 || v >= g.n()) throw Error("atomic_type: vertex out of range");
        t.eq[i] = i;
        for (int j = 0; j < i; ++j)
            if (tuple[j] == v) {
                t.eq[i] = j;
                break;
            }
        t.colors[i] = g.color(v);
    }
    for (int i = 0; i < t.arity; ++i)
        for (int j = i + 1; j < t.arity; ++j)
            t.adj.push_back(g.adjacent(tuple[i], tuple[j]));
    return t;
}

BipartiteView BipartiteView::of(ColoredGraph g, std::vector<int> left,
                                std::vector<int> right) {
    for (int v : left)
        for (int w : right)
            if (v == w) throw Error("BipartiteView: sides must be disjoint");
    BipartiteView b;
    b.parent = std::make_shared<ColoredGraph>(std::move(g));
    b.left = std::move(left);
    b.right = std::move(right);
    return b;
}

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ColoredGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0, edges_seen = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors;
    std::vector<bool> colored;
    std::vector<Bitset> seen;

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string kind;
        if (!(ls >> kind)) continue;  // blank / comment-only line

        auto expect_end = [&]() {
            std::string extra;
            if (ls >> extra) fail(lineno, "trailing tokens");
        };

        if (kind == "p") {
            if (have_header) fail(lineno, "duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "graph" || n < 0 || m < 0)
                fail(lineno, "malformed header, expected 'p graph <n> <m>'");
            expect_end();
            have_header = true;
            colors.assign(n, 0);
            colored.assign(n, false);
            seen.assign(n, Bitset(n));
        } else if (kind == "c") {
            if (!have_header) fail(lineno, "'c' before header");
            int v, c;
            if (!(ls >> v >> c)) fail(lineno, "malformed color line");
            expect_end();
            if (v < 0 || v >= n) fail(lineno, "vertex out of range");
            if (c < 0) fail(lineno, "negative color");
            if (colored[v]) fail(lineno, "repeated color for vertex " + std::to_string(v));
            colored[v] = true;
            colors[v] = c;
        } else if (kind == "e") {
            if (!have_header) fail(lineno, "'e' before header");
            int u, v;
            if (!(ls >> u >> v)) fail(lineno, "malformed edge line");
            expect_end();
            if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "endpoint out of range");
            if (u == v) fail(lineno, "self-loop");
            if (seen[u].test(v)) fail(lineno, "duplicate edge");
            seen[u].set(v);
            seen[v].set(u);
            edges.emplace_back(u, v);
            ++edges_seen;
        } else {
            fail(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p graph' header");
    if (edges_seen != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen));
    return ColoredGraph(n, std::move(edges), std::move(colors));
}

std::string render_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "p graph " << g.n() << " " << g.m() << "\n";
    for (int v = 0; v < g.n(); ++v)
        if (g.color(v) != 0) out << "c " << v << " " << g.color(v) << "\n";
    for (auto [u, v] : g.edge_list()) out << "e " << u << " " << v << "\n";
    return out.str();
}

ColoredGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace twinwl
