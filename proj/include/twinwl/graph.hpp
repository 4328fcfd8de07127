#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twinwl/bitset.hpp"

namespace twinwl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
// Raised when a size/budget guard refuses an input (distinct from a failure).
struct BudgetError : Error {
    using Error::Error;
};

/// Simple undirected graph with nonnegative integer vertex colors.
/// Vertex ids are dense and 0-based; values are immutable after construction
/// and every operation on them is a pure function.
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(int n, std::vector<std::pair<int, int>> edges = {},
                          std::vector<int> colors = {});

    int n() const { return n_; }
    int m() const { return m_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int color(int v) const { return colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }

    /// Edges sorted by (min,max) endpoint.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Distinct colors in ascending order.
    std::vector<int> color_palette() const;

    ColoredGraph complement() const;

    /// Induced subgraph on S (sorted vertex list); new id i corresponds to
    /// S[i], which is also returned as the index map.
    std::pair<ColoredGraph, std::vector<int>> induced_subgraph(
        const std::vector<int>& S) const;

    ColoredGraph relabeled(const std::vector<int>& perm) const;  // v -> perm[v]

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.colors_ == b.colors_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> colors_;
};

/// Isomorphism type of an ordered vertex tuple: equal values exactly when the
/// index map is a color-preserving isomorphism of the ordered induced
/// subgraphs (equality pattern included, so (v,v) differs from any edge or
/// non-edge pair).
struct AtomicType {
    int arity = 0;
    std::vector<int> eq;        // eq[i] = first j <= i with tuple[j] == tuple[i]
    std::vector<bool> adj;      // upper triangle (i<j), row-major
    std::vector<int> colors;    // input colors along the tuple

    friend bool operator==(const AtomicType&, const AtomicType&) = default;
    friend auto operator<=>(const AtomicType&, const AtomicType&) = default;
    uint64_t hash() const;
};

AtomicType atomic_type(const ColoredGraph& g, const std::vector<int>& tuple);

/// Bipartite slice of a parent graph: only L-R edges are visible.
struct BipartiteView {
    std::shared_ptr<const ColoredGraph> parent;
    std::vector<int> left, right;

    bool adjacent(int l, int r) const { return parent->adjacent(l, r); }
    static BipartiteView of(ColoredGraph g, std::vector<int> left,
                            std::vector<int> right);
};

// --- graph text format -----------------------------------------------------
//
//   p graph <n> <m>     header, exactly once, first
//   c <v> <color>       optional, at most once per vertex
//   e <u> <v>           m edge lines, u != v
//
// '#' starts a comment. Canonical rendering sorts edge lines by (min,max)
// endpoint and emits only nonzero colors.

ColoredGraph parse_graph(const std::string& text);
std::string render_graph(const ColoredGraph& g);

ColoredGraph load_graph_file(const std::string& path);

}  // namespace twinwl
