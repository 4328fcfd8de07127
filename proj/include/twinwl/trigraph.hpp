#pragma once

#include <map>
#include <string>
#include <vector>

#include "twinwl/graph.hpp"

namespace twinwl {

/// Quotient trigraph of a base graph: vertices are parts of a partition of
/// the base vertex set, joined by a black edge when fully connected, no edge
/// when disconnected, and a red edge otherwise.
///
/// Part ids are stable: the initial parts carry the base vertex ids, and
/// every contraction allocates a fresh id (base_n + step index), so replay
/// logs are unambiguous.
class Trigraph {
public:
    /// Discrete partition: every edge of g black.
    static Trigraph from_graph(const ColoredGraph& g);

    /// Quotient by an explicit partition (parts become ids 0..|P|-1 in the
    /// given order). Throws if P is not a partition of V(g).
    static Trigraph quotient(const ColoredGraph& g, const std::vector<std::vector<int>>& P);

    int base_n() const { return base_n_; }
    int num_live() const { return (int)live_.count(); }
    bool is_live(int id) const { return id < (int)members_.size() && live_.test(id); }
    const std::vector<int>& part(int id) const { return members_[id]; }
    std::vector<int> live_ids() const { return live_.to_vector(); }

    bool black(int a, int b) const { return black_[a].test(b); }
    bool red(int a, int b) const { return red_[a].test(b); }
    bool adjacent(int a, int b) const { return black(a, b) || red(a, b); }
    const Bitset& black_row(int id) const { return black_[id]; }
    const Bitset& red_row(int id) const { return red_[id]; }

    int red_degree(int id) const { return red_[id].count(); }
    int max_red_degree() const;
    int red_edge_count() const;
    std::vector<std::pair<int, int>> red_edges() const;

    /// Contract two live parts; the merged part gets the next fresh id.
    /// Agrees with quotient() of the base graph by the coarsened partition.
    Trigraph contract(int a, int b) const;
    int next_id() const { return next_id_; }

    /// Connected components of the red-only graph (per live part).
    std::vector<std::vector<int>> red_components() const;
    int max_red_component() const;

    /// Content-based view for equality checks: sorted parts plus the edges
    /// between them keyed by part contents.
    using Canonical = std::pair<std::vector<std::vector<int>>,
                                std::map<std::pair<int, int>, char>>;
    Canonical canonical_view() const;

private:
    int base_n_ = 0;
    int next_id_ = 0;
    Bitset live_;
    std::vector<std::vector<int>> members_;
    std::vector<Bitset> black_, red_;

    Trigraph() = default;
    void init(const ColoredGraph& g, const std::vector<std::vector<int>>& P);
};

/// Ordered merge list over a base graph. A full sequence has n-1 merges.
struct ContractionSequence {
    ColoredGraph base;
    std::vector<std::pair<int, int>> merges;  // part ids per the fresh-id scheme
};

struct WidthReport {
    int width = 0;              // max red degree over all intermediate trigraphs
    int max_red_component = 0;  // max order of a red component over all steps
    std::vector<std::pair<int, int>> per_step;  // (red-degree max, red-component max)
};

/// Replays the merges, reporting the width certificate. Throws Error naming
/// the step index when a merge names a dead or equal part.
WidthReport verify_sequence(const ColoredGraph& g, const ContractionSequence& s);

// Sequence files are the graph text followed by "m <idA> <idB>" lines.
std::string render_sequence(const ContractionSequence& s);
ContractionSequence parse_sequence(const std::string& text);

/// Converts merges given as pairs of original-vertex representatives into an
/// id-based sequence (the part holding each representative is looked up
/// through a union-find replay).
ContractionSequence sequence_from_reps(const ColoredGraph& g,
                                       const std::vector<std::pair<int, int>>& rep_merges);

}  // namespace twinwl
