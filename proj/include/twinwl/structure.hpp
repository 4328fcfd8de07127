#pragma once

#include <optional>
#include <vector>

#include "twinwl/graph.hpp"
#include "twinwl/trigraph.hpp"

namespace twinwl {

/// Bit-packed matrix over the two-element field.
struct Gf2Matrix {
    std::vector<Bitset> rows;
    int cols = 0;
    std::vector<int> row_labels, col_labels;

    /// Biadjacency of disjoint vertex sets: entry (a,b) = 1 iff ab is an edge.
    static Gf2Matrix biadjacency(const ColoredGraph& g, const std::vector<int>& A,
                                 const std::vector<int>& B);
};

int gf2_rank(Gf2Matrix m);
int cut_rank(const ColoredGraph& g, const std::vector<int>& A, const std::vector<int>& B);

/// Partial-half-graph (chain graph) recognition: true iff same-side
/// neighborhoods are totally preordered by inclusion. Returns an explicit
/// embedding into H_t, or a same-side pair with incomparable neighborhoods.
struct ChainCheck {
    bool is_chain = false;
    int embed_t = 0;
    std::vector<std::pair<int, int>> left_embedding;   // (vertex, 1-based H index)
    std::vector<std::pair<int, int>> right_embedding;
    std::optional<std::pair<int, int>> counterexample;
};
ChainCheck is_partial_half_graph(const BipartiteView& b);

/// Largest t with a semi-induced H_t inside a partial half-graph; equals the
/// GF(2) rank after deleting twins and isolated vertices. Witness pairs are
/// the (v_i, w_i) of the embedded half-graph.
struct HalfGraphWitness {
    int t = 0;
    std::vector<std::pair<int, int>> pairs;
};
HalfGraphWitness max_induced_half_graph(const BipartiteView& b);

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges;
};
MatchingResult max_matching(const BipartiteView& b);

/// Largest t with a K_{t,t}, for partial half-graphs: max over i of
/// min(i, |N(l_i)|) along the inclusion-descending left order.
struct BicliqueWitness {
    int t = 0;
    std::vector<int> left, right;
};
BicliqueWitness max_balanced_biclique_chain(const BipartiteView& b);

/// min over A <= X <= V\B of the cut rank rk(X, V\X). Brute-force cut
/// enumeration guarded to n <= 20.
int rank_connectivity(const ColoredGraph& g, const std::vector<int>& A,
                      const std::vector<int>& B);

/// Checks that every cut between two parts, at every step of a width-<=-1
/// sequence, induces a partial half-graph.
struct RedCutAudit {
    bool ok = true;
    int steps_checked = 0;
    long long cuts_checked = 0;
    struct Violation {
        int step;
        std::vector<int> P, Q;
    };
    std::optional<Violation> violation;
};
RedCutAudit audit_red_cuts(const ColoredGraph& g, const ContractionSequence& s);

}  // namespace twinwl
