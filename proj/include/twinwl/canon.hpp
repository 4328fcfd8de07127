#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twinwl/graph.hpp"
#include "twinwl/trigraph.hpp"

namespace twinwl {

// --- token alphabet for canonical contraction strings ------------------------
//
// A run over a colored prime graph emits
//   Init (RedStep PhaseCounts+)*
// stopping at two live parts, or the distinguished Failure value. A
// one-vertex input is a single Leaf token. The variant order below is the
// token kind rank used by the lexicographic comparison:
// Init < PhaseCounts < RedStep < Leaf, then field-wise numeric.

struct CsInit {
    int edge;  // 1 iff the starting pair is adjacent
    int cu, cv;
    friend auto operator<=>(const CsInit&, const CsInit&) = default;
};
struct CsCounts {
    // Near-twin class sizes in slot order (typePair, side, colorRank):
    // typePair runs over ((t0,t0),(t0,t1),(t1,t0),(t1,t1)), side u before v,
    // colors ascending over the graph's palette.
    std::vector<uint32_t> counts;
    friend auto operator<=>(const CsCounts&, const CsCounts&) = default;
};
struct CsRed {
    int to_u;  // 1 iff the new red partner was black-adjacent to the u side
    int color;
    friend auto operator<=>(const CsRed&, const CsRed&) = default;
};
struct CsLeaf {
    int color;
    friend auto operator<=>(const CsLeaf&, const CsLeaf&) = default;
};

using CsToken = std::variant<CsInit, CsCounts, CsRed, CsLeaf>;

std::strong_ordering compare(const CsToken& a, const CsToken& b);

struct CsString {
    bool failure = false;
    std::vector<int> palette;  // distinct input colors, ascending
    std::vector<CsToken> tokens;

    static CsString fail() { return CsString{true, {}, {}}; }
    friend bool operator==(const CsString& a, const CsString& b);
    // Total order for the lex-min invariant: Failure above every string,
    // otherwise (palette, tokens token-wise, then length).
    friend bool operator<(const CsString& a, const CsString& b);
};

std::string to_json(const CsString& s);

// --- near twins ---------------------------------------------------------------

struct NearTwinQuery {
    bool t_is_edge;   // required pair type of (u, w)
    bool tp_is_edge;  // required pair type of (v, w)
    int x;            // host endpoint: one of the two red-edge endpoints
    int color;
};

/// All singleton parts w such that contracting w into x deletes w and changes
/// nothing else: w matches the queried pair types and color and has the same
/// relation as x to every other live part. A vertex qualifying for both
/// endpoints counts for the v side only, so per-host answers are disjoint.
/// Requires the trigraph to have exactly one red edge; x must be an endpoint.
std::vector<int> near_twins(const Trigraph& t, const NearTwinQuery& q);

// --- the canonical contraction sequence of a starting pair --------------------

/// Replay data for reconstruction/unwinding: the order in which every vertex
/// joined the contraction, slot-aligned across runs with equal strings.
struct CsTrace {
    int u = -1, v = -1;
    std::vector<int> red_steps;  // the 2a vertex of each iteration
    // phases[p][sub][slot] = vertices contracted in that sub-round slot
    std::vector<std::vector<std::vector<std::vector<int>>>> phases;
    // Merge list in replay order (pairs of original-vertex representatives;
    // the u side is always represented by u, the v side by its red-step
    // vertex). Excludes the final 2-part merge.
    std::vector<std::pair<int, int>> rep_merges;
    // Vertices in first-contraction order: u, v, then in order of leaving the
    // singleton pool. A permutation of V when the run succeeds.
    std::vector<int> leave_order;
};

/// The §4.1-style canonical run from contracting (u,v) first. Requires
/// n >= 2 and u != v; the caller is responsible for primeness when the
/// string is used as an invariant. Failure is a value, not an error.
CsString cs(const ColoredGraph& g, int u, int v, CsTrace* trace = nullptr);

/// Lexicographically minimal non-Failure cs over all ordered pairs, or
/// Failure when every pair fails (twin-width > 1 for prime inputs).
/// One-vertex graphs yield the single Leaf token.
CsString cs_invariant(const ColoredGraph& g);

/// As cs_invariant, but also reports a witnessing pair and its trace.
struct CsInvariantResult {
    CsString value;
    int u = -1, v = -1;
    CsTrace trace;
};
CsInvariantResult cs_invariant_witness(const ColoredGraph& g);

/// Builds the isomorphism implied by cs(g,u,v) = cs(h,u2,v2) != Failure:
/// maps pivots to pivots and each near-twin class to its counterpart, then
/// verifies the result before returning. Throws Error on string mismatch and
/// reports an invariant violation if verification ever fails.
std::vector<int> reconstruct_isomorphism(const ColoredGraph& g, int u, int v,
                                         const ColoredGraph& h, int u2, int v2);

// --- recognition and canonical form -------------------------------------------

struct Tww1Result {
    bool accepted = false;
    std::optional<ContractionSequence> certificate;  // replays to width <= 1
};

/// Twin-width <= 1 test via the modular decomposition: every prime quotient
/// node must admit a successful cs pair. The certificate composes the
/// per-node sequences.
Tww1Result is_twinwidth_le1(const ColoredGraph& g);

struct CanonicalForm {
    std::vector<uint8_t> bytes;
    std::vector<int> order;  // canonical vertex order of g
};

/// Canonical encoding for colored graphs of twin-width <= 1: equal bytes
/// exactly when the graphs are color-isomorphic. Throws Error when the input
/// is not twin-width <= 1.
CanonicalForm canonical_form(const ColoredGraph& g);

std::string hex_bytes(const std::vector<uint8_t>& bytes);

}  // namespace twinwl
