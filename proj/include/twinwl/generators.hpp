#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twinwl/graph.hpp"
#include "twinwl/trigraph.hpp"

namespace twinwl {

/// Half-graph H_t: left v_1..v_t (ids 0..t-1), right w_1..w_t (ids t..2t-1),
/// v_i ~ w_j iff i <= j. side_schedule is the width-1 sequence that repeatedly
/// contracts (w_t,w_{t-1}) then (v_t,v_{t-1}); its final two parts are the
/// two sides.
struct HalfGraph {
    ColoredGraph g;
    std::vector<int> left, right;
    ContractionSequence side_schedule;
};
HalfGraph half_graph(int t);

/// Even/odd CFI companions of a connected cubic base. Per base vertex: four
/// inner vertices (even-parity subsets of its three incident edges) plus an
/// endpoint pair per incident edge; the odd graph twists exactly one base
/// edge. |V| = 10 |V(base)|.
struct CfiPair {
    ColoredGraph base, even, odd;
};
CfiPair cfi_pair(const ColoredGraph& base);

/// (s,<)-subdivision: each edge vw with v < w (by `order` rank, identity by
/// default) becomes the path v, s_1, ..., s_s, w. Path vertices get color 0.
ColoredGraph subdivide(const ColoredGraph& g, int s);
ColoredGraph subdivide(const ColoredGraph& g, int s, const std::vector<int>& order);

/// Graph of a uniformly random cotree shape: twin-width 0 by construction.
ColoredGraph random_cograph(int n, uint64_t seed);

/// Random twin-width-<=-1 graph grown by un-contracting a single-red-edge
/// sequence; the certificate replays forward with width <= 1 and a single
/// red edge at every non-terminal step.
struct Tww1Sample {
    ColoredGraph g;
    ContractionSequence certificate;
    int start_u = 0, start_v = 1;  // first contraction of the certificate
};
Tww1Sample random_tww1(int n, uint64_t seed);

/// Resamples random_tww1 until the graph is prime.
Tww1Sample random_tww1_prime(int n, uint64_t seed, int max_tries = 500);

/// Random induced subgraph of a half-graph (a partial half-graph): sides of
/// sizes a and b embedded into H_t with t = ceil(max(a,b)/density).
BipartiteView random_chain_graph(int a, int b, double density, uint64_t seed);

/// Named connected cubic bases for CFI constructions: k4, k33, cube,
/// petersen, mobius:<k> (Moebius ladder on 2k vertices), prism:<k>,
/// gp:<n>:<k> (generalized Petersen).
ColoredGraph cubic_base(const std::string& name);
std::vector<std::string> cubic_base_names();

}  // namespace twinwl
