#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "twinwl/graph.hpp"

namespace twinwl {

/// Stable k-WL coloring. Color ids are canonical: they are assigned by
/// sorting class signatures, so runs over different graphs produce
/// comparable ids (wl_distinguish additionally pools the id space of both
/// runs round by round).
struct WlColoring {
    int k = 1;
    uint32_t num_colors = 0;
    int rounds = 0;  // refinement rounds until the partition stabilized
    std::vector<uint32_t> color;  // tuple index = sum v_i * n^(k-1-i)

    std::map<uint32_t, uint64_t> histogram() const;
};

/// Iterated refinement of V^k by atomic types and substitution color
/// multisets. Guard: n^k tuples must stay within budget (1e8).
WlColoring wl_refine(const ColoredGraph& g, int k);

struct WlVerdict {
    bool distinguished = false;
    // Witness color class with unequal cardinality (canonical joint id).
    std::optional<uint32_t> witness_color;
    uint64_t count_g = 0, count_h = 0;
    int rounds = 0;
};

/// Whether k-WL tells g and h apart: refines both tuple sets jointly in a
/// shared id space and compares per-color cardinalities.
WlVerdict wl_distinguish(const ColoredGraph& g, const ColoredGraph& h, int k);

/// 1-WL fast path (same partition as wl_refine(g,1), neighbor multisets
/// only). Synchronous canonical rounds so ids stay comparable.
WlColoring color_refinement(const ColoredGraph& g);

/// Joint 1-WL over two graphs: stable vertex colors in one shared id space.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> joint_color_refinement(
    const ColoredGraph& g, const ColoredGraph& h);

// --- bijective pebble game -----------------------------------------------------

struct GameVerdict {
    enum class Winner { Spoiler, Duplicator };
    Winner winner = Winner::Duplicator;
    // For Duplicator: number of surviving positions of the greatest fixed
    // point. For Spoiler: sweep index at which the empty position died (a
    // winning-strategy depth bound).
    int64_t surviving_positions = 0;
    int spoiler_depth = 0;
};

/// Decides the bijective k-pebble game BP_k on g and h (k >= 2) by computing
/// Duplicator's surviving positions as a greatest fixed point; the bijection
/// step is decided by perfect-matching existence on the survival relation.
GameVerdict pebble_game(const ColoredGraph& g, const ColoredGraph& h, int k);

}  // namespace twinwl
