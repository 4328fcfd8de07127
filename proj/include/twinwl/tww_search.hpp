#pragma once

#include <cstdint>
#include <optional>

#include "twinwl/trigraph.hpp"

namespace twinwl {

struct SearchBudget {
    uint64_t max_nodes = 20'000'000;
    double time_cap_seconds = 600.0;
    int beam = 24;
};

/// Result of the exact search. On exhaustion only the bounds are meaningful:
/// lower comes from completely refuted widths, upper from the best verified
/// certificate found so far (-1 when none).
struct ExactResult {
    bool exhausted = false;
    int lower = 0;
    int upper = -1;
    std::optional<ContractionSequence> certificate;
    uint64_t nodes = 0;
    double seconds = 0.0;

    int width() const {
        if (exhausted) throw Error("exact_twinwidth: budget exhausted, only bounds known");
        return upper;
    }
};

/// Minimum width over all contraction sequences, by iterative deepening over
/// the target width with memoized refuted states. Intended for n <= 10.
ExactResult exact_twinwidth(const ColoredGraph& g, const SearchBudget& budget = {});

struct HeuristicResult {
    bool found = false;  // achieved width <= target
    int achieved = -1;
    std::optional<ContractionSequence> sequence;
    uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Deterministic beam search over merges scored by (resulting max red
/// degree, red edge count, merged part size), ties by smallest part-id pair.
/// not_found is not a refutation.
HeuristicResult heuristic_sequence(const ColoredGraph& g, int target,
                                   const SearchBudget& budget = {});

}  // namespace twinwl
