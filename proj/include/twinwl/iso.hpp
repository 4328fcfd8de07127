#pragma once

#include <optional>
#include <vector>

#include "twinwl/graph.hpp"

namespace twinwl {

/// VF2-style backtracking search for a color-preserving isomorphism.
/// Vertices are matched within joint 1-WL stable classes, extending along
/// adjacency. Exact: returns a mapping (g vertex -> h vertex) or nullopt.
/// Throws BudgetError if the search exceeds `max_nodes` states.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g,
                                                 const ColoredGraph& h,
                                                 uint64_t max_nodes = 200'000'000);

bool isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                uint64_t max_nodes = 200'000'000);

/// Checks that f is a color-preserving isomorphism from g onto h.
bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                    const std::vector<int>& f);

}  // namespace twinwl
