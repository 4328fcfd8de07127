#pragma once

#include <string>
#include <vector>

#include "twinwl/graph.hpp"

namespace twinwl {

enum class ModLabel { Single, Parallel, Series, Prime };

std::string to_string(ModLabel l);

/// Rooted modular decomposition tree. Node 0 is the root (= V(G)); children
/// of a node partition it. Parallel children are the connected components,
/// series children the co-components, prime children the maximal strong
/// modules (whose quotient is prime).
struct ModTree {
    struct Node {
        std::vector<int> module;  // sorted original vertices
        ModLabel label;
        std::vector<int> children;  // node indices
        int parent = -1;
    };
    std::vector<Node> nodes;
    int root = 0;

    bool is_prime_graph() const {
        return nodes[root].label == ModLabel::Prime &&
               (int)nodes[root].children.size() == (int)nodes[root].module.size();
    }
};

/// The unique partition of a connected and coconnected graph (n >= 2) into
/// inclusion-wise maximal strong modules; the quotient by it is prime.
/// Throws when g is disconnected or co-disconnected (recurse via mod_tree).
std::vector<std::vector<int>> maximal_modules(const ColoredGraph& g);

ModTree mod_tree(const ColoredGraph& g);

/// Classes of the is-twin relation: u,v together iff N(u)\{v} = N(v)\{u}.
/// Each class is a clique or an independent set.
std::vector<std::vector<int>> twins_partition(const ColoredGraph& g);

/// The colored quotient by the maximal modules: vertices are the modules of
/// M_G (ordered by smallest member), edges are module adjacencies, and the
/// color of a module is the rank of its canonical encoding under lex order.
/// Requires the quotient to be prime (g connected and coconnected) and every
/// module subgraph to have twin-width at most 1.
/// Implemented in canon.cpp (uses canonical_form on module subgraphs).
ColoredGraph quotient_star(const ColoredGraph& g);

}  // namespace twinwl
