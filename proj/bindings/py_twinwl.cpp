// Python bindings for the main operations: graphs, generators, twin-width
// search, canonization, WL refinement, the pebble game, and the structural
// analyzers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twinwl/canon.hpp"
#include "twinwl/generators.hpp"
#include "twinwl/graph.hpp"
#include "twinwl/iso.hpp"
#include "twinwl/modular.hpp"
#include "twinwl/structure.hpp"
#include "twinwl/trigraph.hpp"
#include "twinwl/tww_search.hpp"
#include "twinwl/wl.hpp"

namespace py = pybind11;
using namespace twinwl;

namespace {

ColoredGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& colors) {
    return ColoredGraph(n, edges, colors);
}

py::dict tree_to_dict(const ModTree& t, int node) {
    const auto& n = t.nodes[node];
    py::list children;
    for (int c : n.children) children.append(tree_to_dict(t, c));
    py::dict d;
    d["module"] = n.module;
    d["label"] = to_string(n.label);
    d["children"] = children;
    return d;
}

}  // namespace

PYBIND11_MODULE(twinwl, m) {
    m.doc() = "twin-width / Weisfeiler-Leman toolkit";

    py::register_exception<BudgetError>(m, "BudgetError");
    static py::exception<Error> exc(m, "TwinwlError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetError&) {
            throw;  // handled by the registered type above
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::class_<ColoredGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"),
             py::arg("edges") = std::vector<std::pair<int, int>>{},
             py::arg("colors") = std::vector<int>{})
        .def_property_readonly("n", &ColoredGraph::n)
        .def_property_readonly("m", &ColoredGraph::m)
        .def("adjacent", &ColoredGraph::adjacent)
        .def("color", &ColoredGraph::color)
        .def("colors", &ColoredGraph::colors)
        .def("edges", &ColoredGraph::edge_list)
        .def("complement", &ColoredGraph::complement)
        .def("relabeled", &ColoredGraph::relabeled)
        .def("induced_subgraph",
             [](const ColoredGraph& g, const std::vector<int>& S) {
                 return g.induced_subgraph(S).first;
             })
        .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
        .def("__repr__", [](const ColoredGraph& g) {
            return "<twinwl.Graph n=" + std::to_string(g.n()) +
                   " m=" + std::to_string(g.m()) + ">";
        });

    m.def("parse_graph", &parse_graph);
    m.def("render_graph", &render_graph);

    // generators
    m.def("half_graph", [](int t) {
        HalfGraph h = half_graph(t);
        return py::make_tuple(h.g, h.left, h.right, h.side_schedule.merges);
    });
    m.def("cfi_pair", [](const ColoredGraph& base) {
        CfiPair p = cfi_pair(base);
        return py::make_tuple(p.even, p.odd);
    });
    m.def("cubic_base", &cubic_base);
    m.def("subdivide", py::overload_cast<const ColoredGraph&, int>(&subdivide));
    m.def("random_cograph", &random_cograph);
    m.def("random_tww1", [](int n, uint64_t seed) {
        Tww1Sample s = random_tww1(n, seed);
        return py::make_tuple(s.g, s.certificate.merges, s.start_u, s.start_v);
    });
    m.def("random_chain_graph", [](int a, int b, double density, uint64_t seed) {
        BipartiteView v = random_chain_graph(a, b, density, seed);
        return py::make_tuple(*v.parent, v.left, v.right);
    });

    // contraction sequences
    m.def("verify_sequence",
          [](const ColoredGraph& g, const std::vector<std::pair<int, int>>& merges) {
              WidthReport r = verify_sequence(g, ContractionSequence{g, merges});
              py::dict d;
              d["width"] = r.width;
              d["max_red_component"] = r.max_red_component;
              d["steps"] = r.per_step;
              return d;
          });

    // twin-width search
    m.def(
        "exact_twinwidth",
        [](const ColoredGraph& g, uint64_t max_nodes, double time_cap) {
            SearchBudget b;
            b.max_nodes = max_nodes;
            b.time_cap_seconds = time_cap;
            ExactResult r = exact_twinwidth(g, b);
            py::dict d;
            d["exhausted"] = r.exhausted;
            d["lower"] = r.lower;
            d["upper"] = r.upper;
            if (r.certificate) d["sequence"] = r.certificate->merges;
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("g"), py::arg("max_nodes") = 20'000'000, py::arg("time_cap") = 600.0);
    m.def(
        "heuristic_sequence",
        [](const ColoredGraph& g, int target, int beam, double time_cap) {
            SearchBudget b;
            b.beam = beam;
            b.time_cap_seconds = time_cap;
            HeuristicResult r = heuristic_sequence(g, target, b);
            py::dict d;
            d["found"] = r.found;
            d["achieved"] = r.achieved;
            if (r.sequence) d["sequence"] = r.sequence->merges;
            return d;
        },
        py::arg("g"), py::arg("target"), py::arg("beam") = 24, py::arg("time_cap") = 600.0);

    // canonization and isomorphism
    m.def("is_twinwidth_le1", [](const ColoredGraph& g) {
        Tww1Result r = is_twinwidth_le1(g);
        py::dict d;
        d["accepted"] = r.accepted;
        if (r.certificate) d["sequence"] = r.certificate->merges;
        return d;
    });
    m.def("canonical_form", [](const ColoredGraph& g) {
        CanonicalForm c = canonical_form(g);
        return py::make_tuple(py::bytes((const char*)c.bytes.data(), c.bytes.size()),
                              c.order);
    });
    m.def("cs_invariant_json", [](const ColoredGraph& g) { return to_json(cs_invariant(g)); });
    m.def("find_isomorphism", [](const ColoredGraph& g, const ColoredGraph& h) {
        return find_isomorphism(g, h);
    });
    m.def("isomorphic",
          [](const ColoredGraph& g, const ColoredGraph& h) { return isomorphic(g, h); });

    // modular decomposition
    m.def("mod_tree", [](const ColoredGraph& g) {
        ModTree t = mod_tree(g);
        return tree_to_dict(t, t.root);
    });
    m.def("twins_partition", &twins_partition);
    m.def("quotient_star", &quotient_star);

    // Weisfeiler-Leman
    m.def("wl_refine", [](const ColoredGraph& g, int k) {
        WlColoring c = wl_refine(g, k);
        py::dict d;
        d["k"] = c.k;
        d["rounds"] = c.rounds;
        d["num_colors"] = c.num_colors;
        d["histogram"] = c.histogram();
        return d;
    });
    m.def("wl_distinguish", [](const ColoredGraph& g, const ColoredGraph& h, int k) {
        WlVerdict v = wl_distinguish(g, h, k);
        py::dict d;
        d["distinguished"] = v.distinguished;
        d["rounds"] = v.rounds;
        if (v.witness_color) {
            d["witness_color"] = *v.witness_color;
            d["count_g"] = v.count_g;
            d["count_h"] = v.count_h;
        }
        return d;
    });
    m.def("color_refinement", [](const ColoredGraph& g) {
        WlColoring c = color_refinement(g);
        return c.color;
    });
    m.def("pebble_game", [](const ColoredGraph& g, const ColoredGraph& h, int k) {
        GameVerdict v = pebble_game(g, h, k);
        py::dict d;
        d["winner"] = v.winner == GameVerdict::Winner::Spoiler ? "spoiler" : "duplicator";
        d["surviving_positions"] = v.surviving_positions;
        d["spoiler_depth"] = v.spoiler_depth;
        return d;
    });

    // structure analysis
    m.def("gf2_rank", [](const ColoredGraph& g, const std::vector<int>& A,
                         const std::vector<int>& B) { return cut_rank(g, A, B); });
    m.def("is_partial_half_graph", [](const ColoredGraph& g, const std::vector<int>& left,
                                      const std::vector<int>& right) {
        ChainCheck c = is_partial_half_graph(BipartiteView::of(g, left, right));
        py::dict d;
        d["is_chain"] = c.is_chain;
        d["embed_t"] = c.embed_t;
        d["left_embedding"] = c.left_embedding;
        d["right_embedding"] = c.right_embedding;
        if (c.counterexample) d["counterexample"] = *c.counterexample;
        return d;
    });
    m.def("max_induced_half_graph",
          [](const ColoredGraph& g, const std::vector<int>& left,
             const std::vector<int>& right) {
              HalfGraphWitness w = max_induced_half_graph(BipartiteView::of(g, left, right));
              return py::make_tuple(w.t, w.pairs);
          });
    m.def("max_matching", [](const ColoredGraph& g, const std::vector<int>& left,
                             const std::vector<int>& right) {
        MatchingResult r = max_matching(BipartiteView::of(g, left, right));
        return py::make_tuple(r.size, r.edges);
    });
    m.def("max_balanced_biclique_chain",
          [](const ColoredGraph& g, const std::vector<int>& left,
             const std::vector<int>& right) {
              BicliqueWitness w =
                  max_balanced_biclique_chain(BipartiteView::of(g, left, right));
              return py::make_tuple(w.t, w.left, w.right);
          });
    m.def("rank_connectivity", &rank_connectivity);
    m.def("audit_red_cuts",
          [](const ColoredGraph& g, const std::vector<std::pair<int, int>>& merges) {
              RedCutAudit a = audit_red_cuts(g, ContractionSequence{g, merges});
              py::dict d;
              d["ok"] = a.ok;
              d["steps_checked"] = a.steps_checked;
              d["cuts_checked"] = a.cuts_checked;
              return d;
          });
}
