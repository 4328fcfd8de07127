// twinwl: twin-width / Weisfeiler-Leman toolkit command line.
//
// Exit codes: 0 success, 2 assertion or input failure (counterexample bundle
// written when an experiment fails), 3 budget exhaustion, 64 usage error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "twinwl/canon.hpp"
#include "twinwl/generators.hpp"
#include "twinwl/graph.hpp"
#include "twinwl/iso.hpp"
#include "twinwl/modular.hpp"
#include "twinwl/structure.hpp"
#include "twinwl/trigraph.hpp"
#include "twinwl/tww_search.hpp"
#include "twinwl/wl.hpp"

using json = nlohmann::json;
using namespace twinwl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

int env_threads() {
    const char* v = std::getenv("TWINWL_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t > 0 ? t : 1;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void write_text(const std::string& path, const std::string& text) {
    auto dir = std::filesystem::path(path).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    std::ofstream f(path);
    f << text;
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

void emit_graph(const ColoredGraph& g, const std::string& out_path) {
    if (out_path.empty())
        std::cout << render_graph(g);
    else
        write_text(out_path, render_graph(g));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash != std::string::npos && dash > 0) {
            int lo = std::stoi(item.substr(0, dash));
            int hi = std::stoi(item.substr(dash + 1));
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoi(item));
        }
    }
    return out;
}

json merges_json(const ContractionSequence& s) {
    json a = json::array();
    for (auto [x, y] : s.merges) a.push_back({x, y});
    return a;
}

json report_json(const WidthReport& r) {
    json steps = json::array();
    for (auto [d, c] : r.per_step) steps.push_back({d, c});
    return {{"width", r.width}, {"max_red_component", r.max_red_component}, {"steps", steps}};
}

json modtree_json(const ModTree& t, int node) {
    const auto& n = t.nodes[node];
    json children = json::array();
    for (int c : n.children) children.push_back(modtree_json(t, c));
    return {{"module", n.module}, {"label", to_string(n.label)}, {"children", children}};
}

BipartiteView view_from_cli(const ColoredGraph& g, const std::string& left_csv) {
    std::vector<int> left = parse_csv_ints(left_csv);
    std::vector<bool> is_left(g.n(), false);
    for (int v : left) {
        if (v < 0 || v >= g.n()) throw Error("--left vertex out of range");
        is_left[v] = true;
    }
    std::vector<int> right;
    for (int v = 0; v < g.n(); ++v)
        if (!is_left[v]) right.push_back(v);
    return BipartiteView::of(g, left, right);
}

// --- experiments -------------------------------------------------------------

struct ExperimentIO {
    std::string out_dir;
    uint64_t seed = 1;
    int samples = 0;

    void bundle_graph(const std::string& name, const ColoredGraph& g) const {
        if (!out_dir.empty()) write_text(out_dir + "/" + name + ".graph", render_graph(g));
    }
    void finish(json& report, bool ok, const std::string& name) const {
        report["experiment"] = name;
        report["seed"] = seed;
        report["threads"] = env_threads();
        report["pass"] = ok;
        if (!out_dir.empty()) write_text(out_dir + "/" + name + ".json", report.dump(2) + "\n");
    }
};

int run_cfi_subdivision_wl(const ExperimentIO& io, const std::string& base_name, int k,
                           const std::string& base3wl) {
    json rep;
    double t0 = now_seconds();
    CfiPair pair = cfi_pair(cubic_base(base_name));
    rep["base"] = base_name;
    rep["k"] = k;
    rep["cfi_order"] = pair.even.n();

    bool base_noniso = !isomorphic(pair.even, pair.odd);
    bool base_equiv = !wl_distinguish(pair.even, pair.odd, k).distinguished;
    rep["cfi_non_isomorphic"] = base_noniso;
    rep["cfi_kwl_equivalent"] = base_equiv;
    bool ok = base_noniso && base_equiv;

    int s = 2 * (int)std::ceil(std::log2((double)pair.even.n()));
    rep["s"] = s;
    ColoredGraph se = subdivide(pair.even, s), so = subdivide(pair.odd, s);
    rep["subdivision_order"] = se.n();
    bool sub_noniso = !isomorphic(se, so);
    bool sub_equiv = !wl_distinguish(se, so, k).distinguished;
    rep["subdivision_non_isomorphic"] = sub_noniso;
    rep["subdivision_kwl_equivalent"] = sub_equiv;
    ok = ok && sub_noniso && sub_equiv;

    // empirical transfer: a 3-WL-equivalent pair stays 1-WL-equivalent after
    // a 1-subdivision
    CfiPair deep = cfi_pair(cubic_base(base3wl));
    bool deep_3wl_equiv = !wl_distinguish(deep.even, deep.odd, 3).distinguished;
    bool deep_sub_equiv =
        !wl_distinguish(subdivide(deep.even, 1), subdivide(deep.odd, 1), 1).distinguished;
    rep["transfer_base"] = base3wl;
    rep["transfer_3wl_equivalent"] = deep_3wl_equiv;
    rep["transfer_1subdivision_1wl_equivalent"] = deep_sub_equiv;
    ok = ok && deep_3wl_equiv && deep_sub_equiv;

    // best-effort heuristic twin-width of the subdivided instance (long
    // subdivisions have twin-width at most 4); reported, not gated
    SearchBudget budget;
    budget.beam = 16;
    budget.time_cap_seconds = 300;
    HeuristicResult h = heuristic_sequence(se, 4, budget);
    rep["heuristic_target"] = 4;
    rep["heuristic_achieved"] = h.achieved;
    rep["heuristic_met_target"] = h.found;

    rep["time_seconds"] = now_seconds() - t0;
    if (!ok) {
        io.bundle_graph("cfi_even", pair.even);
        io.bundle_graph("cfi_odd", pair.odd);
        io.bundle_graph("sub_even", se);
        io.bundle_graph("sub_odd", so);
    }
    io.finish(rep, ok, "cfi-subdivision-wl");
    emit(rep, "");
    return ok ? kExitOk : kExitFail;
}

int run_tww1_wl_dimension(const ExperimentIO& io, int n_max) {
    json rep;
    double t0 = now_seconds();
    int samples = io.samples > 0 ? io.samples : 100;
    std::mt19937_64 rng(io.seed);
    int two_wl_hits = 0;
    bool ok = true;
    json details = json::array();
    for (int i = 0; i < samples; ++i) {
        int n = 4 + (int)(rng() % (uint64_t)(n_max - 3));
        ColoredGraph g1, g2;
        while (true) {
            g1 = random_tww1(n, rng()).g;
            g2 = random_tww1(n, rng()).g;
            if (canonical_form(g1).bytes != canonical_form(g2).bytes) break;
        }
        bool d3 = wl_distinguish(g1, g2, 3).distinguished;
        bool d2 = wl_distinguish(g1, g2, 2).distinguished;
        two_wl_hits += d2;
        if (!d3) {
            ok = false;
            io.bundle_graph("counterexample_g1_" + std::to_string(i), g1);
            io.bundle_graph("counterexample_g2_" + std::to_string(i), g2);
        }
        details.push_back({{"n", n}, {"three_wl", d3}, {"two_wl", d2}});
    }
    rep["samples"] = samples;
    rep["n_max"] = n_max;
    rep["all_distinguished_by_3wl"] = ok;
    rep["distinguished_by_2wl"] = two_wl_hits;
    rep["details"] = details;
    rep["time_seconds"] = now_seconds() - t0;
    io.finish(rep, ok, "tww1-wl-dimension");
    emit(rep, "");
    return ok ? kExitOk : kExitFail;
}

int run_red_cut_audit(const ExperimentIO& io, int n_max) {
    json rep;
    double t0 = now_seconds();
    int samples = io.samples > 0 ? io.samples : 200;
    std::mt19937_64 rng(io.seed);
    bool ok = true;
    long long cuts = 0;
    for (int i = 0; i < samples; ++i) {
        int n = 4 + (int)(rng() % (uint64_t)(n_max - 3));
        Tww1Sample s = random_tww1(n, rng());
        RedCutAudit a = audit_red_cuts(s.g, s.certificate);
        cuts += a.cuts_checked;
        if (!a.ok) {
            ok = false;
            io.bundle_graph("violation_" + std::to_string(i), s.g);
            if (!io.out_dir.empty())
                write_text(io.out_dir + "/violation_" + std::to_string(i) + ".seq",
                           render_sequence(s.certificate));
        }
    }
    rep["samples"] = samples;
    rep["n_max"] = n_max;
    rep["cuts_checked"] = cuts;
    rep["violations"] = !ok;
    rep["time_seconds"] = now_seconds() - t0;
    io.finish(rep, ok, "red-cut-audit");
    emit(rep, "");
    return ok ? kExitOk : kExitFail;
}

int run_lemma21_suite(const ExperimentIO& io, int n_max) {
    json rep;
    double t0 = now_seconds();
    int samples = io.samples > 0 ? io.samples : 1000;
    std::mt19937_64 rng(io.seed);
    bool ok = true;
    int checked = 0;
    for (int i = 0; i < samples; ++i) {
        int n = 4 + (int)(rng() % (uint64_t)(n_max - 3));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < 0.5) edges.emplace_back(u, v);
        ColoredGraph g(n, std::move(edges));
        std::vector<std::vector<int>> sets(3);
        for (int v = 0; v < n; ++v) {
            int w = (int)(rng() % 4);
            if (w < 3) sets[w].push_back(v);
        }
        auto &A = sets[0], &B = sets[1], &C = sets[2];
        if (A.empty() || B.empty()) continue;
        ++checked;
        std::vector<int> BC = B;
        BC.insert(BC.end(), C.begin(), C.end());

        bool mono = rank_connectivity(g, A, B) <= rank_connectivity(g, A, BC);
        bool rank_sub = cut_rank(g, A, BC) <= cut_rank(g, A, B) + cut_rank(g, A, C);

        std::vector<int> keepB, keepC;
        for (int v = 0; v < n; ++v) {
            bool inB = std::find(B.begin(), B.end(), v) != B.end();
            bool inC = std::find(C.begin(), C.end(), v) != C.end();
            if (!inC) keepB.push_back(v);
            if (!inB) keepC.push_back(v);
        }
        auto reindex = [](const std::vector<int>& S, const std::vector<int>& keep) {
            std::vector<int> out;
            for (int v : S)
                out.push_back((int)(std::find(keep.begin(), keep.end(), v) - keep.begin()));
            return out;
        };
        int lhs = rank_connectivity(g, A, BC);
        int rhs = rank_connectivity(g.induced_subgraph(keepB).first, reindex(A, keepB),
                                    reindex(B, keepB)) +
                  rank_connectivity(g.induced_subgraph(keepC).first, reindex(A, keepC),
                                    reindex(C, keepC));
        bool sub = lhs <= rhs;
        if (!(mono && sub && rank_sub)) {
            ok = false;
            io.bundle_graph("violation_" + std::to_string(i), g);
            if (!io.out_dir.empty())
                write_text(io.out_dir + "/violation_" + std::to_string(i) + ".json",
                           json({{"A", A}, {"B", B}, {"C", C}}).dump(2));
        }
    }
    rep["samples"] = samples;
    rep["checked"] = checked;
    rep["n_max"] = n_max;
    rep["violations"] = !ok;
    rep["time_seconds"] = now_seconds() - t0;
    io.finish(rep, ok, "lemma21-suite");
    emit(rep, "");
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twinwl: twin-width / Weisfeiler-Leman toolkit"};
    app.require_subcommand(1);

    std::string graph_path, graph_path2, out_path, seq_path;
    std::string left_csv, a_csv, b_csv;
    int k = 1, t_param = 3, n_param = 8, b_param = 8, s_param = 1, target = 1, beam = 24;
    int n_max = 0;
    uint64_t seed = 1, max_nodes = 20'000'000;
    double density = 0.7, time_cap = 600.0;
    std::string base_name = "k4", variant = "even", order_csv, base3wl = "petersen";
    bool prime_only = false, connectivity = false, emit_schedule = false;

    auto* gen = app.add_subcommand("gen", "generate instance families");
    gen->require_subcommand(1);
    auto add_out = [&](CLI::App* c) {
        c->add_option("-o,--out", out_path, "output file (default stdout)");
    };

    auto* gh = gen->add_subcommand("halfgraph", "half-graph H_t");
    gh->add_option("--t", t_param, "half-graph order")->required();
    gh->add_flag("--schedule", emit_schedule,
                 "emit the width-1 side schedule as a sequence file instead");
    add_out(gh);

    auto* gc = gen->add_subcommand("cfi", "CFI companion of a cubic base");
    gc->add_option("--base", base_name,
                   "named base (k4, k33, cube, petersen, mobius:<k>, prism:<k>, gp:<n>:<k>)");
    gc->add_option("--base-file", graph_path, "base graph file (overrides --base)");
    gc->add_option("--variant", variant)->check(CLI::IsMember({"even", "odd"}));
    add_out(gc);

    auto* gs = gen->add_subcommand("subdivide", "(s,<)-subdivision of a graph");
    gs->add_option("-g,--graph", graph_path)->required();
    gs->add_option("--s", s_param, "inner path length")->required();
    gs->add_option("--order", order_csv, "vertex order ranks as csv (default identity)");
    add_out(gs);

    auto* gcog = gen->add_subcommand("cograph", "random cograph (twin-width 0)");
    gcog->add_option("--n", n_param)->required();
    gcog->add_option("--seed", seed);
    add_out(gcog);

    auto* gt1 = gen->add_subcommand("tww1", "random twin-width-<=-1 graph");
    gt1->add_option("--n", n_param)->required();
    gt1->add_option("--seed", seed);
    gt1->add_flag("--prime", prime_only, "resample until prime");
    gt1->add_option("--cert", seq_path, "also write the width-1 certificate sequence");
    add_out(gt1);

    auto* gch = gen->add_subcommand("chain", "random partial half-graph");
    gch->add_option("--a", n_param)->required();
    gch->add_option("--b", b_param)->required();
    gch->add_option("--density", density);
    gch->add_option("--seed", seed);
    add_out(gch);

    auto* tww = app.add_subcommand("tww", "twin-width search and verification");
    tww->require_subcommand(1);
    auto* te = tww->add_subcommand("exact", "exact twin-width by branch and bound");
    te->add_option("-g,--graph", graph_path)->required();
    te->add_option("--max-nodes", max_nodes);
    te->add_option("--time-cap", time_cap);
    te->add_option("-o,--out", out_path);
    auto* th = tww->add_subcommand("heuristic", "beam search for a width-<=-target sequence");
    th->add_option("-g,--graph", graph_path)->required();
    th->add_option("--target", target)->required();
    th->add_option("--beam", beam);
    th->add_option("--time-cap", time_cap);
    th->add_option("-o,--out", out_path);
    auto* tv = tww->add_subcommand("verify", "replay a sequence file, report the width");
    tv->add_option("--seq", seq_path)->required();
    tv->add_option("-o,--out", out_path);

    auto* canon_cmd = app.add_subcommand("canon", "canonical form of a twin-width-<=-1 graph");
    canon_cmd->add_option("-g,--graph", graph_path)->required();
    canon_cmd->add_option("-o,--out", out_path);

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
    iso_cmd->add_option("G", graph_path)->required();
    iso_cmd->add_option("H", graph_path2)->required();
    iso_cmd->add_option("-o,--out", out_path);

    auto* rec = app.add_subcommand("recognize-tww1", "twin-width <= 1 with certificate");
    rec->add_option("-g,--graph", graph_path)->required();
    rec->add_option("-o,--out", out_path);

    auto* mt = app.add_subcommand("modtree", "modular decomposition tree");
    mt->add_option("-g,--graph", graph_path)->required();
    mt->add_option("-o,--out", out_path);

    auto* wl = app.add_subcommand("wl", "Weisfeiler-Leman refinement");
    wl->require_subcommand(1);
    auto* wlr = wl->add_subcommand("refine", "stable k-WL coloring histogram");
    wlr->add_option("-k", k)->required();
    wlr->add_option("-g,--graph", graph_path)->required();
    wlr->add_option("-o,--out", out_path);
    auto* wld = wl->add_subcommand("distinguish", "does k-WL tell two graphs apart");
    wld->add_option("-k", k)->required();
    wld->add_option("G", graph_path)->required();
    wld->add_option("H", graph_path2)->required();
    wld->add_option("-o,--out", out_path);

    auto* pb = app.add_subcommand("pebble", "bijective k-pebble game");
    pb->add_option("-k", k)->required();
    pb->add_option("G", graph_path)->required();
    pb->add_option("H", graph_path2)->required();
    pb->add_option("-o,--out", out_path);

    auto* an = app.add_subcommand("analyze", "structural checks");
    an->require_subcommand(1);
    auto* ach = an->add_subcommand("chain", "partial half-graph recognition");
    ach->add_option("-g,--graph", graph_path)->required();
    ach->add_option("--left", left_csv, "left side vertices (csv, ranges ok)")->required();
    ach->add_option("-o,--out", out_path);
    auto* ahg = an->add_subcommand("halfgraph", "largest semi-induced half-graph");
    ahg->add_option("-g,--graph", graph_path)->required();
    ahg->add_option("--left", left_csv)->required();
    ahg->add_option("-o,--out", out_path);
    auto* abq = an->add_subcommand("biclique", "largest balanced biclique + matching");
    abq->add_option("-g,--graph", graph_path)->required();
    abq->add_option("--left", left_csv)->required();
    abq->add_option("-o,--out", out_path);
    auto* ark = an->add_subcommand("rank", "GF(2) cut rank / rank connectivity");
    ark->add_option("-g,--graph", graph_path)->required();
    ark->add_option("--A", a_csv)->required();
    ark->add_option("--B", b_csv)->required();
    ark->add_flag("--connectivity", connectivity, "minimize over separating cuts");
    ark->add_option("-o,--out", out_path);
    auto* aau = an->add_subcommand("audit", "red-cut audit of a width-<=-1 sequence");
    aau->add_option("--seq", seq_path)->required();
    aau->add_option("-o,--out", out_path);

    auto* ex = app.add_subcommand("experiment", "paper experiment pipelines");
    ex->require_subcommand(1);
    ExperimentIO io;
    bool json_flag = false;
    auto add_exp_common = [&](CLI::App* c) {
        c->add_option("--seed", io.seed);
        c->add_option("--samples", io.samples);
        c->add_option("--out", io.out_dir, "directory for reports and counterexamples");
        c->add_flag("--json", json_flag, "JSON report to stdout (always on)");
    };
    auto* e1 = ex->add_subcommand("cfi-subdivision-wl", "twin-width-4 lower-bound pipeline");
    e1->add_option("--base", base_name);
    e1->add_option("-k", k);
    e1->add_option("--base3wl", base3wl, "base whose CFI pair is 3-WL-equivalent");
    add_exp_common(e1);
    auto* e2 = ex->add_subcommand("tww1-wl-dimension", "3-WL distinguishes tww-1 pairs");
    e2->add_option("--n-max", n_max);
    add_exp_common(e2);
    auto* e3 = ex->add_subcommand("red-cut-audit", "red cuts are partial half-graphs");
    e3->add_option("--n-max", n_max);
    add_exp_common(e3);
    auto* e4 = ex->add_subcommand("lemma21-suite", "rank-connectivity inequalities");
    e4->add_option("--n-max", n_max);
    add_exp_common(e4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gh->parsed()) {
            HalfGraph h = half_graph(t_param);
            if (emit_schedule) {
                std::string text = render_sequence(h.side_schedule);
                if (out_path.empty())
                    std::cout << text;
                else
                    write_text(out_path, text);
            } else {
                emit_graph(h.g, out_path);
            }
            return kExitOk;
        }
        if (gc->parsed()) {
            ColoredGraph base = graph_path.empty() ? cubic_base(base_name)
                                                   : parse_graph(read_file(graph_path));
            CfiPair pair = cfi_pair(base);
            emit_graph(variant == "even" ? pair.even : pair.odd, out_path);
            return kExitOk;
        }
        if (gs->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            emit_graph(order_csv.empty() ? subdivide(g, s_param)
                                         : subdivide(g, s_param, parse_csv_ints(order_csv)),
                       out_path);
            return kExitOk;
        }
        if (gcog->parsed()) {
            emit_graph(random_cograph(n_param, seed), out_path);
            return kExitOk;
        }
        if (gt1->parsed()) {
            Tww1Sample s = prime_only ? random_tww1_prime(n_param, seed)
                                      : random_tww1(n_param, seed);
            emit_graph(s.g, out_path);
            if (!seq_path.empty()) write_text(seq_path, render_sequence(s.certificate));
            return kExitOk;
        }
        if (gch->parsed()) {
            BipartiteView b = random_chain_graph(n_param, b_param, density, seed);
            std::string text =
                "# left 0-" + std::to_string(n_param - 1) + "\n" + render_graph(*b.parent);
            if (out_path.empty())
                std::cout << text;
            else
                write_text(out_path, text);
            return kExitOk;
        }

        if (te->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            SearchBudget budget;
            budget.max_nodes = max_nodes;
            budget.time_cap_seconds = time_cap;
            ExactResult r = exact_twinwidth(g, budget);
            json j{{"nodes", r.nodes}, {"time", r.seconds}};
            if (r.exhausted)
                j["bounds"] = {{"lower", r.lower}, {"upper", r.upper}};
            else
                j["width"] = r.width();
            if (r.certificate) j["sequence"] = merges_json(*r.certificate);
            emit(j, out_path);
            return r.exhausted ? kExitBudget : kExitOk;
        }
        if (th->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            SearchBudget budget;
            budget.beam = beam;
            budget.time_cap_seconds = time_cap;
            HeuristicResult r = heuristic_sequence(g, target, budget);
            json j{{"target", target},
                   {"found", r.found},
                   {"achieved", r.achieved},
                   {"nodes", r.nodes},
                   {"time", r.seconds}};
            if (r.sequence) j["sequence"] = merges_json(*r.sequence);
            emit(j, out_path);
            return r.sequence ? kExitOk : kExitBudget;
        }
        if (tv->parsed()) {
            ContractionSequence s = parse_sequence(read_file(seq_path));
            emit(report_json(verify_sequence(s.base, s)), out_path);
            return kExitOk;
        }

        if (canon_cmd->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            CanonicalForm c = canonical_form(g);
            emit(json{{"canonical_form", hex_bytes(c.bytes)}, {"order", c.order}}, out_path);
            return kExitOk;
        }
        if (iso_cmd->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            ColoredGraph h = parse_graph(read_file(graph_path2));
            json j;
            if (is_twinwidth_le1(g).accepted && is_twinwidth_le1(h).accepted) {
                j["method"] = "canonical-form";
                CanonicalForm cg = canonical_form(g), ch = canonical_form(h);
                bool same = cg.bytes == ch.bytes;
                j["isomorphic"] = same;
                if (same) {
                    std::vector<int> f(g.n());
                    for (int i = 0; i < g.n(); ++i) f[cg.order[i]] = ch.order[i];
                    if (!is_isomorphism(g, h, f))
                        throw Error("iso: canonical orders disagree (invariant violation)");
                    j["mapping"] = f;
                }
            } else {
                j["method"] = "vf2";
                auto f = find_isomorphism(g, h);
                j["isomorphic"] = f.has_value();
                if (f) j["mapping"] = *f;
            }
            emit(j, out_path);
            return kExitOk;
        }
        if (rec->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            Tww1Result r = is_twinwidth_le1(g);
            json j{{"twinwidth_le1", r.accepted}};
            if (r.certificate) {
                j["sequence"] = merges_json(*r.certificate);
                j["verified_width"] = verify_sequence(g, *r.certificate).width;
            }
            emit(j, out_path);
            return kExitOk;
        }
        if (mt->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            ModTree tree = mod_tree(g);
            emit(modtree_json(tree, tree.root), out_path);
            return kExitOk;
        }

        if (wlr->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            WlColoring c = wl_refine(g, k);
            json hist = json::array();
            for (auto& [color, size] : c.histogram())
                hist.push_back({{"color", color}, {"size", size}});
            emit(json{{"k", k},
                      {"rounds", c.rounds},
                      {"num_colors", c.num_colors},
                      {"histogram", hist}},
                 out_path);
            return kExitOk;
        }
        if (wld->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            ColoredGraph h = parse_graph(read_file(graph_path2));
            WlVerdict v = wl_distinguish(g, h, k);
            json j{{"k", k}, {"distinguished", v.distinguished}, {"rounds", v.rounds}};
            if (v.distinguished) {
                j["witness_color"] = *v.witness_color;
                j["count_g"] = v.count_g;
                j["count_h"] = v.count_h;
            }
            emit(j, out_path);
            return kExitOk;
        }
        if (pb->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            ColoredGraph h = parse_graph(read_file(graph_path2));
            GameVerdict v = pebble_game(g, h, k);
            json j{{"k", k}};
            if (v.winner == GameVerdict::Winner::Spoiler) {
                j["winner"] = "spoiler";
                j["spoiler_depth"] = v.spoiler_depth;
            } else {
                j["winner"] = "duplicator";
                j["surviving_positions"] = v.surviving_positions;
            }
            emit(j, out_path);
            return kExitOk;
        }

        if (ach->parsed() || ahg->parsed() || abq->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            BipartiteView b = view_from_cli(g, left_csv);
            if (ach->parsed()) {
                ChainCheck c = is_partial_half_graph(b);
                json j{{"is_chain", c.is_chain}};
                if (c.is_chain) {
                    j["embed_t"] = c.embed_t;
                    j["left_embedding"] = c.left_embedding;
                    j["right_embedding"] = c.right_embedding;
                } else if (c.counterexample) {
                    j["counterexample"] = {c.counterexample->first, c.counterexample->second};
                }
                emit(j, out_path);
            } else if (ahg->parsed()) {
                HalfGraphWitness w = max_induced_half_graph(b);
                emit(json{{"t", w.t}, {"pairs", w.pairs}}, out_path);
            } else {
                BicliqueWitness w = max_balanced_biclique_chain(b);
                MatchingResult m = max_matching(b);
                emit(json{{"t", w.t},
                          {"left", w.left},
                          {"right", w.right},
                          {"max_matching", m.size}},
                     out_path);
            }
            return kExitOk;
        }
        if (ark->parsed()) {
            ColoredGraph g = parse_graph(read_file(graph_path));
            std::vector<int> A = parse_csv_ints(a_csv), B = parse_csv_ints(b_csv);
            json j;
            if (connectivity)
                j["rank_connectivity"] = rank_connectivity(g, A, B);
            else
                j["rank"] = cut_rank(g, A, B);
            emit(j, out_path);
            return kExitOk;
        }
        if (aau->parsed()) {
            ContractionSequence s = parse_sequence(read_file(seq_path));
            RedCutAudit a = audit_red_cuts(s.base, s);
            json j{{"ok", a.ok},
                   {"steps_checked", a.steps_checked},
                   {"cuts_checked", a.cuts_checked}};
            if (a.violation)
                j["violation"] = {{"step", a.violation->step},
                                  {"P", a.violation->P},
                                  {"Q", a.violation->Q}};
            emit(j, out_path);
            return a.ok ? kExitOk : kExitFail;
        }

        if (e1->parsed()) return run_cfi_subdivision_wl(io, base_name, k, base3wl);
        if (e2->parsed()) return run_tww1_wl_dimension(io, n_max ? n_max : 30);
        if (e3->parsed()) return run_red_cut_audit(io, n_max ? n_max : 32);
        if (e4->parsed()) return run_lemma21_suite(io, n_max ? n_max : 8);
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
