#include "twinwl/tww_search.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_set>

namespace twinwl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string partition_key(const Trigraph& t) {
    auto ids = t.live_ids();
    std::vector<std::vector<int>> parts;
    parts.reserve(ids.size());
    for (int id : ids) parts.push_back(t.part(id));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& p : parts) {
        for (int v : p) {
            key += std::to_string(v);
            key += ',';
        }
        key += '|';
    }
    return key;
}

struct Search {
    const ColoredGraph& g;
    const SearchBudget& budget;
    Clock::time_point t0 = Clock::now();
    uint64_t nodes = 0;
    bool out_of_budget = false;
    std::unordered_set<std::string> refuted;  // states with no completion <= target

    Search(const ColoredGraph& g_, const SearchBudget& b) : g(g_), budget(b) {}

    bool budget_ok() {
        if (out_of_budget) return false;
        if (++nodes > budget.max_nodes || ((nodes & 0x3ff) == 0 && seconds_since(t0) > budget.time_cap_seconds))
            out_of_budget = true;
        return !out_of_budget;
    }

    // Is there a completion from t with every intermediate red degree <= target?
    bool decide(const Trigraph& t, int target, std::vector<std::pair<int, int>>& merges) {
        if (t.num_live() <= 1) return true;
        if (!budget_ok()) return false;
        std::string key = partition_key(t);
        if (refuted.count(key)) return false;

        auto ids = t.live_ids();
        // try low-red merges first
        std::vector<std::tuple<int, int, int>> cands;
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j)
                cands.emplace_back(0, ids[i], ids[j]);
        std::vector<Trigraph> children;
        children.reserve(cands.size());
        for (auto& [score, a, b] : cands) {
            Trigraph child = t.contract(a, b);
            score = child.max_red_degree();
            children.push_back(std::move(child));
        }
        std::vector<int> order(cands.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return std::get<0>(cands[x]) < std::get<0>(cands[y]);
        });
        for (int i : order) {
            if (std::get<0>(cands[i]) > target) continue;
            merges.emplace_back(std::get<1>(cands[i]), std::get<2>(cands[i]));
            if (decide(children[i], target, merges)) return true;
            merges.pop_back();
            if (out_of_budget) return false;
        }
        if (!out_of_budget) refuted.insert(std::move(key));
        return false;
    }
};

}  // namespace

ExactResult exact_twinwidth(const ColoredGraph& g, const SearchBudget& budget) {
    ExactResult res;
    auto t0 = Clock::now();
    if (g.n() <= 1) {
        res.upper = res.lower = 0;
        res.certificate = ContractionSequence{g, {}};
        res.seconds = seconds_since(t0);
        return res;
    }
    for (int target = 0; target < g.n(); ++target) {
        Search s(g, budget);
        s.t0 = t0;
        s.nodes = res.nodes;
        std::vector<std::pair<int, int>> merges;
        bool ok = s.decide(Trigraph::from_graph(g), target, merges);
        res.nodes = s.nodes;
        res.seconds = seconds_since(t0);
        if (ok) {
            res.lower = res.upper = target;
            res.certificate = ContractionSequence{g, std::move(merges)};
            return res;
        }
        if (s.out_of_budget) {
            res.exhausted = true;
            res.lower = target;  // widths below target are fully refuted
            auto h = heuristic_sequence(g, g.n(), SearchBudget{budget.max_nodes, 5.0, 1});
            if (h.sequence) {
                res.upper = h.achieved;
                res.certificate = h.sequence;
            }
            return res;
        }
        res.lower = target + 1;
    }
    throw Error("exact_twinwidth: unreachable (width < n always exists)");
}

namespace {

struct BeamState {
    Trigraph t;
    std::vector<std::pair<int, int>> merges;
    int width = 0;      // max red degree seen so far
    int red_edges = 0;  // current trigraph
};

// Candidate merge pairs: live parts within distance 2 (black or red), with a
// cross-component fallback so disconnected graphs still contract.
std::vector<std::pair<int, int>> candidate_pairs(const Trigraph& t) {
    auto ids = t.live_ids();
    std::vector<std::pair<int, int>> out;
    if (ids.size() < 2) return out;
    int cap = (int)t.black_row(ids[0]).size();
    for (int a : ids) {
        Bitset reach = t.black_row(a) | t.red_row(a);
        Bitset two = reach;
        reach.for_each([&](int m) { two |= t.black_row(m) | t.red_row(m); });
        two.reset(a);
        two.for_each([&](int b) {
            if (b > a) out.emplace_back(a, b);
        });
    }
    // components fallback: link consecutive component representatives
    std::vector<int> repr;
    Bitset visited(cap);
    for (int s : ids) {
        if (visited.test(s)) continue;
        repr.push_back(s);
        std::vector<int> stack{s};
        visited.set(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            (t.black_row(x) | t.red_row(x)).for_each([&](int y) {
                if (!visited.test(y)) {
                    visited.set(y);
                    stack.push_back(y);
                }
            });
        }
    }
    for (size_t i = 1; i < repr.size(); ++i)
        out.emplace_back(std::min(repr[0], repr[i]), std::max(repr[0], repr[i]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

HeuristicResult heuristic_sequence(const ColoredGraph& g, int target,
                                   const SearchBudget& budget) {
    HeuristicResult res;
    auto t0 = Clock::now();
    if (g.n() <= 1) {
        res.found = true;
        res.achieved = 0;
        res.sequence = ContractionSequence{g, {}};
        res.seconds = seconds_since(t0);
        return res;
    }
    int beam_width = std::max(1, budget.beam);

    std::vector<BeamState> beam;
    beam.push_back({Trigraph::from_graph(g), {}, 0, 0});
    for (int level = 0; level < g.n() - 1; ++level) {
        // (width, red_edges, merged size, a, b, state index)
        std::vector<std::tuple<int, int, int, int, int, int>> scored;
        for (int si = 0; si < (int)beam.size(); ++si) {
            const Trigraph& t = beam[si].t;
            for (auto [a, b] : candidate_pairs(t)) {
                ++res.nodes;
                Bitset nr = t.black_row(a) ^ t.black_row(b);
                nr |= t.red_row(a);
                nr |= t.red_row(b);
                nr.reset(a);
                nr.reset(b);
                int merged_deg = nr.count();
                int maxdeg = std::max(beam[si].width, merged_deg);
                int delta_edges = merged_deg - t.red_row(a).count() - t.red_row(b).count();
                // neighbors can gain at most the one new red edge
                nr.for_each([&](int x) {
                    int d = t.red_row(x).count() + 1 - t.red(x, a) - t.red(x, b);
                    maxdeg = std::max(maxdeg, d);
                });
                if (t.red(a, b)) delta_edges += 1;
                scored.emplace_back(maxdeg, beam[si].red_edges + delta_edges,
                                    (int)(t.part(a).size() + t.part(b).size()), a, b, si);
            }
        }
        if (scored.empty()) break;
        std::sort(scored.begin(), scored.end());

        std::vector<BeamState> next;
        std::unordered_set<std::string> seen;
        for (auto& [w, re, sz, a, b, si] : scored) {
            if ((int)next.size() >= beam_width) break;
            Trigraph t2 = beam[si].t.contract(a, b);
            std::string key = partition_key(t2);
            if (!seen.insert(key).second) continue;
            BeamState st{std::move(t2), beam[si].merges, 0, 0};
            st.merges.emplace_back(a, b);
            st.width = std::max(beam[si].width, st.t.max_red_degree());
            st.red_edges = st.t.red_edge_count();
            next.push_back(std::move(st));
        }
        beam = std::move(next);
        if (seconds_since(t0) > budget.time_cap_seconds) break;
    }

    const BeamState* best = nullptr;
    for (const auto& st : beam)
        if (st.t.num_live() == 1 && (!best || st.width < best->width)) best = &st;
    res.seconds = seconds_since(t0);
    if (!best) return res;  // budget cut the run short
    res.achieved = best->width;
    res.sequence = ContractionSequence{g, best->merges};
    res.found = best->width <= target;
    return res;
}

}  // namespace twinwl
