#include "treepart/pattern.hpp"

#include <algorithm>

#include "treepart/errors.hpp"

namespace treepart {

namespace {

struct Search {
    const Graph& g;
    const Graph& pat;
    PatternMode mode;
    const std::vector<char>& in_sub;
    std::vector<int> order;    // pattern vertices, most-constrained first
    std::vector<int> map;      // pattern -> host or -1
    std::vector<char> used;    // host vertex taken

    bool feasible(int p, int h) {
        if (g.degree(h) < pat.degree(p)) return false;
        for (int q : pat.neighbors(p)) {
            int hq = map[q];
            if (hq >= 0 && !g.has_edge(h, hq)) return false;
        }
        if (mode == PatternMode::Induced) {
            // placed non-neighbors of p must stay non-adjacent to h
            for (int q = 0; q < pat.n(); ++q) {
                int hq = map[q];
                if (q != p && hq >= 0 && !pat.has_edge(p, q) && g.has_edge(h, hq))
                    return false;
            }
        }
        return true;
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int p = order[depth];
        for (int h = 0; h < g.n(); ++h) {
            if (used[h] || !in_sub[h] || !feasible(p, h)) continue;
            map[p] = h;
            used[h] = 1;
            if (extend(depth + 1)) return true;
            used[h] = 0;
            map[p] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> contains_pattern_within(const Graph& g, const VertexSet& sub,
                                                        const Graph& pattern, PatternMode mode,
                                                        const Config& cfg) {
    if (pattern.n() > cfg.pattern_budget)
        throw PatternTooLargeError("pattern has " + std::to_string(pattern.n()) +
                                   " vertices, budget " + std::to_string(cfg.pattern_budget));
    if (pattern.n() > static_cast<int>(sub.size())) return std::nullopt;

    std::vector<char> in_sub(g.n(), 0);
    for (int v : sub) in_sub[v] = 1;

    // Start at a maximum-degree pattern vertex, then repeatedly take the
    // unplaced vertex with most placed neighbors (ties: higher degree, then
    // lower id); keeps the partial map connected where the pattern allows.
    std::vector<int> order;
    std::vector<char> placed(pattern.n(), 0);
    for (int step = 0; step < pattern.n(); ++step) {
        int best = -1, best_anchor = -1, best_deg = -1;
        for (int p = 0; p < pattern.n(); ++p) {
            if (placed[p]) continue;
            int anchored = 0;
            for (int q : pattern.neighbors(p)) anchored += placed[q];
            int deg = pattern.degree(p);
            if (anchored > best_anchor || (anchored == best_anchor && deg > best_deg)) {
                best = p;
                best_anchor = anchored;
                best_deg = deg;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }

    Search s{g, pattern, mode, in_sub, std::move(order),
             std::vector<int>(pattern.n(), -1), std::vector<char>(g.n(), 0)};
    if (s.extend(0)) return s.map;
    return std::nullopt;
}

std::optional<std::vector<int>> contains_pattern(const Graph& g, const Graph& pattern,
                                                 PatternMode mode, const Config& cfg) {
    return contains_pattern_within(g, all_vertices(g), pattern, mode, cfg);
}

}  // namespace treepart
