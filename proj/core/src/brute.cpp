#include "treepart/brute.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "treepart/errors.hpp"
#include "treepart/treewidth.hpp"

namespace treepart {

namespace {

// Minimal quotient of a labelled partition: parts joined iff an edge
// crosses. If any quotient of treewidth <= c exists for the partition, this
// one qualifies.
Graph minimal_quotient(const Graph& g, const std::vector<int>& part_of, int parts) {
    Graph h(parts);
    for (auto [u, v] : g.edges())
        if (part_of[u] != part_of[v]) h.add_edge(part_of[u], part_of[v]);
    return h;
}

// Enumerates restricted-growth strings with part sizes capped at `cap`;
// calls cb(part_of, part_count); cb returns false to stop.
template <typename Cb>
void for_each_capped_partition(int n, int cap, const Cb& cb) {
    std::vector<int> part_of(n, 0), size_of(n, 0);
    bool stopped = false;
    std::function<void(int, int)> rec = [&](int v, int parts) {
        if (stopped) return;
        if (v == n) {
            if (!cb(part_of, parts)) stopped = true;
            return;
        }
        for (int p = 0; p <= parts && !stopped; ++p) {
            if (p < parts && size_of[p] >= cap) continue;
            part_of[v] = p;
            ++size_of[p];
            rec(v + 1, std::max(parts, p + 1));
            --size_of[p];
        }
    };
    if (n == 0) {
        cb(part_of, 0);
        return;
    }
    rec(0, 0);
}

struct TwMemo {
    std::map<std::vector<std::pair<int, int>>, int> cache;
    const Config& cfg;

    int width(const Graph& h) {
        auto key = h.edges();
        key.emplace_back(h.n(), h.n());  // disambiguate isolated-vertex counts
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        int w = exact_treewidth(h, cfg).width;
        cache.emplace(std::move(key), w);
        return w;
    }
};

}  // namespace

int brute_min_tpw(const Graph& g, int c, const Config& cfg) {
    if (g.n() > cfg.brute_n_budget)
        throw TooLargeError("brute_min_tpw budget is n <= " +
                            std::to_string(cfg.brute_n_budget));
    if (g.n() == 0) return 0;
    TwMemo memo{{}, cfg};
    for (int cap = 1; cap <= g.n(); ++cap) {
        bool found = false;
        for_each_capped_partition(g.n(), cap, [&](const std::vector<int>& part_of, int parts) {
            Graph h = minimal_quotient(g, part_of, parts);
            if (memo.width(h) <= c) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return cap;
    }
    throw Error("internal: no partition found");
}

CTreePartition brute_min_tpw_witness(const Graph& g, int c, const Config& cfg) {
    if (g.n() > cfg.brute_n_budget)
        throw TooLargeError("brute_min_tpw budget is n <= " +
                            std::to_string(cfg.brute_n_budget));
    CTreePartition best;
    if (g.n() == 0) {
        best.c = c;
        return best;
    }
    TwMemo memo{{}, cfg};
    for (int cap = 1; cap <= g.n(); ++cap) {
        std::optional<std::vector<int>> witness;
        for_each_capped_partition(g.n(), cap, [&](const std::vector<int>& part_of, int parts) {
            Graph h = minimal_quotient(g, part_of, parts);
            if (memo.width(h) <= c) {
                witness = part_of;
                return false;
            }
            return true;
        });
        if (witness) {
            int parts = *std::max_element(witness->begin(), witness->end()) + 1;
            Graph h = minimal_quotient(g, *witness, parts);
            CTreePartition p = finalize_partition(std::move(*witness), h,
                                                  exact_treewidth(h, cfg).td, c);
            return p;
        }
    }
    throw Error("internal: no partition found");
}

RainbowAuditResult rainbow_clique_audit(const Graph& g, int c, int l, const Config& cfg) {
    if (g.n() > 8 || g.n() > cfg.brute_n_budget)
        throw TooLargeError("rainbow_clique_audit budget is n <= 8");
    // All (c+1)-cliques up front.
    std::vector<VertexSet> cliques;
    std::vector<int> pick;
    std::function<void(int)> collect = [&](int start) {
        if (static_cast<int>(pick.size()) == c + 1) {
            cliques.push_back(pick);
            return;
        }
        for (int v = start; v < g.n(); ++v) {
            bool ok = true;
            for (int u : pick) ok &= g.has_edge(u, v);
            if (!ok) continue;
            pick.push_back(v);
            collect(v + 1);
            pick.pop_back();
        }
    };
    collect(0);

    RainbowAuditResult res;
    if (g.n() == 0) return res;

    for_each_capped_partition(g.n(), l, [&](const std::vector<int>& part_of, int) {
        for (const auto& clique : cliques) {
            std::vector<int> parts;
            for (int v : clique) parts.push_back(part_of[v]);
            std::sort(parts.begin(), parts.end());
            if (std::adjacent_find(parts.begin(), parts.end()) == parts.end()) return true;
        }
        res.pass = false;
        res.counterexample = part_of;
        return false;
    });
    return res;
}

}  // namespace treepart
