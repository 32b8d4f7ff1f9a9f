#include "treepart/ep.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treepart/errors.hpp"

namespace treepart {

namespace {

class EdgeFamily final : public SubgraphFamily {
public:
    std::optional<VertexSet> find_member(const Graph& g, const VertexSet& sub) const override {
        std::vector<char> in_sub(g.n(), 0);
        for (int v : sub) in_sub[v] = 1;
        for (int u : sub)
            for (int w : g.neighbors(u))
                if (w > u && in_sub[w]) return VertexSet{u, w};
        return std::nullopt;
    }

    bool for_each_minimal_member(const Graph& g, const VertexSet& sub,
                                 const std::function<bool(const VertexSet&)>& cb,
                                 std::int64_t& budget) const override {
        std::vector<char> in_sub(g.n(), 0);
        for (int v : sub) in_sub[v] = 1;
        for (int u : sub)
            for (int w : g.neighbors(u)) {
                if (w <= u || !in_sub[w]) continue;
                if (--budget < 0) return false;
                if (!cb(VertexSet{u, w})) return false;
            }
        return true;
    }
};

class ConnectorFamily final : public SubgraphFamily {
public:
    explicit ConnectorFamily(std::vector<VertexSet> targets) : targets_(std::move(targets)) {}

    std::optional<VertexSet> find_member(const Graph& g, const VertexSet& sub) const override {
        auto tgts = clipped_targets(sub);
        if (!tgts) return std::nullopt;
        for (const auto& comp : components_within(g, sub)) {
            bool hits_all = true;
            for (const auto& t : *tgts) hits_all &= sets_intersect(comp, t);
            if (hits_all) return minimalize(g, comp, *tgts);
        }
        return std::nullopt;
    }

    bool for_each_minimal_member(const Graph& g, const VertexSet& sub,
                                 const std::function<bool(const VertexSet&)>& cb,
                                 std::int64_t& budget) const override {
        auto tgts = clipped_targets(sub);
        if (!tgts) return true;
        // Every minimal member is a minimal connected superset of some
        // terminal tuple, one terminal per target.
        std::set<VertexSet> seen_terminals, emitted;
        std::vector<size_t> idx(tgts->size(), 0);
        while (true) {
            VertexSet t0;
            for (size_t i = 0; i < tgts->size(); ++i) t0.push_back((*tgts)[i][idx[i]]);
            t0 = sorted_unique(std::move(t0));
            if (seen_terminals.insert(t0).second) {
                std::set<VertexSet> visited;
                if (!grow(g, sub, t0, t0, visited, emitted, cb, budget)) return false;
            }
            size_t i = tgts->size();
            while (i > 0 && idx[i - 1] + 1 == (*tgts)[i - 1].size()) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < tgts->size(); ++j) idx[j] = 0;
        }
        return true;
    }

private:
    std::optional<std::vector<VertexSet>> clipped_targets(const VertexSet& sub) const {
        std::vector<VertexSet> tgts;
        for (const auto& t : targets_) {
            VertexSet clip = set_intersection_of(t, sub);
            if (clip.empty()) return std::nullopt;  // nothing can meet an empty target
            tgts.push_back(std::move(clip));
        }
        return tgts;
    }

    static bool connects(const Graph& g, const VertexSet& vs, const VertexSet& t0) {
        auto comps = components_within(g, vs);
        for (const auto& comp : comps)
            if (set_contains(comp, t0[0])) {
                for (int t : t0)
                    if (!set_contains(comp, t)) return false;
                return true;
            }
        return false;
    }

    static VertexSet minimalize(const Graph& g, VertexSet member,
                                const std::vector<VertexSet>& tgts) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = static_cast<int>(member.size()) - 1; i >= 0; --i) {
                VertexSet smaller = member;
                smaller.erase(smaller.begin() + i);
                if (smaller.empty()) continue;
                auto comps = components_within(g, smaller);
                if (comps.size() != 1) continue;
                bool hits_all = true;
                for (const auto& t : tgts) hits_all &= sets_intersect(comps[0], t);
                if (hits_all) {
                    member = std::move(smaller);
                    changed = true;
                    break;
                }
            }
        }
        return member;
    }

    bool grow(const Graph& g, const VertexSet& sub, const VertexSet& t0, const VertexSet& cur,
              std::set<VertexSet>& visited, std::set<VertexSet>& emitted,
              const std::function<bool(const VertexSet&)>& cb, std::int64_t& budget) const {
        if (--budget < 0) return false;
        if (!visited.insert(cur).second) return true;
        auto comps = components_within(g, cur);
        const VertexSet* comp0 = nullptr;
        for (const auto& comp : comps)
            if (set_contains(comp, t0[0])) comp0 = &comp;
        bool connected = true;
        for (int t : t0) connected &= set_contains(*comp0, t);
        if (connected) {
            // cur is a member iff it equals comp0 plus nothing stray; stray
            // vertices mean a non-minimal state reached, skip it.
            if (cur == *comp0 && is_minimal(g, cur, t0) && emitted.insert(cur).second)
                return cb(cur);
            return true;
        }
        VertexSet frontier = set_intersection_of(neighborhood(g, *comp0), sub);
        frontier = set_difference_of(frontier, cur);
        for (int v : frontier) {
            VertexSet next = cur;
            next.insert(std::lower_bound(next.begin(), next.end(), v), v);
            if (!grow(g, sub, t0, next, visited, emitted, cb, budget)) return false;
        }
        return true;
    }

    static bool is_minimal(const Graph& g, const VertexSet& member, const VertexSet& t0) {
        for (int v : member) {
            if (set_contains(t0, v)) continue;
            VertexSet smaller = set_difference_of(member, {v});
            if (connects(g, smaller, t0)) return false;
        }
        return true;
    }

    std::vector<VertexSet> targets_;
};

}  // namespace

std::unique_ptr<SubgraphFamily> edge_family() { return std::make_unique<EdgeFamily>(); }

std::unique_ptr<SubgraphFamily> connector_family(std::vector<VertexSet> targets) {
    return std::make_unique<ConnectorFamily>(std::move(targets));
}

std::vector<VertexSet> greedy_packing(const Graph& g, const VertexSet& sub,
                                      const SubgraphFamily& fam) {
    std::vector<VertexSet> packing;
    VertexSet remaining = sub;
    while (auto m = fam.find_member(g, remaining)) {
        remaining = set_difference_of(remaining, *m);
        packing.push_back(std::move(*m));
    }
    return packing;
}

namespace {

struct PackingSearch {
    const Graph& g;
    const SubgraphFamily& fam;
    std::int64_t& budget;
    std::map<VertexSet, int> memo;  // exact packing numbers

    int nu_capped(const VertexSet& sub, int cap) {
        if (cap <= 0) return 0;
        if (auto it = memo.find(sub); it != memo.end()) return std::min(it->second, cap);
        if (--budget < 0) throw PackingBudgetError("packing search out of branch nodes");
        if (!fam.find_member(g, sub)) {
            memo.emplace(sub, 0);
            return 0;
        }
        int best = 0;
        bool complete = fam.for_each_minimal_member(
            g, sub,
            [&](const VertexSet& m) {
                best = std::max(best, 1 + nu_capped(set_difference_of(sub, m), cap - 1));
                return best < cap;  // stop once the cap is reached
            },
            budget);
        if (budget < 0) throw PackingBudgetError("packing search out of branch nodes");
        if (complete && best < cap) memo.emplace(sub, best);
        return best;
    }

    // Rebuilds a packing of exactly `target` members (target <= nu(sub)).
    std::vector<VertexSet> extract(const VertexSet& sub, int target) {
        std::vector<VertexSet> out;
        VertexSet cur = sub;
        while (target > 0) {
            VertexSet chosen;
            bool complete = fam.for_each_minimal_member(
                g, cur,
                [&](const VertexSet& m) {
                    if (1 + nu_capped(set_difference_of(cur, m), target - 1) >= target) {
                        chosen = m;
                        return false;
                    }
                    return true;
                },
                budget);
            if (budget < 0) throw PackingBudgetError("packing search out of branch nodes");
            if (complete && chosen.empty()) throw Error("internal: packing extraction failed");
            out.push_back(chosen);
            cur = set_difference_of(cur, chosen);
            --target;
        }
        return out;
    }
};

}  // namespace

std::pair<int, std::vector<VertexSet>> packing_number(const Graph& g, const VertexSet& sub,
                                                      const SubgraphFamily& fam, int cap,
                                                      std::int64_t& budget) {
    PackingSearch search{g, fam, budget, {}};
    int v = search.nu_capped(sub, cap);
    std::vector<VertexSet> pack;
    if (v > 0) pack = search.extract(sub, v);
    return {v, std::move(pack)};
}

namespace {

// Restriction of td to g[sub] with empty bags contracted away, so every
// remaining bag meets sub and components of sub minus any bag shrink.
TreeDecomposition restrict_and_clean(const TreeDecomposition& td, const VertexSet& sub) {
    TreeDecomposition r = td.restricted(sub);
    int t = r.node_count();
    std::vector<char> keep(t, 0);
    int kept = 0;
    for (int x = 0; x < t; ++x)
        if (!r.bags[x].empty()) {
            keep[x] = 1;
            ++kept;
        }
    if (kept == 0) return {};
    // Union-find: empty nodes merge into an arbitrary tree neighbor until
    // only kept nodes remain; surviving edges connect their representatives.
    std::vector<int> parent(t);
    for (int x = 0; x < t; ++x) parent[x] = x;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : r.tree) {
            int ra = find(a), rb = find(b);
            if (ra == rb) continue;
            if (!keep[ra] && (keep[rb] || rb < ra)) {
                parent[ra] = rb;
                changed = true;
            } else if (!keep[rb]) {
                parent[rb] = ra;
                changed = true;
            }
        }
    }
    std::vector<int> remap(t, -1);
    TreeDecomposition out;
    for (int x = 0; x < t; ++x)
        if (keep[x]) {
            remap[x] = out.node_count();
            out.bags.push_back(r.bags[x]);
        }
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : r.tree) {
        int ra = remap[find(a)], rb = remap[find(b)];
        if (ra != rb && ra >= 0 && rb >= 0)
            edges.insert({std::min(ra, rb), std::max(ra, rb)});
    }
    out.tree.assign(edges.begin(), edges.end());
    return out;
}

struct EpRun {
    const Graph& g;
    const TreeDecomposition& td;
    const SubgraphFamily& fam;
    bool exact;
    std::int64_t& budget;

    struct Outcome {
        bool is_packing;
        std::vector<VertexSet> packing;
        VertexSet hitting;  // vertex-level hitting set within the call's sub
    };

    int nu_estimate(const VertexSet& sub, int cap) {
        if (exact) return packing_number(g, sub, fam, cap, budget).first;
        auto greedy = greedy_packing(g, sub, fam);
        return std::min<int>(cap, static_cast<int>(greedy.size()));
    }

    Outcome run(const VertexSet& sub, int l) {
        if (l == 0) {
            if (auto m = fam.find_member(g, sub)) return {true, {*m}, {}};
            return {false, {}, {}};
        }
        if (exact) {
            auto [v, pack] = packing_number(g, sub, fam, l + 1, budget);
            if (v >= l + 1) return {true, std::move(pack), {}};
        } else {
            auto pack = greedy_packing(g, sub, fam);
            if (static_cast<int>(pack.size()) >= l + 1) {
                pack.resize(l + 1);
                return {true, std::move(pack), {}};
            }
        }

        TreeDecomposition sub_td = restrict_and_clean(td, sub);
        if (sub_td.node_count() == 0) {
            if (fam.find_member(g, sub)) throw Error("internal: member outside all bags");
            return {false, {}, {}};
        }
        auto adj = sub_td.tree_adjacency();
        int t = sub_td.node_count();

        // Orient each tree edge away from the side with small packing
        // number; a sink bag then splits sub into light components.
        std::vector<int> out_deg(t, 0);
        std::vector<VertexSet> side_sets;
        for (auto [a, b] : sub_td.tree) {
            VertexSet side = side_of(sub_td, adj, a, b);  // bags on a's side minus bag b
            int cap = l / 2 + 1;
            int nu_a = nu_estimate(side, cap);
            if (2 * nu_a <= l)
                ++out_deg[a];
            else
                ++out_deg[b];
        }
        int sink = -1;
        for (int x = 0; x < t && sink < 0; ++x)
            if (out_deg[x] == 0) sink = x;
        if (sink < 0) throw Error("internal: no sink in orientation");

        VertexSet hitting = sub_td.bags[sink];
        VertexSet rest = set_difference_of(sub, sub_td.bags[sink]);
        for (const auto& comp : components_within(g, rest)) {
            int lj = nu_estimate(comp, l / 2 + 1);
            if (exact && 2 * lj > l)
                throw Error("internal: sink component packs more than l/2");
            lj = std::min(lj, l / 2);
            while (true) {
                Outcome child = run(comp, lj);
                if (!child.is_packing) {
                    hitting = set_union_of(hitting, child.hitting);
                    break;
                }
                if (exact) throw Error("internal: exact child returned a packing");
                lj = static_cast<int>(child.packing.size());  // retry with a bigger target
            }
        }
        return {false, {}, std::move(hitting)};
    }

    // Vertices of sub covered by bags strictly on a's side of edge (a,b),
    // minus bag b.
    VertexSet side_of(const TreeDecomposition& sub_td,
                      const std::vector<std::vector<int>>& adj, int a, int b) {
        std::vector<char> seen(sub_td.node_count(), 0);
        seen[b] = 1;
        std::vector<int> stack{a};
        seen[a] = 1;
        VertexSet acc;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            acc = set_union_of(acc, sub_td.bags[x]);
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        return set_difference_of(acc, sub_td.bags[b]);
    }
};

}  // namespace

EPResult ep_hitting_set_within(const Graph& g, const TreeDecomposition& td,
                               const VertexSet& sub, const SubgraphFamily& fam, int l,
                               EpMode mode, const Config& cfg) {
    if (l < 0) throw InvalidSpecError("ep_hitting_set needs l >= 0");
    auto attempt = [&](bool exact) {
        std::int64_t budget = cfg.ep_node_budget;
        EpRun run{g, td, fam, exact, budget};
        auto outcome = run.run(sub, l);
        EPResult res;
        res.is_packing = outcome.is_packing;
        res.packing = std::move(outcome.packing);
        res.hitting_set = std::move(outcome.hitting);
        res.bound_verified = exact;
        return res;
    };
    EPResult res;
    switch (mode) {
        case EpMode::Exact:
            res = attempt(true);
            break;
        case EpMode::Greedy:
            res = attempt(false);
            break;
        case EpMode::Auto:
            try {
                res = attempt(true);
            } catch (const PackingBudgetError&) {
                res = attempt(false);
            }
            break;
    }
    if (!res.is_packing) {
        // Certification: no member may survive the hitting set.
        if (fam.find_member(g, set_difference_of(sub, res.hitting_set)))
            throw Error("internal: hitting set fails certification");
    }
    return res;
}

EPResult ep_hitting_set(const Graph& g, const TreeDecomposition& td, const SubgraphFamily& fam,
                        int l, EpMode mode, const Config& cfg) {
    return ep_hitting_set_within(g, td, all_vertices(g), fam, l, mode, cfg);
}

}  // namespace treepart
