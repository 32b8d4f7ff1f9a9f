#include "treepart/class_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "treepart/errors.hpp"

namespace treepart {

namespace {

class DegreeOracle final : public QOracle {
public:
    explicit DegreeOracle(const Graph& g) : g_(g), delta_(g.max_degree()) {}

    int arity() const override { return 1; }

    std::int64_t bound(int t) const override {
        return static_cast<std::int64_t>(delta_) * t;
    }

    QWitness answer(const DisjointednessQuery& q) const override {
        if (q.c() != 1) throw UnsupportedBlockError("degree oracle has arity 1");
        VertexSet Q = set_intersection_of(neighborhood(g_, q.residuals[0]), q.x);
        return finish_witness(g_, q, std::move(Q));
    }

private:
    Graph g_;
    int delta_;
};

class EpOracle final : public QOracle {
public:
    EpOracle(const Graph& g, const TreeDecomposition& td, int arity, EpMode mode,
             const Config& cfg)
        : g_(g), td_(td), arity_(arity), mode_(mode), cfg_(cfg) {
        if (arity < 1) throw InvalidSpecError("oracle arity must be >= 1");
        width_ = validate_td(g_, td_);
    }

    int arity() const override { return arity_; }

    std::int64_t bound(int t) const override {
        std::int64_t formula = 0;
        if (max_packing_ > 0) {
            double lg = std::log2(static_cast<double>(max_packing_) + 1.0);
            formula = static_cast<std::int64_t>(
                std::ceil((width_ + 1.0) * arity_ * t * max_packing_ * lg));
        }
        // Greedy-mode answers may outgrow the formula; the declared bound is
        // measured, so it must dominate everything already returned.
        return std::max(formula, max_answer_);
    }

    QWitness answer(const DisjointednessQuery& q) const override {
        if (q.c() != arity_) throw UnsupportedBlockError("query arity mismatch");
        for (const auto& r : q.residuals)
            if (r.empty()) return finish_witness(g_, q, {});

        std::vector<VertexSet> targets;
        for (const auto& r : q.residuals)
            targets.push_back(set_intersection_of(neighborhood(g_, r), q.x));
        auto fam = connector_family(std::move(targets));

        // Measured packing size seeds the packing/covering split; if the
        // split still finds a bigger packing, grow and retry.
        int l = static_cast<int>(greedy_packing(g_, q.x, *fam).size());
        while (true) {
            EPResult res = ep_hitting_set_within(g_, td_, q.x, *fam, l, mode_, cfg_);
            if (!res.is_packing) {
                max_packing_ = std::max(max_packing_, static_cast<std::int64_t>(l));
                max_answer_ = std::max(max_answer_,
                                       static_cast<std::int64_t>(res.hitting_set.size()));
                return finish_witness(g_, q, std::move(res.hitting_set));
            }
            l = static_cast<int>(res.packing.size());
        }
    }

private:
    Graph g_;
    TreeDecomposition td_;
    int arity_;
    EpMode mode_;
    Config cfg_;
    int width_ = 0;
    mutable std::int64_t max_packing_ = 0;
    mutable std::int64_t max_answer_ = 0;
};

class K2tOracle final : public QOracle {
public:
    explicit K2tOracle(const Graph& g) : g_(g) {}

    int arity() const override { return 2; }

    std::int64_t bound(int) const override { return max_cut_; }

    QWitness answer(const DisjointednessQuery& q) const override {
        if (q.c() != 2) throw UnsupportedBlockError("k2t oracle has arity 2");
        for (const auto& r : q.residuals)
            if (r.empty()) return finish_witness(g_, q, {});
        VertexSet a1 = set_intersection_of(neighborhood(g_, q.residuals[0]), q.x);
        VertexSet a2 = set_intersection_of(neighborhood(g_, q.residuals[1]), q.x);
        VertexSet Q = min_vertex_separator(g_, q.x, a1, a2);
        max_cut_ = std::max(max_cut_, static_cast<std::int64_t>(Q.size()));
        return finish_witness(g_, q, std::move(Q));
    }

private:
    Graph g_;
    mutable std::int64_t max_cut_ = 0;
};

}  // namespace

std::unique_ptr<QOracle> degree_oracle(const Graph& g) {
    return std::make_unique<DegreeOracle>(g);
}

std::unique_ptr<QOracle> minor_free_oracle(const Graph& g, const TreeDecomposition& td, int s,
                                           EpMode mode, const Config& cfg) {
    return std::make_unique<EpOracle>(g, td, s, mode, cfg);
}

std::unique_ptr<QOracle> topo_minor_oracle(const Graph& g, const TreeDecomposition& td, int p,
                                           EpMode mode, const Config& cfg) {
    return std::make_unique<EpOracle>(g, td, p, mode, cfg);
}

std::unique_ptr<QOracle> k2t_menger_oracle(const Graph& g) {
    return std::make_unique<K2tOracle>(g);
}

VertexSet min_vertex_separator(const Graph& g, const VertexSet& sub, const VertexSet& a,
                               const VertexSet& b) {
    if (a.empty() || b.empty()) return {};
    // Split each sub-vertex into in/out nodes with a unit arc; source feeds
    // every a-vertex, every b-vertex drains to the sink. Vertices in a or b
    // are cuttable, so they keep their unit arcs.
    int n = g.n();
    int source = 2 * n, sink = 2 * n + 1;
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(2 * n + 2);
    auto add = [&](int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    };
    std::vector<char> in_sub(n, 0);
    for (int v : sub) in_sub[v] = 1;
    const int inf = static_cast<int>(sub.size()) + 1;
    for (int v : sub) add(2 * v, 2 * v + 1, 1);
    for (int v : sub)
        for (int w : g.neighbors(v))
            if (in_sub[w]) add(2 * v + 1, 2 * w, inf);
    for (int v : a) add(source, 2 * v, inf);
    for (int v : b) add(2 * v + 1, sink, inf);

    auto bfs_augment = [&]() {
        std::vector<int> pred(out.size(), -1);
        std::vector<char> seen(out.size(), 0);
        std::queue<int> qq;
        qq.push(source);
        seen[source] = 1;
        while (!qq.empty() && !seen[sink]) {
            int v = qq.front();
            qq.pop();
            for (int arc : out[v]) {
                if (arcs[arc].cap <= 0) continue;
                int w = arcs[arc].to;
                if (seen[w]) continue;
                seen[w] = 1;
                pred[w] = arc;
                qq.push(w);
            }
        }
        if (!seen[sink]) return false;
        for (int v = sink; v != source;) {
            int arc = pred[v];
            arcs[arc].cap -= 1;
            arcs[arc ^ 1].cap += 1;
            v = arcs[arc ^ 1].to;
        }
        return true;
    };
    int flow = 0;
    while (bfs_augment()) {
        if (++flow > inf) throw Error("internal: unbounded separator flow");
    }

    // Min cut: sub-vertices whose in-node is reachable in the residual but
    // whose out-node is not.
    std::vector<char> reach(out.size(), 0);
    std::queue<int> qq;
    qq.push(source);
    reach[source] = 1;
    while (!qq.empty()) {
        int v = qq.front();
        qq.pop();
        for (int arc : out[v]) {
            if (arcs[arc].cap <= 0) continue;
            int w = arcs[arc].to;
            if (!reach[w]) {
                reach[w] = 1;
                qq.push(w);
            }
        }
    }
    VertexSet cut;
    for (int v : sub)
        if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
}

AssignTrickResult assign_trick(const Graph& g, const VertexSet& a,
                               const std::vector<VertexSet>& b_packing) {
    for (size_t i = 0; i < b_packing.size(); ++i)
        for (size_t j = i + 1; j < b_packing.size(); ++j)
            if (sets_intersect(b_packing[i], b_packing[j]))
                throw InvalidSpecError("assign_trick: packing members overlap");

    AssignTrickResult res;
    res.a_vertices = a;
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) pos[a[i]] = i;

    // Members by lowest contained vertex.
    std::vector<int> order(b_packing.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return b_packing[x].front() < b_packing[y].front();
    });

    std::set<std::pair<int, int>> occupied;
    res.contracted = g.induced(a);
    for (int idx : order) {
        VertexSet nb = set_intersection_of(neighborhood(g, b_packing[idx]), a);
        bool placed = false;
        for (size_t x = 0; x < nb.size() && !placed; ++x)
            for (size_t y = x + 1; y < nb.size() && !placed; ++y) {
                std::pair<int, int> pair{pos[nb[x]], pos[nb[y]]};
                if (occupied.count(pair)) continue;
                occupied.insert(pair);
                res.contracted.add_edge(pair.first, pair.second);
                res.assigned.emplace_back(idx, pair);
                placed = true;
            }
        if (!placed) res.unassigned.push_back(idx);
    }
    return res;
}

}  // namespace treepart
