#include "treepart/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "treepart/errors.hpp"
#include "treepart/partition.hpp"

namespace treepart {

QWitness finish_witness(const Graph& g, const DisjointednessQuery& q, VertexSet Q) {
    auto assignment = assign_components(g, q, Q);
    if (!assignment)
        throw OracleViolationError(
            "query component survives every residual neighborhood");
    QWitness w;
    w.q = std::move(Q);
    w.assignment = std::move(*assignment);
    return w;
}

namespace {

// Contracts equal adjacent bags until all tree neighbors carry distinct bags.
TreeDecomposition dedup_adjacent_bags(TreeDecomposition td) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [x, y] : td.tree) {
            if (td.bags[x] != td.bags[y]) continue;
            // merge y into x
            int t = td.node_count();
            std::vector<std::pair<int, int>> tree;
            for (auto [a, b] : td.tree) {
                int a2 = (a == y) ? x : a;
                int b2 = (b == y) ? x : b;
                if (a2 != b2) tree.emplace_back(a2, b2);
            }
            // drop node y, renumber above it
            TreeDecomposition next;
            for (int i = 0; i < t; ++i)
                if (i != y) next.bags.push_back(std::move(td.bags[i]));
            for (auto [a, b] : tree)
                next.tree.emplace_back(a > y ? a - 1 : a, b > y ? b - 1 : b);
            td = std::move(next);
            changed = true;
            break;
        }
    }
    return td;
}

class PartitionOracle final : public QOracle {
public:
    PartitionOracle(const Graph& g, const CTreePartition& p)
        : g_(g), part_of_(p.part_of), parts_(p.parts), quotient_(p.quotient),
          c_(p.c), ell_(p.width), cert_(dedup_adjacent_bags(p.certificate)) {
        if (c_ < 1) throw InvalidSpecError("partition oracle needs c >= 1");
        if (validate_td(quotient_, cert_) > c_)
            throw InvalidDecompositionError("certificate width exceeds c");
        tree_adj_ = cert_.tree_adjacency();
    }

    int arity() const override { return c_; }

    std::int64_t bound(int) const override {
        return static_cast<std::int64_t>(c_) * ell_;
    }

    QWitness answer(const DisjointednessQuery& q) const override {
        if (q.c() != c_) throw UnsupportedBlockError("query arity mismatch");
        std::vector<int> nodes;  // quotient node per query block
        for (const auto& b : q.blocks) {
            if (b.members.size() != 1)
                throw UnsupportedBlockError("partition oracle takes single parts");
            int h = b.members[0];
            if (h < 0 || h >= static_cast<int>(parts_.size()) || parts_[h] != b.vertices)
                throw UnsupportedBlockError("query block is not a part of the partition");
            nodes.push_back(h);
        }
        for (const auto& r : q.residuals)
            if (r.empty()) return finish_witness(g_, q, {});

        VertexSet removed(nodes.begin(), nodes.end());
        removed = sorted_unique(std::move(removed));

        // Quotient component X' containing the parts that meet X.
        VertexSet x_nodes;
        for (int v : q.x) x_nodes.push_back(part_of_[v]);
        x_nodes = sorted_unique(std::move(x_nodes));
        VertexSet hrest = set_difference_of(all_vertices(quotient_), removed);
        VertexSet xcomp;
        for (auto& comp : components_within(quotient_, hrest))
            if (set_contains(comp, x_nodes[0])) {
                xcomp = std::move(comp);
                break;
            }
        for (int h : x_nodes)
            if (!set_contains(xcomp, h))
                throw UnsupportedBlockError("X does not map into one quotient component");

        VertexSet qnodes = pick_quotient_hitting_set(nodes, xcomp);

        VertexSet Q;
        for (int h : qnodes) Q = set_union_of(Q, parts_[h]);
        Q = set_intersection_of(Q, q.x);
        if (static_cast<std::int64_t>(Q.size()) > bound(1))
            throw OracleViolationError("partition oracle exceeded its c*l bound");
        return finish_witness(g_, q, std::move(Q));
    }

private:
    // The three-case subtree analysis on the certificate: disjoint subtrees
    // give a separating bag, a subtree missing X' gives the empty set, and
    // otherwise the Helly intersection is a single bag holding one X'-node.
    VertexSet pick_quotient_hitting_set(const std::vector<int>& nodes,
                                        const VertexSet& xcomp) const {
        int t = cert_.node_count();
        std::vector<std::vector<int>> subtree(c_);
        for (int i = 0; i < c_; ++i)
            for (int x = 0; x < t; ++x)
                if (set_contains(cert_.bags[x], nodes[i])) subtree[i].push_back(x);

        for (int i = 0; i < c_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if (!sets_intersect(subtree[i], subtree[j]))
                    return case_disjoint_subtrees(subtree[i], subtree[j], xcomp);

        std::vector<int> tx;
        for (int x = 0; x < t; ++x)
            if (sets_intersect(cert_.bags[x], xcomp)) tx.push_back(x);
        for (int i = 0; i < c_; ++i)
            if (!sets_intersect(subtree[i], tx)) return {};

        VertexSet helly = tx;
        for (int i = 0; i < c_; ++i) helly = set_intersection_of(helly, subtree[i]);
        if (helly.size() != 1)
            throw OracleViolationError("Helly intersection is not a single certificate node");
        VertexSet u = set_intersection_of(cert_.bags[helly[0]], xcomp);
        if (u.size() != 1)
            throw OracleViolationError("Helly bag does not hold exactly one component node");
        return u;
    }

    VertexSet case_disjoint_subtrees(const std::vector<int>& ti, const std::vector<int>& tj,
                                     const VertexSet& xcomp) const {
        // Closest node of T_i to T_j along the unique connecting path.
        std::queue<int> bfs;
        std::vector<int> dist(cert_.node_count(), -1);
        for (int x : tj) {
            dist[x] = 0;
            bfs.push(x);
        }
        int z = -1;
        while (!bfs.empty() && z < 0) {
            int x = bfs.front();
            bfs.pop();
            if (set_contains(ti, x)) {
                z = x;
                break;
            }
            for (int w : tree_adj_[x])
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    bfs.push(w);
                }
        }
        if (z < 0) throw OracleViolationError("certificate tree is disconnected");
        return set_intersection_of(cert_.bags[z], xcomp);
    }

    Graph g_;
    std::vector<int> part_of_;
    std::vector<VertexSet> parts_;
    Graph quotient_;
    int c_;
    std::int64_t ell_;
    TreeDecomposition cert_;
    std::vector<std::vector<int>> tree_adj_;
};

class LiftedOracle final : public QOracle {
public:
    LiftedOracle(std::shared_ptr<const QOracle> base, const Graph& g, Covering beta)
        : base_(std::move(base)), g_(g), beta_(std::move(beta)) {}

    int arity() const override { return base_->arity(); }

    std::int64_t bound(int t) const override {
        std::int64_t d = base_->bound(1);
        std::int64_t f = d;
        for (int i = 0; i < arity(); ++i) {
            if (f > 0 && f > (std::int64_t{1} << 60) / std::max<std::int64_t>(t, 1))
                return std::int64_t{1} << 60;  // saturate
            f *= t;
        }
        return f;
    }

    QWitness answer(const DisjointednessQuery& q) const override {
        int c = q.c();
        if (c != arity()) throw UnsupportedBlockError("query arity mismatch");
        for (const auto& b : q.blocks)
            if (b.members.empty())
                throw UnsupportedBlockError("lifted oracle needs block member indices");
        for (const auto& r : q.residuals)
            if (r.empty()) return finish_witness(g_, q, {});

        bool all_single = true;
        for (const auto& b : q.blocks) all_single &= (b.members.size() == 1);
        if (all_single) {
            QWitness w = base_->answer(q);
            w.q = set_intersection_of(w.q, q.x);
            return finish_witness(g_, q, std::move(w.q));
        }

        // Union over all tuples of constituent blocks of the base answer in
        // the enlarged component containing X.
        VertexSet Q;
        std::vector<size_t> idx(c, 0);
        while (true) {
            std::vector<BlockUnion> tuple;
            VertexSet removed;
            for (int i = 0; i < c; ++i) {
                int m = q.blocks[i].members[idx[i]];
                tuple.push_back(block_union(beta_, {m}));
                removed = set_union_of(removed, tuple.back().vertices);
            }
            VertexSet rest = set_difference_of(all_vertices(g_), removed);
            VertexSet xy;
            for (auto& comp : components_within(g_, rest))
                if (set_contains(comp, q.x[0])) {
                    xy = std::move(comp);
                    break;
                }
            if (xy.empty()) throw Error("internal: lifted component not found");
            QWitness sub = base_->answer(make_query(std::move(tuple), std::move(xy)));
            Q = set_union_of(Q, sub.q);

            int i = c - 1;
            while (i >= 0 && idx[i] + 1 == q.blocks[i].members.size()) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = 0;
        }
        Q = set_intersection_of(Q, q.x);
        return finish_witness(g_, q, std::move(Q));
    }

private:
    std::shared_ptr<const QOracle> base_;
    Graph g_;
    Covering beta_;
};

}  // namespace

std::unique_ptr<QOracle> oracle_from_partition(const Graph& g, const CTreePartition& p) {
    return std::make_unique<PartitionOracle>(g, p);
}

std::unique_ptr<QOracle> lift_oracle(std::shared_ptr<const QOracle> base, const Graph& g,
                                     Covering beta) {
    return std::make_unique<LiftedOracle>(std::move(base), g, std::move(beta));
}

}  // namespace treepart
