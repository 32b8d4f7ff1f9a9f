#include "treepart/builders.hpp"

#include <algorithm>
#include <cmath>

#include "treepart/class_oracles.hpp"
#include "treepart/errors.hpp"
#include "treepart/family.hpp"
#include "treepart/pattern.hpp"
#include "treepart/transform.hpp"

namespace treepart {

namespace {

// Width-1 decomposition of a forest: one node per vertex, bag {v, parent(v)},
// components chained through their roots.
TreeDecomposition forest_td(const Graph& forest) {
    TreeDecomposition td;
    int n = forest.n();
    if (n == 0) return td;
    td.bags.assign(n, {});
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> roots;
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        roots.push_back(r);
        std::vector<int> stack{r};
        seen[r] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : forest.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
    }
    for (int v = 0; v < n; ++v) {
        td.bags[v] = (parent[v] >= 0) ? sorted_unique({v, parent[v]}) : VertexSet{v};
        if (parent[v] >= 0) td.tree.emplace_back(v, parent[v]);
    }
    for (size_t i = 0; i + 1 < roots.size(); ++i) td.tree.emplace_back(roots[i], roots[i + 1]);
    return td;
}

std::vector<int> orig_to_sub_map(const SubdivisionMap& sm) {
    std::vector<int> map(sm.original.n(), -1);
    for (int w = 0; w < sm.subdivided.n(); ++w)
        if (sm.branch_of[w].is_vertex) map[sm.branch_of[w].vertex] = w;
    for (int v = 0; v < sm.original.n(); ++v)
        if (map[v] < 0) throw InvalidSpecError("subdivision map misses an original vertex");
    return map;
}

int find_bag_with(const TreeDecomposition& td, const VertexSet& need) {
    for (int x = 0; x < td.node_count(); ++x) {
        bool ok = true;
        for (int v : need) ok &= set_contains(td.bags[x], v);
        if (ok) return x;
    }
    throw InvalidDecompositionError("no certificate bag covers the required clique");
}

// Width-1 partitions are carried across a subdivision as singletons: the
// subdivided graph itself becomes the quotient. Its certificate comes from
// the input certificate (vertices stand in for their singleton parts) with
// a three-vertex bag chain glued on per subdivided edge, so the width stays
// at most c without re-solving anything.
CTreePartition singleton_carry(const SubdivisionMap& sm, const CTreePartition& p, int c,
                               const std::vector<int>& o2s) {
    const Graph& sub = sm.subdivided;
    CTreePartition out;
    out.c = c;
    out.part_of.resize(sub.n());
    for (int v = 0; v < sub.n(); ++v) {
        out.part_of[v] = v;
        out.parts.push_back({v});
    }
    out.quotient = sub;
    out.width = sub.n() > 0 ? 1 : 0;
    if (c == 1) {
        out.certificate = forest_td(sub);
        return out;
    }
    TreeDecomposition td;
    td.tree = p.certificate.tree;
    for (const auto& bag : p.certificate.bags) {
        VertexSet mapped;
        for (int h : bag) mapped.push_back(o2s[p.parts[h][0]]);
        td.bags.push_back(sorted_unique(std::move(mapped)));
    }
    for (auto [u, v] : sm.original.edges()) {
        auto path = sm.path_of(u, v);
        if (path.size() == 2) continue;
        int attach = find_bag_with(td, sorted_unique({path.front(), path.back()}));
        int prev = attach;
        for (size_t a = 0; a + 1 < path.size(); ++a) {
            td.bags.push_back(sorted_unique({path[a], path[a + 1], path.back()}));
            td.tree.emplace_back(prev, td.node_count() - 1);
            prev = td.node_count() - 1;
        }
    }
    out.certificate = std::move(td);
    return out;
}

int find_bag_with(const TreeDecomposition& td, const VertexSet& need) {
    for (int x = 0; x < td.node_count(); ++x) {
        bool ok = true;
        for (int v : need) ok &= set_contains(td.bags[x], v);
        if (ok) return x;
    }
    throw InvalidDecompositionError("no certificate bag covers the required clique");
}

}  // namespace

CTreePartition subdivide_partition(const SubdivisionMap& sm, const CTreePartition& p, int c) {
    if (c < 1) throw InvalidSpecError("subdivide_partition needs c >= 1");
    const Graph& sub = sm.subdivided;
    if (sub.n() == 0) return p;
    auto o2s = orig_to_sub_map(sm);

    if (sub.n() == sm.original.n()) {
        // Nothing was subdivided; only the id space may differ.
        CTreePartition out = p;
        out.part_of.assign(sub.n(), -1);
        for (int v = 0; v < sm.original.n(); ++v) out.part_of[o2s[v]] = p.part_of[v];
        out.parts.assign(p.parts.size(), {});
        for (int w = 0; w < sub.n(); ++w) out.parts[out.part_of[w]].push_back(w);
        return out;
    }

    int t = std::max(p.width, 1);
    if (t == 1) return singleton_carry(sm, p, c, o2s);

    // Parts on subdivided ids; originals keep their part, internal vertices
    // go to fresh chain parts (or, for c = 1 across a quotient edge, the
    // head part of the oriented edge).
    int old_parts = p.part_count();
    std::vector<int> part_of(sub.n(), -1);
    for (int v = 0; v < sm.original.n(); ++v) part_of[o2s[v]] = p.part_of[v];

    int next_part = old_parts;

    // c = 1: orient quotient edges to in-degree <= 1 (away from each root).
    std::vector<int> quotient_parent;
    if (c == 1) {
        quotient_parent.assign(old_parts, -1);
        std::vector<char> seen(old_parts, 0);
        for (int r = 0; r < old_parts; ++r) {
            if (seen[r]) continue;
            std::vector<int> stack{r};
            seen[r] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : p.quotient.neighbors(x))
                    if (!seen[y]) {
                        seen[y] = 1;
                        quotient_parent[y] = x;
                        stack.push_back(y);
                    }
            }
        }
    }

    struct Chain {
        std::vector<int> parts;  // fresh part ids, head first
        int x, y;                // quotient parts to attach the head to (y = -1: only x)
    };
    std::vector<Chain> chains;

    for (auto [u, v] : sm.original.edges()) {
        auto path = sm.path_of(u, v);
        int s = static_cast<int>(path.size()) - 2;
        if (s <= 0) continue;
        int px = p.part_of[u], py = p.part_of[v];
        std::vector<int> inner(path.begin() + 1, path.end() - 1);

        if (c == 1 && px != py) {
            // Oriented tail->head: the subdivision vertex next to the tail
            // joins the head part; the rest chains off the head.
            int head = (quotient_parent[py] == px) ? py
                       : (quotient_parent[px] == py)
                           ? px
                           : throw InvalidDecompositionError(
                                 "c = 1 quotient is not a forest");
            if (head == py) {
                part_of[inner.front()] = py;
                inner.erase(inner.begin());
            } else {
                part_of[inner.back()] = px;
                inner.pop_back();
            }
            if (inner.empty()) continue;
            Chain ch;
            ch.x = head;
            ch.y = -1;
            int lo = 0, hi = static_cast<int>(inner.size()) - 1;
            while (lo <= hi) {
                int id = next_part++;
                part_of[inner[lo]] = id;
                if (hi != lo) part_of[inner[hi]] = id;
                ch.parts.push_back(id);
                ++lo;
                --hi;
            }
            chains.push_back(std::move(ch));
            continue;
        }

        Chain ch;
        ch.x = px;
        ch.y = (px == py) ? -1 : py;
        int lo = 0, hi = s - 1;
        while (lo <= hi) {
            int id = next_part++;
            part_of[inner[lo]] = id;
            if (hi != lo) part_of[inner[hi]] = id;
            ch.parts.push_back(id);
            ++lo;
            --hi;
        }
        chains.push_back(std::move(ch));
    }

    Graph quotient(next_part);
    for (auto [x, y] : p.quotient.edges()) quotient.add_edge(x, y);
    for (const auto& ch : chains) {
        quotient.add_edge(ch.parts[0], ch.x);
        if (ch.y >= 0) quotient.add_edge(ch.parts[0], ch.y);
        for (size_t i = 0; i + 1 < ch.parts.size(); ++i)
            quotient.add_edge(ch.parts[i], ch.parts[i + 1]);
    }

    TreeDecomposition cert;
    if (c == 1) {
        cert = forest_td(quotient);
    } else {
        cert = p.certificate;
        for (const auto& ch : chains) {
            VertexSet need = (ch.y >= 0) ? sorted_unique({ch.x, ch.y}) : VertexSet{ch.x};
            int attach = find_bag_with(cert, need);
            VertexSet head_bag = need;
            head_bag.push_back(ch.parts[0]);
            cert.bags.push_back(sorted_unique(std::move(head_bag)));
            cert.tree.emplace_back(attach, cert.node_count() - 1);
            int prev = cert.node_count() - 1;
            for (size_t i = 0; i + 1 < ch.parts.size(); ++i) {
                cert.bags.push_back(sorted_unique({ch.parts[i], ch.parts[i + 1]}));
                cert.tree.emplace_back(prev, cert.node_count() - 1);
                prev = cert.node_count() - 1;
            }
        }
    }

    CTreePartition out = finalize_partition(std::move(part_of), std::move(quotient),
                                            std::move(cert), c);
    return out;
}

namespace {

// Lemma-26-style oracle: answers original-graph queries by translating the
// subdivision partition oracle's answers back through branch endpoints.
class SubdivisionBackOracle final : public QOracle {
public:
    SubdivisionBackOracle(const SubdivisionMap& sm, const CTreePartition& p_sub, int c,
                          std::vector<int> block_part_ids)
        : sm_(sm), p_sub_(p_sub), c_(c), block_part_ids_(std::move(block_part_ids)),
          base_(oracle_from_partition(sm.subdivided, p_sub)), o2s_(orig_to_sub_map(sm)) {
        ell_ = std::max(1, p_sub_.width);
        d_ = 2LL * c_ * ell_ * (static_cast<std::int64_t>(c_) * ell_ + 1);
    }

    int arity() const override { return c_; }
    std::int64_t bound(int) const override { return d_; }

    QWitness answer(const DisjointednessQuery& q) const override {
        if (q.c() != c_) throw UnsupportedBlockError("query arity mismatch");
        for (const auto& r : q.residuals)
            if (r.empty()) return finish_witness(sm_.original, q, {});

        std::vector<int> pids;
        VertexSet b_sub, b_orig_in_sub;
        for (const auto& b : q.blocks) {
            if (b.members.size() != 1)
                throw UnsupportedBlockError("subdivision oracle takes single blocks");
            int pid = block_part_ids_[b.members[0]];
            pids.push_back(pid);
            b_sub = set_union_of(b_sub, p_sub_.parts[pid]);
            for (int v : b.vertices) b_orig_in_sub.push_back(o2s_[v]);
        }
        b_orig_in_sub = sorted_unique(std::move(b_orig_in_sub));

        // Endpoints of subdivided edges whose internal vertices sit in the
        // subdivision blocks but not in the restricted blocks.
        VertexSet q_tilde;
        for (int w : set_difference_of(b_sub, b_orig_in_sub)) {
            const auto& br = sm_.branch_of[w];
            if (br.is_vertex) throw Error("internal: restricted block lost a vertex");
            q_tilde.push_back(br.edge.first);
            q_tilde.push_back(br.edge.second);
        }

        VertexSet x_sub;
        for (int v : q.x) x_sub.push_back(o2s_[v]);
        x_sub = sorted_unique(std::move(x_sub));

        VertexSet rest = set_difference_of(all_vertices(sm_.subdivided), b_sub);
        VertexSet q_total = q_tilde;
        for (const auto& comp : components_within(sm_.subdivided, rest)) {
            if (!sets_intersect(comp, x_sub)) continue;
            std::vector<BlockUnion> tuple;
            for (int pid : pids) {
                BlockUnion bu;
                bu.members = {pid};
                bu.vertices = p_sub_.parts[pid];
                tuple.push_back(std::move(bu));
            }
            QWitness sub_w = base_->answer(make_query(std::move(tuple), comp));
            for (int w : sub_w.q) {
                const auto& br = sm_.branch_of[w];
                if (br.is_vertex) {
                    q_total.push_back(br.vertex);
                } else {
                    q_total.push_back(br.edge.first);
                    q_total.push_back(br.edge.second);
                }
            }
        }
        VertexSet Q = set_intersection_of(sorted_unique(std::move(q_total)), q.x);
        return finish_witness(sm_.original, q, std::move(Q));
    }

private:
    const SubdivisionMap& sm_;
    CTreePartition p_sub_;
    int c_;
    std::vector<int> block_part_ids_;
    std::unique_ptr<QOracle> base_;
    std::vector<int> o2s_;
    std::int64_t ell_ = 1;
    std::int64_t d_ = 0;
};

}  // namespace

CTreePartition original_partition_from_subdivision(const SubdivisionMap& sm,
                                                   const CTreePartition& p_sub, int c,
                                                   const Config& cfg) {
    if (c < 1) throw InvalidSpecError("needs c >= 1");
    const Graph& g = sm.original;
    if (g.n() == 0) {
        CTreePartition p;
        p.c = c;
        return p;
    }
    auto o2s = orig_to_sub_map(sm);
    std::vector<int> sub_to_orig(sm.subdivided.n(), -1);
    for (int v = 0; v < g.n(); ++v) sub_to_orig[o2s[v]] = v;

    // beta := parts of the subdivision partition restricted to the original
    // vertices; remember which part each block came from.
    Covering beta;
    beta.l = std::max(1, p_sub.width);
    beta.is_partition = true;
    std::vector<int> block_part_ids;
    for (int pid = 0; pid < p_sub.part_count(); ++pid) {
        VertexSet block;
        for (int w : p_sub.parts[pid])
            if (sub_to_orig[w] >= 0) block.push_back(sub_to_orig[w]);
        if (block.empty()) continue;
        beta.blocks.push_back(sorted_unique(std::move(block)));
        block_part_ids.push_back(pid);
    }

    auto base = std::make_shared<SubdivisionBackOracle>(sm, p_sub, c,
                                                        std::move(block_part_ids));
    TreeDecomposition td = auto_td(g, cfg);
    return compute_partition_cd(g, td, beta, std::move(base), c, cfg);
}

namespace {

Covering covering_from_parts(const CTreePartition& p) {
    Covering beta;
    beta.blocks = p.parts;
    beta.l = std::max(1, p.width);
    beta.is_partition = true;
    return beta;
}

CTreePartition degree_pipeline(const Graph& g, const Config& cfg) {
    TreeDecomposition td = auto_td(g, cfg);
    auto oracle = degree_oracle(g);
    return compute_partition(g, td, singleton_partition(g), *oracle, 1, cfg);
}

CTreePartition spider_free_rec(const Graph& g, int s, int level, const Config& cfg,
                               std::vector<std::string>& flags) {
    if (level == 0) {
        if (g.max_degree() >= s) flags.push_back("degree-exceeds-spider-base");
        return degree_pipeline(g, cfg);
    }
    TreeDecomposition td = auto_td(g, cfg);
    int tau = (1 << level) - 1;
    long long lambda = std::max<long long>(1LL + s + 1LL * s * tau * (2 * tau + 1),
                                           td.width() + 1);
    Graph power = robust_power(g, static_cast<int>(std::min<long long>(lambda, g.n() + 1)));
    CTreePartition inner = spider_free_rec(power, s, level - 1, cfg, flags);
    Covering beta = covering_from_parts(inner);
    auto oracle = minor_free_oracle(g, td, level + 1, EpMode::Auto, cfg);
    return compute_partition(g, td, beta, *oracle, level + 1, cfg);
}

CTreePartition path_free_rec(const Graph& g, int level, const Config& cfg) {
    if (level <= 1) return component_partition_c0(g, 2);
    TreeDecomposition td = auto_td(g, cfg);
    long long two_c = 1LL << level;
    long long lambda = std::max<long long>(3 + (two_c - 2) * (two_c - 1), td.width() + 1);
    Graph power = robust_power(g, static_cast<int>(std::min<long long>(lambda, g.n() + 1)));
    CTreePartition inner = path_free_rec(power, level - 1, cfg);
    Covering beta = covering_from_parts(inner);
    auto oracle = minor_free_oracle(g, td, level - 1, EpMode::Auto, cfg);
    return compute_partition(g, td, beta, *oracle, level - 1, cfg);
}

}  // namespace

CTreePartition spider_free_partition(const Graph& g, int s, int t, const Config& cfg) {
    if (s < 3 || t < 1) throw InvalidSpecError("spider_free_partition needs s >= 3, t >= 1");
    std::vector<std::string> flags;
    if (1 + s * t <= cfg.pattern_budget) {
        Graph spider = generate({FamilyKind::Spider, {s, t}});
        if (contains_pattern(g, spider, PatternMode::Subgraph, cfg))
            throw ClassViolationError("input contains the excluded spider");
    } else {
        flags.push_back("precheck-skipped");
    }
    if (g.n() == 0) {
        CTreePartition p;
        p.c = 1;
        return p;
    }
    int level = static_cast<int>(std::floor(std::log2(static_cast<double>(t))));
    CTreePartition p = spider_free_rec(g, s, level, cfg, flags);
    for (auto& f : flags) p.flags.push_back(std::move(f));
    return p;
}

CTreePartition path_free_partition(const Graph& g, int n, const Config& cfg) {
    if (n < 3) throw InvalidSpecError("path_free_partition needs n >= 3");
    std::vector<std::string> flags;
    if (n <= cfg.pattern_budget) {
        if (contains_pattern(g, generate({FamilyKind::Path, {n}}), PatternMode::Subgraph, cfg))
            throw ClassViolationError("input contains the excluded path");
    } else {
        flags.push_back("precheck-skipped");
    }
    int level = static_cast<int>(std::floor(std::log2(static_cast<double>(n))));
    CTreePartition p = path_free_rec(g, level, cfg);
    for (auto& f : flags) p.flags.push_back(std::move(f));
    return p;
}

namespace {

// Greedy maximal packing of pattern copies, lowest embedding first.
std::vector<VertexSet> pattern_packing(const Graph& g, const Graph& pattern, PatternMode mode,
                                       const Config& cfg) {
    std::vector<VertexSet> copies;
    VertexSet remaining = all_vertices(g);
    while (static_cast<int>(remaining.size()) >= pattern.n()) {
        auto emb = contains_pattern_within(g, remaining, pattern, mode, cfg);
        if (!emb) break;
        VertexSet copy = sorted_unique(VertexSet(emb->begin(), emb->end()));
        remaining = set_difference_of(remaining, copy);
        copies.push_back(std::move(copy));
    }
    return copies;
}

// Adds a dominant part over another partition's quotient.
CTreePartition add_dominant_part(const Graph& g, const CTreePartition& inner,
                                 const VertexSet& inner_vertices, VertexSet dominant) {
    std::vector<int> part_of(g.n(), -1);
    for (size_t i = 0; i < inner_vertices.size(); ++i)
        part_of[inner_vertices[i]] = inner.part_of[i];
    int dom = inner.part_count();
    for (int v : dominant) part_of[v] = dom;

    Graph quotient(dom + 1);
    for (auto [x, y] : inner.quotient.edges()) quotient.add_edge(x, y);
    for (int x = 0; x < dom; ++x) quotient.add_edge(x, dom);

    TreeDecomposition cert;
    if (inner.certificate.node_count() == 0) {
        cert.bags = {{dom}};
    } else {
        cert = inner.certificate;
        for (auto& bag : cert.bags) bag = set_union_of(bag, {dom});
    }
    return finalize_partition(std::move(part_of), std::move(quotient), std::move(cert),
                              inner.c + 1);
}

}  // namespace

CTreePartition ell_h_free_partition(const Graph& g, const Graph& h, int l,
                                    const std::function<CTreePartition(const Graph&)>& inner,
                                    const Config& cfg) {
    if (l < 2) throw InvalidSpecError("ell_h_free_partition needs l >= 2");
    if (h.n() == 0) throw InvalidSpecError("pattern must be nonempty");
    auto copies = pattern_packing(g, h, PatternMode::Subgraph, cfg);
    if (static_cast<int>(copies.size()) >= l)
        throw ClassViolationError("input contains " + std::to_string(copies.size()) +
                                  " disjoint pattern copies");
    VertexSet packed;
    for (const auto& copy : copies) packed = set_union_of(packed, copy);
    VertexSet rest = set_difference_of(all_vertices(g), packed);
    CTreePartition p_inner = inner(g.induced(rest));
    if (packed.empty()) return p_inner;
    CTreePartition p = add_dominant_part(g, p_inner, rest, packed);
    if (static_cast<int>(packed.size()) > (l - 1) * h.n())
        throw Error("internal: dominant part exceeds (l-1)|V(H)|");
    return p;
}

CTreePartition induced_star_free_partition(const Graph& g, int s, const Config& cfg) {
    if (s < 1) throw InvalidSpecError("needs s >= 1");
    if (s + 1 <= cfg.pattern_budget) {
        if (contains_pattern(g, generate({FamilyKind::Star, {s}}), PatternMode::Induced, cfg))
            throw ClassViolationError("input contains an induced star K_{1," +
                                      std::to_string(s) + "}");
    }
    TreeDecomposition td = auto_td(g, cfg);
    int tw_ub = td.width();
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > tw_ub * (s - 1))
            throw ClassViolationError("degree bound violated at vertex " + std::to_string(v) +
                                      ": deg " + std::to_string(g.degree(v)) + " > tw*(s-1) = " +
                                      std::to_string(tw_ub * (s - 1)));
    auto oracle = degree_oracle(g);
    return compute_partition(g, td, singleton_partition(g), *oracle, 1, cfg);
}

CTreePartition induced_star_forest_free_partition(const Graph& g, int s, int l,
                                                  const Config& cfg) {
    if (s < 1 || l < 1) throw InvalidSpecError("needs s, l >= 1");
    auto copies = pattern_packing(g, generate({FamilyKind::Star, {s}}), PatternMode::Induced,
                                  cfg);
    VertexSet packed;
    for (const auto& copy : copies) packed = set_union_of(packed, copy);
    VertexSet rest = set_difference_of(all_vertices(g), packed);
    CTreePartition p_inner = induced_star_free_partition(g.induced(rest), s, cfg);
    if (packed.empty()) return p_inner;
    return add_dominant_part(g, p_inner, rest, packed);
}

CTreePartition induced_p3_forest_partition(const Graph& g, int k, const Config& cfg) {
    if (k < 1) throw InvalidSpecError("needs k >= 1");
    if (g.n() == 0) {
        CTreePartition p;
        p.c = 1;
        return p;
    }
    // The theoretical cap on the packing is (tw+1)(k-1); the measured size
    // stands in for it, so an oversized packing is not by itself a
    // violation witness (the copies need not form an induced k P_3).
    auto copies = pattern_packing(g, generate({FamilyKind::Path, {3}}), PatternMode::Induced,
                                  cfg);
    VertexSet center;
    for (const auto& copy : copies) center = set_union_of(center, copy);
    VertexSet rest = set_difference_of(all_vertices(g), center);

    auto comps = components_within(g, rest);
    for (const auto& comp : comps)
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.has_edge(comp[i], comp[j]))
                    throw ClassViolationError(
                        "remainder component with vertex " + std::to_string(comp[0]) +
                        " is not a clique");

    std::vector<int> part_of(g.n(), -1);
    Graph quotient;
    TreeDecomposition cert;
    if (center.empty()) {
        for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
            for (int v : comps[i]) part_of[v] = i;
            cert.bags.push_back({i});
            if (i > 0) cert.tree.emplace_back(i - 1, i);
        }
        quotient = Graph(static_cast<int>(comps.size()));
    } else {
        int center_id = 0;
        for (int v : center) part_of[v] = center_id;
        quotient = Graph(1 + static_cast<int>(comps.size()));
        cert.bags.push_back({0});
        for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
            for (int v : comps[i]) part_of[v] = 1 + i;
            quotient.add_edge(0, 1 + i);
            cert.bags.push_back({0, 1 + i});
            cert.tree.emplace_back(0, 1 + i);
        }
    }
    return finalize_partition(std::move(part_of), std::move(quotient), std::move(cert), 1);
}

CTreePartition induced_utw0_partition(const Graph& g, Utw0Mode mode, int kk,
                                      const Config& cfg) {
    if (g.n() == 0) {
        CTreePartition p;
        p.c = 0;
        return p;
    }
    if (mode == Utw0Mode::PathAtMost3) {
        int max_size = 0;
        for (const auto& comp : components(g)) {
            max_size = std::max(max_size, static_cast<int>(comp.size()));
            for (size_t i = 0; i < comp.size(); ++i)
                for (size_t j = i + 1; j < comp.size(); ++j)
                    if (!g.has_edge(comp[i], comp[j]))
                        throw ClassViolationError("component with vertex " +
                                                  std::to_string(comp[0]) +
                                                  " is not a clique");
        }
        return component_partition_c0(g, max_size);
    }
    if (kk < 1) throw InvalidSpecError("edgeless mode needs the pattern size");
    if (kk <= cfg.pattern_budget) {
        Graph edgeless(kk);
        if (contains_pattern(g, edgeless, PatternMode::Induced, cfg))
            throw ClassViolationError("input has an independent set of size " +
                                      std::to_string(kk));
    }
    CTreePartition p;
    p.c = 0;
    p.part_of.assign(g.n(), 0);
    p.parts = {all_vertices(g)};
    p.quotient = Graph(1);
    p.certificate.bags = {{0}};
    p.width = g.n();
    return p;
}

CTreePartition k1t_partition(const Graph& g, int t, const Config& cfg) {
    if (t < 1) throw InvalidSpecError("needs t >= 1");
    if (g.n() == 0) {
        CTreePartition p;
        p.c = 1;
        return p;
    }
    if (components(g).size() != 1) throw InvalidSpecError("k1t_partition needs a connected graph");
    SubdivisionMap sm = suppress_degree_two(g);
    if (sm.original.n() > 10 * t)
        throw CoreTooLargeError("suppressed core has " + std::to_string(sm.original.n()) +
                                " vertices > 10t = " + std::to_string(10 * t));
    CTreePartition core;
    core.c = 1;
    core.part_of.assign(sm.original.n(), 0);
    core.parts = {all_vertices(sm.original)};
    core.quotient = Graph(1);
    core.certificate.bags = {{0}};
    core.width = sm.original.n();
    (void)cfg;
    return subdivide_partition(sm, core, 1);
}

}  // namespace treepart
