#include "treepart/covering.hpp"

#include <algorithm>
#include <sstream>

#include "treepart/errors.hpp"

namespace treepart {

Covering singleton_partition(const Graph& g) {
    Covering beta;
    beta.l = 1;
    beta.is_partition = true;
    beta.blocks.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) beta.blocks.push_back({v});
    return beta;
}

Covering restrict_covering(const Covering& beta, const VertexSet& sub) {
    Covering out;
    out.l = beta.l;
    out.is_partition = beta.is_partition;
    for (const auto& block : beta.blocks) {
        VertexSet b = set_intersection_of(block, sub);
        if (!b.empty()) out.blocks.push_back(std::move(b));
    }
    return out;
}

BlockUnion block_union(const Covering& beta, std::vector<int> members) {
    BlockUnion bu;
    VertexSet acc;
    for (int m : members) {
        if (m < 0 || m >= beta.block_count())
            throw InvalidSpecError("block index out of range");
        acc = set_union_of(acc, beta.blocks[m]);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    bu.members = std::move(members);
    bu.vertices = std::move(acc);
    return bu;
}

static std::vector<VertexSet> residuals_of(const std::vector<BlockUnion>& blocks) {
    std::vector<VertexSet> res;
    VertexSet acc;
    for (const auto& b : blocks) {
        res.push_back(set_difference_of(b.vertices, acc));
        acc = set_union_of(acc, b.vertices);
    }
    return res;
}

DisjointednessQuery make_query(std::vector<BlockUnion> blocks, VertexSet x) {
    DisjointednessQuery q;
    q.residuals = residuals_of(blocks);
    q.blocks = std::move(blocks);
    q.x = std::move(x);
    return q;
}

std::vector<DisjointednessQuery> queries_for_tuple(const Graph& g,
                                                   std::vector<BlockUnion> blocks) {
    VertexSet removed;
    for (const auto& b : blocks) removed = set_union_of(removed, b.vertices);
    VertexSet rest = set_difference_of(all_vertices(g), removed);
    std::vector<DisjointednessQuery> out;
    for (auto& comp : components_within(g, rest))
        out.push_back(make_query(blocks, std::move(comp)));
    return out;
}

WitnessReport verify_witness(const Graph& g, const DisjointednessQuery& q, const QWitness& w,
                             int d) {
    if (static_cast<int>(w.q.size()) > d)
        return {false, "|Q| = " + std::to_string(w.q.size()) + " exceeds d = " +
                           std::to_string(d)};
    for (int v : w.q)
        if (!set_contains(q.x, v))
            return {false, "Q vertex " + std::to_string(v) + " outside X"};
    auto comps = components_within(g, set_difference_of(q.x, w.q));
    if (comps.size() != w.assignment.size())
        return {false, "assignment covers " + std::to_string(w.assignment.size()) +
                           " components, X - Q has " + std::to_string(comps.size())};
    for (size_t j = 0; j < comps.size(); ++j) {
        int i = w.assignment[j];
        if (i < 0 || i >= q.c()) return {false, "assignment index out of range"};
        VertexSet nb = neighborhood(g, q.residuals[i]);
        if (sets_intersect(comps[j], nb))
            return {false, "component with vertex " + std::to_string(comps[j][0]) +
                               " touches N(B'_" + std::to_string(i + 1) + ")"};
    }
    return {true, ""};
}

std::optional<std::vector<int>> assign_components(const Graph& g, const DisjointednessQuery& q,
                                                  const VertexSet& Q) {
    std::vector<VertexSet> nbs;
    nbs.reserve(q.c());
    for (const auto& r : q.residuals) nbs.push_back(neighborhood(g, r));
    auto comps = components_within(g, set_difference_of(q.x, Q));
    std::vector<int> assignment;
    assignment.reserve(comps.size());
    for (const auto& comp : comps) {
        int chosen = -1;
        for (int i = 0; i < q.c(); ++i)
            if (!sets_intersect(comp, nbs[i])) {
                chosen = i;
                break;
            }
        if (chosen < 0) return std::nullopt;
        assignment.push_back(chosen);
    }
    return assignment;
}

QWitness brute_min_q(const Graph& g, const DisjointednessQuery& q, const Config& cfg) {
    int nx = static_cast<int>(q.x.size());
    if (nx > 16)
        throw TooLargeError("brute_min_q budget is |X| <= 16, got " + std::to_string(nx));
    // Empty residual: Q = ∅ always works since N(∅) = ∅.
    for (const auto& r : q.residuals)
        if (r.empty()) {
            QWitness w;
            w.assignment = *assign_components(g, q, {});
            return w;
        }
    (void)cfg;
    // Subsets by increasing cardinality, lexicographic within a size.
    // Q = X always works (no components remain), so this terminates.
    for (int size = 0; size <= nx; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            VertexSet Q;
            Q.reserve(size);
            for (int i : pick) Q.push_back(q.x[i]);
            if (auto assignment = assign_components(g, q, Q)) {
                QWitness w;
                w.q = std::move(Q);
                w.assignment = std::move(*assignment);
                return w;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == nx - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error("brute_min_q: unreachable");
}

DisjointednessCheck check_cd_disjointed(const Graph& g, const Covering& beta, int c, int d,
                                        const Config& cfg) {
    if (c == 0) {
        // The zero-ary condition forces Q = X, so it holds exactly when
        // every component has at most d vertices.
        for (auto& q : queries_for_tuple(g, {}))
            if (static_cast<int>(q.x.size()) > d) return {false, std::move(q)};
        return {true, std::nullopt};
    }

    if (beta.block_count() == 0) return {true, std::nullopt};

    // Work estimate: ordered tuples without early-skippable repeats, times
    // the subset enumeration each component may take.
    double tuples = 1;
    for (int i = 0; i < c; ++i) tuples *= std::max(1, beta.block_count());
    if (tuples * 65536.0 > static_cast<double>(cfg.cd_work_budget))
        throw TooLargeError("check_cd_disjointed exceeds work budget");

    std::vector<int> tuple(c, 0);
    while (true) {
        // Tuples with a repeated block have an empty residual and pass
        // trivially, so only distinct-index tuples are queried.
        bool repeat = false;
        for (int i = 0; i < c && !repeat; ++i)
            for (int j = i + 1; j < c; ++j)
                if (tuple[i] == tuple[j]) {
                    repeat = true;
                    break;
                }
        if (!repeat) {
            std::vector<BlockUnion> blocks;
            blocks.reserve(c);
            for (int i = 0; i < c; ++i) blocks.push_back(block_union(beta, {tuple[i]}));
            for (auto& q : queries_for_tuple(g, std::move(blocks))) {
                QWitness w = brute_min_q(g, q, cfg);
                if (static_cast<int>(w.q.size()) > d)
                    return {false, std::move(q)};
            }
        }
        // next tuple in beta^c, odometer order
        int i = c - 1;
        while (i >= 0 && tuple[i] == beta.block_count() - 1) --i;
        if (i < 0) break;
        ++tuple[i];
        for (int j = i + 1; j < c; ++j) tuple[j] = 0;
    }
    return {true, std::nullopt};
}

void write_covering(std::ostream& out, const Covering& beta) {
    for (const auto& block : beta.blocks) {
        for (size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
        out << '\n';
    }
}

Covering read_covering(std::istream& in, bool expect_partition) {
    Covering beta;
    std::string line;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        VertexSet block;
        int v;
        while (ls >> v) block.push_back(v);
        if (block.empty()) continue;
        block = sorted_unique(std::move(block));
        if (expect_partition)
            for (int u : block) {
                if (u >= static_cast<int>(seen.size())) seen.resize(u + 1, 0);
                if (seen[u]) throw FormatError("partition blocks overlap at " + std::to_string(u));
                seen[u] = 1;
            }
        beta.l = std::max(beta.l, static_cast<int>(block.size()));
        beta.blocks.push_back(std::move(block));
    }
    beta.is_partition = expect_partition;
    return beta;
}

}  // namespace treepart
