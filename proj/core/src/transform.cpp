#include "treepart/transform.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "treepart/errors.hpp"

namespace treepart {

std::vector<int> SubdivisionMap::path_of(int u, int v) const {
    if (u > v) std::swap(u, v);
    int su = -1, sv = -1;
    std::vector<int> inner;
    for (int w = 0; w < subdivided.n(); ++w) {
        const auto& b = branch_of[w];
        if (b.is_vertex) {
            if (b.vertex == u) su = w;
            if (b.vertex == v) sv = w;
        } else if (b.edge == std::make_pair(u, v)) {
            inner.push_back(w);
        }
    }
    if (su < 0 || sv < 0) throw InvalidSpecError("path_of: unknown original vertices");
    std::sort(inner.begin(), inner.end(), [&](int a, int b2) {
        return branch_of[a].pos < branch_of[b2].pos;
    });
    std::vector<int> path;
    path.push_back(su);
    path.insert(path.end(), inner.begin(), inner.end());
    path.push_back(sv);
    return path;
}

SubdivisionMap subdivide(const Graph& g, const std::vector<int>& counts) {
    auto edges = g.edges();
    if (counts.size() != edges.size())
        throw InvalidSpecError("subdivide: counts must cover every edge");
    SubdivisionMap sm;
    sm.original = g;
    int total = g.n();
    for (int c : counts) {
        if (c < 0) throw InvalidSpecError("subdivide: negative count");
        total += c;
    }
    Graph sub(total);
    sm.branch_of.resize(total);
    for (int v = 0; v < g.n(); ++v) sm.branch_of[v] = BranchOrigin{true, v, {-1, -1}, 0};
    int next = g.n();
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        int prev = u;
        for (int a = 1; a <= counts[e]; ++a) {
            sub.add_edge(prev, next);
            sm.branch_of[next] = BranchOrigin{false, -1, {u, v}, a};
            prev = next++;
        }
        sub.add_edge(prev, v);
    }
    sm.subdivided = std::move(sub);
    return sm;
}

SubdivisionMap subdivide_uniform(const Graph& g, int t) {
    return subdivide(g, std::vector<int>(g.edges().size(), t));
}

SubdivisionMap suppress_degree_two(const Graph& g) {
    int n = g.n();
    std::vector<char> core(n, 0);
    for (int v = 0; v < n; ++v) core[v] = (g.degree(v) != 2);
    // A component where everything has degree 2 is a cycle; keep its three
    // lowest vertices so the core stays simple.
    for (const auto& comp : components(g)) {
        bool has_core = false;
        for (int v : comp)
            if (core[v]) has_core = true;
        if (!has_core) {
            if (comp.size() < 3) throw NotASubdivisionError("degree-2 component too small");
            core[comp[0]] = core[comp[1]] = core[comp[2]] = 1;
        }
    }

    std::vector<int> core_id(n, -1);
    VertexSet core_list;
    for (int v = 0; v < n; ++v)
        if (core[v]) {
            core_id[v] = static_cast<int>(core_list.size());
            core_list.push_back(v);
        }

    Graph orig(static_cast<int>(core_list.size()));
    SubdivisionMap sm;
    sm.branch_of.resize(n);
    for (int v : core_list) sm.branch_of[v] = BranchOrigin{true, core_id[v], {-1, -1}, 0};

    // Walk from each core vertex along each incident chain of degree-2
    // vertices to the next core vertex.
    std::set<std::pair<int, int>> seen_edges;  // core-id pairs already realized
    std::vector<std::vector<std::vector<int>>> chain_of(n);  // per start, found chains
    for (int v : core_list) {
        for (int w0 : g.neighbors(v)) {
            std::vector<int> chain;  // internal vertices, from v outward
            int prev = v, cur = w0;
            while (!core[cur]) {
                chain.push_back(cur);
                int nxt = -1;
                for (int x : g.neighbors(cur))
                    if (x != prev) nxt = x;
                prev = cur;
                cur = nxt;
            }
            if (cur == v) throw NotASubdivisionError("suppression would create a loop");
            int a = core_id[v], b = core_id[cur];
            if (a > b) continue;  // handle each chain once, from its lower core end
            if (a == b) throw NotASubdivisionError("suppression would create a loop");
            if (!seen_edges.insert({a, b}).second)
                throw NotASubdivisionError("suppression would create parallel edges");
            orig.add_edge(a, b);
            for (size_t i = 0; i < chain.size(); ++i)
                sm.branch_of[chain[i]] =
                    BranchOrigin{false, -1, {a, b}, static_cast<int>(i) + 1};
        }
    }
    sm.original = std::move(orig);
    sm.subdivided = g;
    return sm;
}

namespace {

// Unit-capacity flow network for internally disjoint paths: vertex x splits
// into in-node 2x and out-node 2x+1 joined by a capacity-1 arc; each graph
// edge contributes capacity-1 arcs between out- and in-nodes both ways.
struct FlowNet {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNet(int nodes) : out(nodes) {}

    void add(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    // One BFS augmenting step; returns false when no augmenting path exists.
    bool augment(int s, int t) {
        std::vector<int> pred(out.size(), -1);
        std::queue<int> q;
        q.push(s);
        std::vector<char> seen(out.size(), 0);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int a : out[v]) {
                if (arcs[a].cap <= 0) continue;
                int w = arcs[a].to;
                if (seen[w]) continue;
                seen[w] = 1;
                pred[w] = a;
                q.push(w);
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int a = pred[v];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            v = arcs[a ^ 1].to;
        }
        return true;
    }
};

}  // namespace

int internally_disjoint_paths(const Graph& g, int u, int v, int cap) {
    FlowNet net(2 * g.n());
    for (int x = 0; x < g.n(); ++x)
        if (x != u && x != v) net.add(2 * x, 2 * x + 1, 1);
    for (auto [a, b] : g.edges()) {
        net.add(2 * a + 1, 2 * b, 1);
        net.add(2 * b + 1, 2 * a, 1);
    }
    // Source is u's out-node, sink v's in-node; the direct edge uv is the
    // arc u_out -> v_in and counts as one path.
    int flow = 0;
    while (flow < cap && net.augment(2 * u + 1, 2 * v)) ++flow;
    return flow;
}

Graph robust_power(const Graph& g, int lambda) {
    if (lambda < 1) throw InvalidSpecError("robust_power needs lambda >= 1");
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (internally_disjoint_paths(g, u, v, lambda) >= lambda) out.add_edge(u, v);
    return out;
}

}  // namespace treepart
