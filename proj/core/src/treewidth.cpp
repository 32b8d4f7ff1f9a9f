#include "treepart/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "treepart/errors.hpp"

namespace treepart {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::vector<std::vector<int>> TreeDecomposition::tree_adjacency() const {
    std::vector<std::vector<int>> adj(node_count());
    for (auto [x, y] : tree) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    return adj;
}

TreeDecomposition TreeDecomposition::restricted(const VertexSet& keep) const {
    TreeDecomposition out;
    out.tree = tree;
    out.bags.reserve(bags.size());
    for (const auto& bag : bags) out.bags.push_back(set_intersection_of(bag, keep));
    return out;
}

int validate_td(const Graph& g, const TreeDecomposition& td) {
    int t = td.node_count();
    if (t == 0) {
        if (g.n() != 0)
            throw InvalidDecompositionError("empty decomposition for a non-empty graph");
        return -1;
    }
    if (static_cast<int>(td.tree.size()) != t - 1)
        throw InvalidDecompositionError("tree must have exactly t-1 edges");
    for (auto [x, y] : td.tree)
        if (x < 0 || y < 0 || x >= t || y >= t || x == y)
            throw InvalidDecompositionError("bad tree edge");
    auto adj = td.tree_adjacency();
    {
        std::vector<char> seen(t, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++reached;
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
        if (reached != t) throw InvalidDecompositionError("tree is disconnected");
    }
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= g.n())
                throw InvalidDecompositionError("bag vertex out of range");

    // condition (i): every edge inside some bag
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (set_contains(bag, u) && set_contains(bag, v)) {
                covered = true;
                break;
            }
        if (!covered)
            throw InvalidDecompositionError("edge-coverage: edge " + std::to_string(u) + " " +
                                            std::to_string(v) + " in no bag");
    }

    // condition (ii): every vertex's trace is a nonempty connected subtree
    std::vector<std::vector<int>> nodes_of(g.n());
    for (int x = 0; x < t; ++x)
        for (int v : td.bags[x]) nodes_of[v].push_back(x);
    for (int v = 0; v < g.n(); ++v) {
        if (nodes_of[v].empty())
            throw InvalidDecompositionError("vertex " + std::to_string(v) + " in no bag");
        std::vector<char> in_trace(t, 0), seen(t, 0);
        for (int x : nodes_of[v]) in_trace[x] = 1;
        std::queue<int> q;
        q.push(nodes_of[v][0]);
        seen[nodes_of[v][0]] = 1;
        int reached = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++reached;
            for (int y : adj[x])
                if (in_trace[y] && !seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
        if (reached != static_cast<int>(nodes_of[v].size()))
            throw InvalidDecompositionError("trace of vertex " + std::to_string(v) +
                                            " is disconnected");
    }
    return td.width();
}

namespace {

using Mask = std::uint32_t;

// Back-degree of v when eliminated right after the prefix `s`: the vertices
// outside s+{v} reachable from v through s.
int back_degree(const std::vector<Mask>& adj, Mask s, int v) {
    Mask out = adj[v];
    Mask reach = 0;
    Mask frontier = adj[v] & s;
    while (frontier) {
        reach |= frontier;
        Mask acc = 0;
        Mask f = frontier;
        while (f) {
            int x = std::countr_zero(f);
            f &= f - 1;
            acc |= adj[x];
        }
        out |= acc;
        frontier = acc & s & ~reach;
    }
    out &= ~s;
    out &= ~(Mask{1} << v);
    return std::popcount(out);
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, const Config& cfg) {
    int n = g.n();
    if (n > cfg.tw_exact_budget || n > 26)
        throw TooLargeError("exact treewidth budget is n <= " +
                            std::to_string(std::min(cfg.tw_exact_budget, 26)) + ", got " +
                            std::to_string(n));
    if (n == 0) return {-1, {}};

    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }

    const Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
    std::vector<std::uint8_t> choice(std::size_t{1} << n, 0);
    for (Mask s = 1; s <= full; ++s) {
        int best = 255, best_v = -1;
        Mask it = s;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            Mask prev = s & ~(Mask{1} << v);
            int cost = std::max<int>(f[prev], back_degree(adj, prev, v));
            if (cost < best) {
                best = cost;
                best_v = v;
            }
        }
        f[s] = static_cast<std::uint8_t>(best);
        choice[s] = static_cast<std::uint8_t>(best_v);
    }

    std::vector<int> order(n);
    Mask s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(Mask{1} << order[i]);
    }
    TreewidthResult res{f[full], td_from_elimination(g, order)};
    return res;
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) return td;
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;

    td.bags.resize(n);
    std::vector<std::vector<int>> later(n);  // bag minus the eliminated vertex
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        later[i] = nb;
        VertexSet bag = nb;
        bag.push_back(v);
        td.bags[i] = sorted_unique(std::move(bag));
        // eliminate: neighbors become a clique, v disappears
        for (int a : nb) adj[a].erase(v);
        for (size_t x = 0; x < nb.size(); ++x)
            for (size_t y = x + 1; y < nb.size(); ++y) {
                adj[nb[x]].insert(nb[y]);
                adj[nb[y]].insert(nb[x]);
            }
    }
    for (int i = 0; i < n; ++i) {
        if (later[i].empty()) {
            if (i + 1 < n) td.tree.emplace_back(i, i + 1);
            continue;
        }
        int parent = *std::min_element(later[i].begin(), later[i].end(),
                                       [&](int a, int b) { return position[a] < position[b]; });
        td.tree.emplace_back(i, position[parent]);
    }
    return td;
}

TreeDecomposition heuristic_td(const Graph& g) {
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            for (size_t x = 0; x < nb.size(); ++x)
                for (size_t y = x + 1; y < nb.size(); ++y)
                    if (!adj[nb[x]].count(nb[y])) ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        order.push_back(best);
        gone[best] = 1;
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (int a : nb) adj[a].erase(best);
        for (size_t x = 0; x < nb.size(); ++x)
            for (size_t y = x + 1; y < nb.size(); ++y) {
                adj[nb[x]].insert(nb[y]);
                adj[nb[y]].insert(nb[x]);
            }
        adj[best].clear();
    }
    return td_from_elimination(g, order);
}

TreeDecomposition auto_td(const Graph& g, const Config& cfg) {
    if (g.n() <= cfg.tw_exact_budget && g.n() <= 26) return exact_treewidth(g, cfg).td;
    return heuristic_td(g);
}

namespace {

struct BinResult {
    VertexSet a, b;
    long long wa = 0, wb = 0, largest = 0;
    bool ok = false;
};

BinResult bin_components(const Graph& g, const VertexSet& host, const VertexSet& bag,
                         const VertexSet& r) {
    BinResult res;
    VertexSet rest = set_difference_of(host, bag);
    auto pieces = components_within(g, rest);
    std::vector<std::pair<long long, int>> weights;  // (R-weight, piece index)
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
        weights.emplace_back(
            static_cast<long long>(set_intersection_of(pieces[i], r).size()), i);
    std::stable_sort(weights.begin(), weights.end(), [](const auto& x, const auto& y) {
        return x.first > y.first;  // descending weight; stable keeps min-vertex order
    });
    for (auto [w, i] : weights) {
        res.largest = std::max(res.largest, w);
        if (res.wa <= res.wb) {
            res.a.insert(res.a.end(), pieces[i].begin(), pieces[i].end());
            res.wa += w;
        } else {
            res.b.insert(res.b.end(), pieces[i].begin(), pieces[i].end());
            res.wb += w;
        }
    }
    std::sort(res.a.begin(), res.a.end());
    std::sort(res.b.begin(), res.b.end());
    long long r_outside = static_cast<long long>(set_difference_of(r, bag).size());
    res.ok = (3 * res.wa <= 2 * r_outside) && (3 * res.wb <= 2 * r_outside);
    return res;
}

}  // namespace

Separation balanced_separator_within(const Graph& g, const TreeDecomposition& td,
                                     const VertexSet& host, const VertexSet& r) {
    if (r.empty()) throw InvalidSpecError("balanced_separator: R must be nonempty");
    VertexSet r_host = set_intersection_of(r, host);
    int best_node = -1;
    long long best_largest = -1;
    BinResult best;
    for (int x = 0; x < td.node_count(); ++x) {
        VertexSet bag = set_intersection_of(td.bags[x], host);
        BinResult cand = bin_components(g, host, bag, r_host);
        if (!cand.ok) continue;
        if (best_node < 0 || cand.largest < best_largest) {
            best_node = x;
            best_largest = cand.largest;
            best = std::move(cand);
        }
    }
    if (best_node < 0)
        throw NoBalancedBagError("no bag yields a balanced separation");
    Separation sep;
    sep.a = std::move(best.a);
    sep.b = std::move(best.b);
    sep.c = set_intersection_of(td.bags[best_node], host);
    return sep;
}

Separation balanced_separator(const Graph& g, const TreeDecomposition& td, const VertexSet& r) {
    return balanced_separator_within(g, td, all_vertices(g), r);
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
    out << td.node_count() << ' ' << td.node_count() << '\n';
    for (int x = 0; x < td.node_count(); ++x) {
        out << x << ':';
        for (int v : td.bags[x]) out << ' ' << v;
        out << '\n';
    }
    for (auto [x, y] : td.tree) out << x << ' ' << y << '\n';
}

TreeDecomposition read_td(std::istream& in) {
    int t, b;
    if (!(in >> t >> b)) throw FormatError("missing decomposition header");
    std::string line;
    std::getline(in, line);
    TreeDecomposition td;
    td.bags.resize(t);
    for (int i = 0; i < b; ++i) {
        if (!std::getline(in, line)) throw FormatError("missing bag line");
        auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("bag line without ':'");
        int node = std::stoi(line.substr(0, colon));
        if (node < 0 || node >= t) throw FormatError("bag node out of range");
        std::istringstream ls(line.substr(colon + 1));
        VertexSet bag;
        int v;
        while (ls >> v) bag.push_back(v);
        td.bags[node] = sorted_unique(std::move(bag));
    }
    for (int i = 0; i + 1 < t; ++i) {
        int x, y;
        if (!(in >> x >> y)) throw FormatError("missing tree edge");
        td.tree.emplace_back(x, y);
    }
    return td;
}

}  // namespace treepart
