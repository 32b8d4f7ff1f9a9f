#include "treepart/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "treepart/errors.hpp"

namespace treepart {

VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

int Graph::m() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw InvalidSpecError("loops are not allowed");
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw InvalidSpecError("edge endpoint out of range");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;  // already present
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n() || u == v) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    if (!labels_.empty()) labels_.emplace_back();
    return n() - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty() || v < 0 || v >= n()) return empty;
    return labels_[v];
}

void Graph::set_label(int v, std::string text) {
    if (v < 0 || v >= n()) throw InvalidSpecError("label vertex out of range");
    if (labels_.empty()) labels_.resize(n());
    labels_[v] = std::move(text);
}

Graph Graph::induced(const VertexSet& keep) const {
    Graph sub(static_cast<int>(keep.size()));
    std::vector<int> pos(n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos[keep[i]] = i;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int w : adj_[keep[i]])
            if (pos[w] > i) sub.add_edge(i, pos[w]);
    if (!labels_.empty())
        for (int i = 0; i < static_cast<int>(keep.size()); ++i)
            sub.set_label(i, labels_[keep[i]]);
    return sub;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, all_vertices(g));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub) {
    std::vector<char> in_sub(g.n(), 0), seen(g.n(), 0);
    for (int v : sub) in_sub[v] = 1;
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int root : sub) {
        if (seen[root]) continue;
        VertexSet comp;
        stack.push_back(root);
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in_sub[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    VertexSet out;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (!in_s[w]) out.push_back(w);
    return sorted_unique(std::move(out));
}

VertexSet neighborhood_within(const Graph& g, const VertexSet& s, const VertexSet& host) {
    return set_intersection_of(neighborhood(g, s), host);
}

VertexSet all_vertices(const Graph& g) {
    VertexSet v(g.n());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v)
            if (!g.label(v).empty()) out << "# label " << v << ' ' << g.label(v) << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    Graph g;
    int edges_read = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) continue;  // skip leading blank/comment lines
            if (n < 0 || m < 0) throw FormatError("bad graph header");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) continue;
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw FormatError("bad edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
        ++edges_read;
    }
    if (n < 0) throw FormatError("missing graph header");
    if (edges_read != m) throw FormatError("edge count mismatch");
    return g;
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    write_graph(out, g);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open: " + path);
    return read_graph(in);
}

}  // namespace treepart
