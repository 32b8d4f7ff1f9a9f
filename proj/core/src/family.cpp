#include "treepart/family.hpp"

#include <map>
#include <sstream>

#include "treepart/errors.hpp"

namespace treepart {

namespace {

const std::map<std::string, std::pair<FamilyKind, int>>& kind_table() {
    // name -> (kind, parameter count)
    static const std::map<std::string, std::pair<FamilyKind, int>> table = {
        {"path", {FamilyKind::Path, 1}},
        {"cycle", {FamilyKind::Cycle, 1}},
        {"star", {FamilyKind::Star, 1}},
        {"complete", {FamilyKind::Complete, 1}},
        {"complete_bipartite", {FamilyKind::CompleteBipartite, 2}},
        {"grid", {FamilyKind::Grid, 2}},
        {"spider", {FamilyKind::Spider, 2}},
        {"fan", {FamilyKind::Fan, 1}},
        {"gcl", {FamilyKind::Gcl, 2}},
        {"ccl", {FamilyKind::Ccl, 2}},
        {"spider_lb", {FamilyKind::SpiderLb, 2}},
        {"clump_gadget", {FamilyKind::ClumpGadget, 2}},
    };
    return table;
}

std::string kind_name(FamilyKind k) {
    for (const auto& [name, entry] : kind_table())
        if (entry.first == k) return name;
    return "?";
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidSpecError(msg);
}

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// G_{1,l} = P_{l+1}, C_{1,l} built as hat(l K_1) so both recursions share the
// same shape: level c is add_dominant(disjoint_copies(level c-1, l)).
Graph make_gcl(int c, int l) {
    Graph g = make_path(l + 1);
    for (int level = 2; level <= c; ++level) g = add_dominant(disjoint_copies(g, l));
    return g;
}

Graph make_ccl(int c, int l) {
    Graph g(1);
    g.set_label(0, "leaf");
    for (int level = 1; level <= c; ++level) g = add_dominant(disjoint_copies(g, l));
    return g;
}

// J_{c,N}: path p_1..p_{N+1} (ids 0..N); for each path edge i, a copy X_i of
// (2N-1) C_{c-1,N} dominated by both endpoints. C_{0,N} is the single vertex.
Graph make_spider_lb(int c, int bigN) {
    Graph block = (c >= 2) ? make_ccl(c - 1, bigN) : Graph(1);
    int bn = block.n();
    int copies = 2 * bigN - 1;
    Graph g(bigN + 1 + bigN * copies * bn);
    for (int i = 0; i + 1 <= bigN; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i <= bigN; ++i) g.set_label(i, "p " + std::to_string(i + 1));
    int base = bigN + 1;
    for (int e = 0; e < bigN; ++e) {  // path edge (e, e+1)
        for (int cp = 0; cp < copies; ++cp) {
            for (auto [u, v] : block.edges()) g.add_edge(base + u, base + v);
            for (int u = 0; u < bn; ++u) {
                g.add_edge(e, base + u);
                g.add_edge(e + 1, base + u);
                g.set_label(base + u, "copy " + std::to_string(cp) + " of C at edge " +
                                          std::to_string(e));
            }
            base += bn;
        }
    }
    return g;
}

// Clique v_1..v_{t-1} (ids 0..t-2) over a path x_1..x_n (ids t-1..t-2+n);
// v_i x_j is an edge whenever j ≡ i (mod t-1), indices 1-based.
Graph make_clump_gadget(int t, int n) {
    Graph g(t - 1 + n);
    for (int i = 0; i < t - 1; ++i) {
        g.set_label(i, "clique " + std::to_string(i + 1));
        for (int j = i + 1; j < t - 1; ++j) g.add_edge(i, j);
    }
    for (int j = 1; j <= n; ++j) {
        int x = t - 2 + j;
        g.set_label(x, "path " + std::to_string(j));
        if (j < n) g.add_edge(x, x + 1);
        int residue = j % (t - 1);
        int i = (residue == 0) ? t - 1 : residue;  // the clique vertex with i ≡ j
        g.add_edge(i - 1, x);
    }
    return g;
}

}  // namespace

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << kind_name(kind);
    for (int p : params) out << ' ' << p;
    return out.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string name;
    if (!(in >> name)) throw InvalidSpecError("empty family spec");
    auto it = kind_table().find(name);
    if (it == kind_table().end()) throw InvalidSpecError("unknown family: " + name);
    FamilySpec spec{it->second.first, {}};
    int p;
    while (in >> p) spec.params.push_back(p);
    if (static_cast<int>(spec.params.size()) != it->second.second)
        throw InvalidSpecError("family " + name + " takes " +
                               std::to_string(it->second.second) + " parameter(s)");
    return spec;
}

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Path:
            require(p[0] >= 1, "path needs n >= 1");
            return make_path(p[0]);
        case FamilyKind::Cycle: {
            require(p[0] >= 3, "cycle needs n >= 3");
            Graph g = make_path(p[0]);
            g.add_edge(0, p[0] - 1);
            return g;
        }
        case FamilyKind::Star: {
            require(p[0] >= 1, "star needs s >= 1");
            Graph g(p[0] + 1);
            g.set_label(0, "center");
            for (int i = 1; i <= p[0]; ++i) g.add_edge(0, i);
            return g;
        }
        case FamilyKind::Complete:
            require(p[0] >= 1, "complete needs n >= 1");
            return make_complete(p[0]);
        case FamilyKind::CompleteBipartite: {
            require(p[0] >= 1 && p[1] >= 1, "complete_bipartite needs s,t >= 1");
            Graph g(p[0] + p[1]);
            for (int i = 0; i < p[0]; ++i)
                for (int j = 0; j < p[1]; ++j) g.add_edge(i, p[0] + j);
            return g;
        }
        case FamilyKind::Grid: {
            require(p[0] >= 1 && p[1] >= 1, "grid needs a,b >= 1");
            int a = p[0], b = p[1];
            Graph g(a * b);
            for (int r = 0; r < a; ++r)
                for (int c = 0; c < b; ++c) {
                    if (c + 1 < b) g.add_edge(r * b + c, r * b + c + 1);
                    if (r + 1 < a) g.add_edge(r * b + c, (r + 1) * b + c);
                }
            return g;
        }
        case FamilyKind::Spider: {
            // Center id 0; leg j occupies ids 1+j*t .. (j+1)*t, outward.
            require(p[0] >= 2, "spider needs s >= 2");
            require(p[1] >= 1, "spider needs t >= 1");
            int s = p[0], t = p[1];
            Graph g(1 + s * t);
            g.set_label(0, "center");
            for (int j = 0; j < s; ++j) {
                int prev = 0;
                for (int a = 0; a < t; ++a) {
                    int v = 1 + j * t + a;
                    g.add_edge(prev, v);
                    g.set_label(v, "leg " + std::to_string(j) + " pos " + std::to_string(a + 1));
                    prev = v;
                }
            }
            return g;
        }
        case FamilyKind::Fan: {
            require(p[0] >= 1, "fan needs l >= 1");
            return add_dominant(make_path(p[0]));
        }
        case FamilyKind::Gcl:
            require(p[0] >= 1 && p[1] >= 1, "gcl needs c,l >= 1");
            return make_gcl(p[0], p[1]);
        case FamilyKind::Ccl:
            require(p[0] >= 1 && p[1] >= 1, "ccl needs c,l >= 1");
            return make_ccl(p[0], p[1]);
        case FamilyKind::SpiderLb:
            require(p[0] >= 1 && p[1] >= 1, "spider_lb needs c,N >= 1");
            return make_spider_lb(p[0], p[1]);
        case FamilyKind::ClumpGadget:
            require(p[0] >= 2 && p[1] >= 1, "clump_gadget needs t >= 2, n >= 1");
            return make_clump_gadget(p[0], p[1]);
    }
    throw InvalidSpecError("unhandled family kind");
}

Graph disjoint_copies(const Graph& g, int l) {
    if (l < 1) throw InvalidSpecError("disjoint_copies needs l >= 1");
    int n = g.n();
    Graph out(n * l);
    for (int i = 0; i < l; ++i) {
        for (auto [u, v] : g.edges()) out.add_edge(i * n + u, i * n + v);
        if (g.has_labels())
            for (int v = 0; v < n; ++v)
                if (!g.label(v).empty())
                    out.set_label(i * n + v,
                                  "copy " + std::to_string(i) + ": " + g.label(v));
    }
    return out;
}

Graph add_dominant(const Graph& g) {
    Graph out = g;
    int d = out.add_vertex();
    for (int v = 0; v < d; ++v) out.add_edge(v, d);
    out.set_label(d, "dominant");
    return out;
}

}  // namespace treepart
