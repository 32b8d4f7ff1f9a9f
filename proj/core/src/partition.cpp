#include "treepart/partition.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "treepart/errors.hpp"

namespace treepart {

CTreePartition finalize_partition(std::vector<int> part_of, Graph quotient,
                                  TreeDecomposition certificate, int c) {
    int nodes = quotient.n();
    std::vector<int> size(nodes, 0);
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v) {
        if (part_of[v] < 0 || part_of[v] >= nodes) throw Error("internal: bad part id");
        ++size[part_of[v]];
    }
    std::vector<int> remap(nodes, -1);
    int next = 0;
    for (int h = 0; h < nodes; ++h)
        if (size[h] > 0) remap[h] = next++;

    CTreePartition p;
    p.c = c;
    p.part_of.resize(part_of.size());
    p.parts.assign(next, {});
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v) {
        p.part_of[v] = remap[part_of[v]];
        p.parts[p.part_of[v]].push_back(v);
    }
    p.quotient = Graph(next);
    for (auto [x, y] : quotient.edges())
        if (remap[x] >= 0 && remap[y] >= 0) p.quotient.add_edge(remap[x], remap[y]);
    p.certificate.tree = certificate.tree;
    p.certificate.bags.reserve(certificate.bags.size());
    for (const auto& bag : certificate.bags) {
        VertexSet mapped;
        for (int h : bag)
            if (remap[h] >= 0) mapped.push_back(remap[h]);
        p.certificate.bags.push_back(sorted_unique(std::move(mapped)));
    }
    for (const auto& part : p.parts) p.width = std::max(p.width, static_cast<int>(part.size()));
    return p;
}

CTreePartition component_partition_c0(const Graph& g, int d) {
    auto comps = components(g);
    for (const auto& comp : comps)
        if (static_cast<int>(comp.size()) > d)
            throw ComponentTooLargeError("component with vertex " + std::to_string(comp[0]) +
                                         " has " + std::to_string(comp.size()) +
                                         " vertices > d = " + std::to_string(d));
    CTreePartition p;
    p.c = 0;
    p.part_of.assign(g.n(), -1);
    p.quotient = Graph(static_cast<int>(comps.size()));
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        for (int v : comps[i]) p.part_of[v] = i;
        p.width = std::max(p.width, static_cast<int>(comps[i].size()));
        p.certificate.bags.push_back({i});
        if (i > 0) p.certificate.tree.emplace_back(i - 1, i);
    }
    p.parts = std::move(comps);
    p.ell = p.width;
    p.f_eff = 0;
    p.bound = d;
    return p;
}

namespace {

// Grows one quotient graph and one certificate across the whole recursion.
// Recursive calls receive pre-allocated clique nodes and write their parts
// into shared state; shared vertices are assigned idempotently.
struct Recursion {
    const Graph& g;
    const TreeDecomposition& td;  // top-level decomposition, width < k
    const Covering& beta;
    const QOracle& oracle;
    const Config& cfg;
    int c;
    int k;
    std::int64_t ell;
    int t_cap;  // 12k: block-union arity used throughout

    std::vector<int> part_of;
    std::vector<std::set<int>> hadj;
    std::vector<VertexSet> cert_bags;
    std::vector<std::pair<int, int>> cert_tree;
    std::vector<std::vector<int>> blocks_containing;  // vertex -> beta block ids
    std::int64_t max_q_seen = 0;

    Recursion(const Graph& g_, const TreeDecomposition& td_, const Covering& beta_,
              const QOracle& oracle_, int c_, int k_, const Config& cfg_)
        : g(g_), td(td_), beta(beta_), oracle(oracle_), cfg(cfg_), c(c_), k(k_),
          ell(beta_.l), t_cap(12 * k_) {
        part_of.assign(g.n(), -1);
        blocks_containing.assign(g.n(), {});
        for (int b = 0; b < beta.block_count(); ++b)
            for (int v : beta.blocks[b]) blocks_containing[v].push_back(b);
        for (int v = 0; v < g.n(); ++v)
            if (blocks_containing[v].empty())
                throw InvalidSpecError("covering misses vertex " + std::to_string(v));
    }

    int new_node() {
        hadj.emplace_back();
        return static_cast<int>(hadj.size()) - 1;
    }

    void add_hedge(int x, int y) {
        if (x == y) return;
        hadj[x].insert(y);
        hadj[y].insert(x);
    }

    int new_bag(VertexSet nodes, int attach_to) {
        cert_bags.push_back(sorted_unique(std::move(nodes)));
        int id = static_cast<int>(cert_bags.size()) - 1;
        if (attach_to >= 0) cert_tree.emplace_back(attach_to, id);
        return id;
    }

    void assign(int v, int node) {
        if (part_of[v] == node) return;
        if (part_of[v] != -1) throw Error("internal: vertex " + std::to_string(v) +
                                          " assigned to two parts");
        part_of[v] = node;
    }

    void assign_all(const VertexSet& vs, int node) {
        for (int v : vs) assign(v, node);
    }

    VertexSet members_to_set(const std::vector<int>& members) const {
        VertexSet acc;
        for (int m : members) acc = set_union_of(acc, beta.blocks[m]);
        return acc;
    }

    // Residuals of the S-list restricted to the current host.
    std::vector<VertexSet> host_primes(const std::vector<std::vector<int>>& s_members,
                                       const VertexSet& host) const {
        std::vector<VertexSet> primes;
        VertexSet acc;
        for (const auto& members : s_members) {
            VertexSet si = set_intersection_of(members_to_set(members), host);
            primes.push_back(set_difference_of(si, acc));
            acc = set_union_of(acc, si);
        }
        return primes;
    }

    // Queries the oracle at the level of the full graph and clips the answer
    // to the given host component (restriction keeps disjointedness).
    VertexSet query_oracle(const std::vector<std::vector<int>>& tuple_members,
                           const VertexSet& host_component) {
        std::vector<BlockUnion> blocks;
        VertexSet removed;
        int t_actual = 1;
        for (const auto& members : tuple_members) {
            BlockUnion bu;
            bu.members = members;
            std::sort(bu.members.begin(), bu.members.end());
            bu.members.erase(std::unique(bu.members.begin(), bu.members.end()),
                             bu.members.end());
            t_actual = std::max(t_actual, static_cast<int>(bu.members.size()));
            bu.vertices = members_to_set(bu.members);
            removed = set_union_of(removed, bu.vertices);
            blocks.push_back(std::move(bu));
        }
        VertexSet rest = set_difference_of(all_vertices(g), removed);
        VertexSet x_full;
        for (auto& comp : components_within(g, rest))
            if (set_contains(comp, host_component[0])) {
                x_full = std::move(comp);
                break;
            }
        if (x_full.empty()) throw Error("internal: query component not found");
        DisjointednessQuery q = make_query(std::move(blocks), std::move(x_full));
        QWitness w = oracle.answer(q);
        if (cfg.checked) {
            std::int64_t d = oracle.bound(t_actual);
            auto report = verify_witness(
                g, q, w, static_cast<int>(std::min<std::int64_t>(d, std::numeric_limits<int>::max())));
            if (!report.pass)
                throw OracleViolationError("oracle answer failed verification: " + report.reason);
        }
        max_q_seen = std::max<std::int64_t>(max_q_seen, static_cast<std::int64_t>(w.q.size()));
        return set_intersection_of(w.q, host_component);
    }

    // host: current induced subgraph; s_members: the c-1 block-union index
    // lists; r: 4k <= |r| <= f_eff(12k); xs + y: pre-allocated clique nodes
    // (xs[i] receives the i-th residual, y the remainder of r); anchor: a
    // certificate node whose bag contains xs and y.
    // Terminates because (|host|, |host - (r ∪ S)|) drops lexicographically.
    void rec(const VertexSet& host, const std::vector<std::vector<int>>& s_members,
             const VertexSet& r, const std::vector<int>& xs, int y, int anchor) {
        auto primes = host_primes(s_members, host);
        VertexSet s_all;
        for (const auto& p : primes) s_all = set_union_of(s_all, p);
        VertexSet rest = set_difference_of(host, set_union_of(r, s_all));

        if (rest.empty()) {
            // Case 0: host = r ∪ S.
            for (int i = 0; i < c - 1; ++i) assign_all(primes[i], xs[i]);
            assign_all(set_difference_of(host, s_all), y);
            return;
        }

        if (static_cast<int>(r.size()) <= t_cap) {
            case1(host, s_members, r, xs, y, anchor);
        } else {
            case2(host, s_members, r, xs, y, anchor);
        }
    }

    void case1(const VertexSet& host, const std::vector<std::vector<int>>& s_members,
               const VertexSet& r, const std::vector<int>& xs, int y, int anchor) {
        // Greedy lowest-index block cover of r inside beta[12k].
        std::vector<int> sc_members;
        {
            std::vector<char> covered(g.n(), 0);
            for (int v : r) {
                if (covered[v]) continue;
                int b = blocks_containing[v][0];
                sc_members.push_back(b);
                for (int u : beta.blocks[b]) covered[u] = 1;
            }
        }
        auto full_members = s_members;
        full_members.push_back(sc_members);
        auto primes = host_primes(full_members, host);

        std::vector<int> full_xs = xs;
        full_xs.push_back(y);
        for (int i = 0; i < c; ++i) assign_all(primes[i], full_xs[i]);

        VertexSet removed_host;
        for (const auto& p : primes) removed_host = set_union_of(removed_host, p);
        VertexSet rest = set_difference_of(host, removed_host);

        for (const auto& comp : components_within(g, rest)) {
            if (static_cast<int>(comp.size()) < 4 * k) {
                int z = new_node();
                for (int x : full_xs) add_hedge(z, x);
                VertexSet bag(full_xs.begin(), full_xs.end());
                bag.push_back(z);
                new_bag(std::move(bag), anchor);
                assign_all(comp, z);
                continue;
            }

            VertexSet q = query_oracle(full_members, comp);

            // Components of comp - q go to the lowest residual whose
            // neighborhood they avoid.
            std::vector<VertexSet> prime_nbs;
            for (const auto& p : primes) prime_nbs.push_back(neighborhood(g, p));
            auto pieces = components_within(g, set_difference_of(comp, q));
            std::vector<VertexSet> groups(c);
            for (const auto& piece : pieces) {
                int chosen = -1;
                for (int i = 0; i < c; ++i)
                    if (!sets_intersect(piece, prime_nbs[i])) {
                        chosen = i;
                        break;
                    }
                if (chosen < 0)
                    throw OracleViolationError(
                        "component survives every residual neighborhood; covering is not "
                        "(c,f)-disjointed");
                groups[chosen] = set_union_of(groups[chosen], piece);
            }

            // Pad q to at least 4k vertices inside the component.
            VertexSet padded = q;
            for (int v : comp) {
                if (static_cast<int>(padded.size()) >= 4 * k) break;
                if (!set_contains(padded, v)) padded.push_back(v);
            }
            std::sort(padded.begin(), padded.end());

            int yj = new_node();
            for (int x : full_xs) add_hedge(yj, x);
            VertexSet bag(full_xs.begin(), full_xs.end());
            bag.push_back(yj);
            int anchor_j = new_bag(std::move(bag), anchor);
            assign_all(padded, yj);

            for (int i = 0; i < c; ++i) {
                VertexSet fi = set_union_of(groups[i], padded);
                for (int m = 0; m < c; ++m)
                    if (m != i) fi = set_union_of(fi, primes[m]);
                std::vector<std::vector<int>> child_members;
                std::vector<int> child_xs;
                for (int m = 0; m < c; ++m)
                    if (m != i) {
                        child_members.push_back(full_members[m]);
                        child_xs.push_back(full_xs[m]);
                    }
                rec(fi, child_members, padded, child_xs, yj, anchor_j);
            }
        }
    }

    void case2(const VertexSet& host, const std::vector<std::vector<int>>& s_members,
               const VertexSet& r, const std::vector<int>& xs, int y, int anchor) {
        Separation sep = balanced_separator_within(g, td, host, r);
        if (sep.a.empty() || sep.b.empty())
            throw Error("internal: degenerate separation in case 2");
        VertexSet host1 = set_union_of(sep.a, sep.c);
        VertexSet host2 = set_union_of(sep.b, sep.c);
        VertexSet r1 = set_union_of(set_intersection_of(r, sep.a), sep.c);
        VertexSet r2 = set_union_of(set_intersection_of(r, sep.b), sep.c);
        rec(host1, s_members, r1, xs, y, anchor);
        rec(host2, s_members, r2, xs, y, anchor);
    }
};

}  // namespace

CTreePartition compute_partition(const Graph& g, const TreeDecomposition& td,
                                 const Covering& beta, const QOracle& oracle, int c,
                                 const Config& cfg) {
    if (c < 1) throw InvalidSpecError("compute_partition needs c >= 1");
    if (oracle.arity() != c)
        throw InvalidSpecError("oracle arity " + std::to_string(oracle.arity()) +
                               " does not match c = " + std::to_string(c));
    if (g.n() == 0) {
        CTreePartition p;
        p.c = c;
        return p;
    }
    int width = validate_td(g, td);
    int k = width + 1;
    if (k < 1) k = 1;
    std::int64_t ell = std::max(1, beta.l);
    for (const auto& block : beta.blocks)
        if (static_cast<std::int64_t>(block.size()) > ell)
            throw InvalidSpecError("covering block exceeds declared l");

    if (g.n() < 4 * k) {
        // Trivial partition {V(G)}.
        CTreePartition p;
        p.c = c;
        p.part_of.assign(g.n(), 0);
        p.parts = {all_vertices(g)};
        p.quotient = Graph(1);
        p.certificate.bags = {{0}};
        p.width = g.n();
        p.k = k;
        p.ell = ell;
        p.f_eff = std::max<std::int64_t>(oracle.bound(12 * k), 4 * k);
        p.bound = std::max<std::int64_t>(12 * ell * k, 2 * c * ell * p.f_eff);
        return p;
    }

    Recursion rec(g, td, beta, oracle, c, k, cfg);

    std::vector<int> xs;
    for (int i = 0; i < c - 1; ++i) xs.push_back(rec.new_node());
    int y = rec.new_node();
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i + 1; j < xs.size(); ++j) rec.add_hedge(xs[i], xs[j]);
        rec.add_hedge(xs[i], y);
    }
    VertexSet root_bag(xs.begin(), xs.end());
    root_bag.push_back(y);
    int anchor = rec.new_bag(std::move(root_bag), -1);

    VertexSet r;
    for (int v = 0; v < 4 * k; ++v) r.push_back(v);
    std::vector<std::vector<int>> s_members;
    for (int i = 0; i < c - 1; ++i)
        s_members.push_back({std::min(i, beta.block_count() - 1)});

    rec.rec(all_vertices(g), s_members, r, xs, y, anchor);

    for (int v = 0; v < g.n(); ++v)
        if (rec.part_of[v] < 0) throw Error("internal: vertex left unassigned");

    Graph quotient(static_cast<int>(rec.hadj.size()));
    for (int x = 0; x < quotient.n(); ++x)
        for (int z : rec.hadj[x])
            if (x < z) quotient.add_edge(x, z);
    TreeDecomposition cert;
    cert.bags = std::move(rec.cert_bags);
    cert.tree = std::move(rec.cert_tree);

    CTreePartition p = finalize_partition(std::move(rec.part_of), std::move(quotient),
                                          std::move(cert), c);
    p.k = k;
    p.ell = ell;
    p.f_eff = std::max({static_cast<std::int64_t>(4 * k), rec.max_q_seen,
                        oracle.bound(12 * k)});
    p.bound = std::max<std::int64_t>(12 * ell * k, 2 * c * ell * p.f_eff);
    if (p.width > p.bound) throw Error("internal: width exceeds the guaranteed bound");
    return p;
}

CTreePartition compute_partition_cd(const Graph& g, const TreeDecomposition& td,
                                    const Covering& beta,
                                    std::shared_ptr<const QOracle> base, int c,
                                    const Config& cfg) {
    auto lifted = lift_oracle(std::move(base), g, beta);
    return compute_partition(g, td, beta, *lifted, c, cfg);
}

void write_partition(std::ostream& out, const CTreePartition& p) {
    out << "[parts]\n";
    for (int i = 0; i < p.part_count(); ++i) {
        out << i << ':';
        for (int v : p.parts[i]) out << ' ' << v;
        out << '\n';
    }
    out << "[quotient]\n";
    out << p.quotient.n() << ' ' << p.quotient.m() << '\n';
    for (auto [x, y] : p.quotient.edges()) out << x << ' ' << y << '\n';
    out << "[certificate]\n";
    write_td(out, p.certificate);
    out << "[meta]\n";
    out << "c " << p.c << '\n';
    out << "width " << p.width << '\n';
    out << "k " << p.k << '\n';
    out << "ell " << p.ell << '\n';
    out << "f_eff " << p.f_eff << '\n';
    out << "bound " << p.bound << '\n';
    for (const auto& f : p.flags) out << "flag " << f << '\n';
}

CTreePartition read_partition(std::istream& in) {
    CTreePartition p;
    std::string line, section;
    std::vector<std::pair<int, VertexSet>> parts;
    std::stringstream quotient_text, cert_text;
    std::vector<std::pair<std::string, std::string>> meta;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '[') {
            section = line;
            continue;
        }
        if (line.empty()) continue;
        if (section == "[parts]") {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw FormatError("part line without ':'");
            int id = std::stoi(line.substr(0, colon));
            std::istringstream ls(line.substr(colon + 1));
            VertexSet vs;
            int v;
            while (ls >> v) vs.push_back(v);
            parts.emplace_back(id, sorted_unique(std::move(vs)));
        } else if (section == "[quotient]") {
            quotient_text << line << '\n';
        } else if (section == "[certificate]") {
            cert_text << line << '\n';
        } else if (section == "[meta]") {
            std::istringstream ls(line);
            std::string key, value;
            ls >> key;
            std::getline(ls, value);
            if (!value.empty() && value[0] == ' ') value.erase(0, 1);
            meta.emplace_back(key, value);
        } else {
            throw FormatError("content outside any section");
        }
    }
    std::sort(parts.begin(), parts.end());
    int max_v = -1;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
        if (parts[i].first != i) throw FormatError("part ids must be dense from 0");
        for (int v : parts[i].second) max_v = std::max(max_v, v);
        p.parts.push_back(parts[i].second);
        p.width = std::max(p.width, static_cast<int>(parts[i].second.size()));
    }
    p.part_of.assign(max_v + 1, -1);
    for (int i = 0; i < p.part_count(); ++i)
        for (int v : p.parts[i]) {
            if (p.part_of[v] != -1) throw FormatError("parts overlap at " + std::to_string(v));
            p.part_of[v] = i;
        }
    for (int v = 0; v <= max_v; ++v)
        if (p.part_of[v] == -1) throw FormatError("vertex " + std::to_string(v) + " in no part");
    p.quotient = read_graph(quotient_text);
    p.certificate = read_td(cert_text);
    for (auto& [key, value] : meta) {
        if (key == "c") p.c = std::stoi(value);
        else if (key == "width") { /* recomputed */ }
        else if (key == "k") p.k = std::stoll(value);
        else if (key == "ell") p.ell = std::stoll(value);
        else if (key == "f_eff") p.f_eff = std::stoll(value);
        else if (key == "bound") p.bound = std::stoll(value);
        else if (key == "flag") p.flags.push_back(value);
        else throw FormatError("unknown meta key: " + key);
    }
    return p;
}

void save_partition(const std::string& path, const CTreePartition& p) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    write_partition(out, p);
}

CTreePartition load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open: " + path);
    return read_partition(in);
}

}  // namespace treepart
