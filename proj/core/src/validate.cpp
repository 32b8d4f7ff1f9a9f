#include "treepart/validate.hpp"

#include <algorithm>
#include <sstream>

#include "treepart/errors.hpp"
#include "treepart/treewidth.hpp"

namespace treepart {

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    out << (valid ? "valid" : "INVALID") << " width=" << width
        << " quotient_tw_ok=" << (quotient_tw_ok ? "yes" : "no");
    for (const auto& [kind, witness] : violations) out << "\n  " << kind << ": " << witness;
    return out.str();
}

ValidationReport validate_partition(const Graph& g, const CTreePartition& p) {
    ValidationReport rep;
    auto bad = [&](const std::string& kind, const std::string& witness) {
        rep.violations.emplace_back(kind, witness);
    };

    if (static_cast<int>(p.part_of.size()) != g.n())
        bad("shape", "part_of covers " + std::to_string(p.part_of.size()) + " vertices, graph has " +
                         std::to_string(g.n()));

    std::vector<int> seen_in(g.n(), -1);
    for (int i = 0; i < p.part_count(); ++i) {
        if (p.parts[i].empty()) bad("empty-part", "part " + std::to_string(i));
        for (int v : p.parts[i]) {
            if (v < 0 || v >= g.n()) {
                bad("range", "part " + std::to_string(i) + " holds vertex " + std::to_string(v));
                continue;
            }
            if (seen_in[v] != -1)
                bad("overlap", "vertex " + std::to_string(v) + " in parts " +
                                   std::to_string(seen_in[v]) + " and " + std::to_string(i));
            seen_in[v] = i;
        }
        rep.width = std::max(rep.width, static_cast<int>(p.parts[i].size()));
    }
    for (int v = 0; v < g.n(); ++v) {
        if (seen_in[v] == -1) bad("coverage", "vertex " + std::to_string(v) + " in no part");
        if (v < static_cast<int>(p.part_of.size()) && p.part_of[v] != seen_in[v])
            bad("index", "part_of[" + std::to_string(v) + "] disagrees with parts");
    }

    if (p.quotient.n() != p.part_count())
        bad("quotient-shape", "quotient has " + std::to_string(p.quotient.n()) +
                                  " nodes for " + std::to_string(p.part_count()) + " parts");

    for (auto [u, v] : g.edges()) {
        if (u >= static_cast<int>(p.part_of.size()) || v >= static_cast<int>(p.part_of.size()))
            continue;
        int x = p.part_of[u], y = p.part_of[v];
        if (x == y) continue;
        if (x < 0 || y < 0 || x >= p.quotient.n() || y >= p.quotient.n() ||
            !p.quotient.has_edge(x, y))
            bad("edge-compat", "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " crosses parts " + std::to_string(x) + "," +
                                   std::to_string(y) + " with no quotient edge");
    }

    if (p.c == 0 && p.quotient.m() > 0) bad("c0-quotient", "quotient must be edgeless at c = 0");

    try {
        int w = validate_td(p.quotient, p.certificate);
        if (w > p.c)
            bad("certificate-width",
                "width " + std::to_string(w) + " exceeds c = " + std::to_string(p.c));
        else
            rep.quotient_tw_ok = true;
    } catch (const InvalidDecompositionError& e) {
        bad("certificate", e.what());
    }

    rep.valid = rep.violations.empty() && rep.quotient_tw_ok;
    return rep;
}

Observation1Report observation1_audit(const Graph& g, const CTreePartition& p,
                                      const Config& cfg) {
    Observation1Report rep;
    rep.partition_width = p.width;
    ValidationReport v = validate_partition(g, p);
    if (!v.valid) {
        rep.detail = "partition invalid: " + v.to_string();
        return rep;
    }
    TreeDecomposition composed;
    composed.tree = p.certificate.tree;
    for (const auto& bag : p.certificate.bags) {
        VertexSet u;
        for (int h : bag) u = set_union_of(u, p.parts[h]);
        composed.bags.push_back(std::move(u));
    }
    int w;
    try {
        w = validate_td(g, composed);
    } catch (const InvalidDecompositionError& e) {
        rep.detail = std::string("composed decomposition invalid: ") + e.what();
        return rep;
    }
    rep.composed_width = w;
    long long cap = static_cast<long long>(p.c + 1) * p.width - 1;
    if (w > cap) {
        rep.detail = "composed width " + std::to_string(w) + " exceeds (c+1)*width-1 = " +
                     std::to_string(cap);
        return rep;
    }
    if (g.n() <= cfg.tw_exact_budget && g.n() <= 26) {
        int tw = exact_treewidth(g, cfg).width;
        if (tw > cap) {
            rep.detail = "tw exceeds (c+1)*width-1";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace treepart
