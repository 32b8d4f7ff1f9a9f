#pragma once

#include <optional>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"
#include "treepart/partition.hpp"

namespace treepart {

// Exact c-tree-partition-width by restricted-growth enumeration of vertex
// partitions with an increasing part-size cap; quotient treewidth is checked
// with the exact solver. Budget: n <= cfg.brute_n_budget.
int brute_min_tpw(const Graph& g, int c, const Config& cfg = Config::defaults());

// Same search, returning a realizing partition with a certified quotient.
CTreePartition brute_min_tpw_witness(const Graph& g, int c,
                                     const Config& cfg = Config::defaults());

struct RainbowAuditResult {
    bool pass = true;
    std::optional<std::vector<int>> counterexample;  // part_of with no rainbow clique
};

// Checks that every partition into parts of size <= l has a (c+1)-clique
// with all vertices in distinct parts.
RainbowAuditResult rainbow_clique_audit(const Graph& g, int c, int l,
                                        const Config& cfg = Config::defaults());

}  // namespace treepart
