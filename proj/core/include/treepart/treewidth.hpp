#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"

namespace treepart {

// Bag-labelled tree. Nodes are 0..node_count-1; `tree` holds the tree edges.
// Empty decomposition (no nodes) certifies the empty graph.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    std::vector<std::vector<int>> tree_adjacency() const;

    // Restriction to an induced subgraph: bags intersected with `keep`,
    // tree unchanged. Valid for g[keep] whenever this is valid for g.
    TreeDecomposition restricted(const VertexSet& keep) const;
};

// Checks edge coverage, connected vertex traces, and tree shape; returns the
// width. Throws InvalidDecompositionError naming the violated condition.
int validate_td(const Graph& g, const TreeDecomposition& td);

struct TreewidthResult {
    int width;
    TreeDecomposition td;
};

// Exact treewidth by the subset DP over elimination prefixes. Budget:
// n <= cfg.tw_exact_budget (default 20); throws TooLargeError beyond it.
TreewidthResult exact_treewidth(const Graph& g, const Config& cfg = Config::defaults());

// Min-fill elimination ordering; always valid, width >= tw(G).
TreeDecomposition heuristic_td(const Graph& g);

// Exact when n fits the budget, else the min-fill heuristic.
TreeDecomposition auto_td(const Graph& g, const Config& cfg = Config::defaults());

// Decomposition built by eliminating vertices in the given order.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order);

// Partition (A, B, C) of the host vertex set with no A-B edges.
struct Separation {
    VertexSet a, b, c;
};

// Picks a bag C of td such that, with the components of g - C greedily
// binned by descending R-weight into A and B, both sides satisfy
// 3|side ∩ R| <= 2|R \ C|. Among satisfying bags the one minimizing the
// largest component R-weight wins, ties to the lowest node id. Throws
// NoBalancedBagError when no bag works (impossible for a valid td).
Separation balanced_separator(const Graph& g, const TreeDecomposition& td, const VertexSet& r);

// Restricted variant: separates g[host] using td's bags intersected with host.
Separation balanced_separator_within(const Graph& g, const TreeDecomposition& td,
                                     const VertexSet& host, const VertexSet& r);

// Text format: "t b" (node count, bag-line count), b lines "node: v1 v2 ...",
// then t-1 lines of tree edges.
void write_td(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition read_td(std::istream& in);

}  // namespace treepart
