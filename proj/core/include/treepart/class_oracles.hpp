#pragma once

#include <memory>

#include "treepart/config.hpp"
#include "treepart/ep.hpp"
#include "treepart/graph.hpp"
#include "treepart/oracle.hpp"
#include "treepart/treewidth.hpp"

namespace treepart {

// c = 1. For a query (B_1, X): Q = N(B'_1) ∩ X; bound(t) = max_degree * t.
// Certifies the singleton partition of any graph as (1, Δ)-disjointed.
std::unique_ptr<QOracle> degree_oracle(const Graph& g);

// Erdős–Pósa oracle over the family of connected subgraphs meeting every
// residual neighborhood: packs greedily, then asks ep_hitting_set with the
// measured packing size (growing it if a larger packing turns up). Backs
// both the minor-free (arity s) and topological-minor-free (arity p) class
// pipelines; all size bounds are measured, never taken from extremal
// constants. bound(t) reports (width+1) * arity * t * L * log2(L+1) with L
// the largest packing measured so far.
std::unique_ptr<QOracle> minor_free_oracle(const Graph& g, const TreeDecomposition& td, int s,
                                           EpMode mode = EpMode::Auto,
                                           const Config& cfg = Config::defaults());

// Same machinery at arity p (the charging differs only in the analysis).
std::unique_ptr<QOracle> topo_minor_oracle(const Graph& g, const TreeDecomposition& td, int p,
                                           EpMode mode = EpMode::Auto,
                                           const Config& cfg = Config::defaults());

// c = 2, Menger-based: Q is a minimum vertex separator between
// N(S'_1) \ S and N(S'_2) \ S inside X, by unit-capacity max-flow.
// bound(t) is the largest separator measured so far.
std::unique_ptr<QOracle> k2t_menger_oracle(const Graph& g);

// Minimum vertex set meeting every (a-set, b-set)-path in g[sub]; vertices
// of a ∪ b may be chosen. Exposed for the oracle's test oracle.
VertexSet min_vertex_separator(const Graph& g, const VertexSet& sub, const VertexSet& a,
                               const VertexSet& b);

struct AssignTrickResult {
    Graph contracted;                      // on A's index space: G[A] plus one edge per assignment
    std::vector<int> a_vertices;           // row i of `contracted` is a_vertices[i]
    std::vector<std::pair<int, std::pair<int, int>>> assigned;  // member idx -> pair (in A ids)
    std::vector<int> unassigned;           // member indices
};

// Greedy assignment of packed connected subgraphs to unoccupied pairs of
// A-vertices both adjacent to the member; members in order of lowest
// contained vertex, pairs lexicographic.
AssignTrickResult assign_trick(const Graph& g, const VertexSet& a,
                               const std::vector<VertexSet>& b_packing);

}  // namespace treepart
