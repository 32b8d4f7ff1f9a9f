#pragma once

#include <functional>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"
#include "treepart/partition.hpp"
#include "treepart/transform.hpp"

namespace treepart {

// Carries a c-tree-partition of the original graph across a subdivision.
// Width stays <= t for c >= 2 (new two-vertex parts hung as paths); for
// c = 1 the quotient-tree edges are oriented to in-degree <= 1 and the first
// subdivision vertex joins the head part, giving width <= t^2 + t.
CTreePartition subdivide_partition(const SubdivisionMap& sm, const CTreePartition& p, int c);

// The reverse direction: restricts the subdivision's parts to the original
// vertices, answers queries by endpoint substitution on top of the
// subdivision's partition oracle, and reruns the core recursion with flat
// bound d = 2*c*l*(c*l+1).
CTreePartition original_partition_from_subdivision(const SubdivisionMap& sm,
                                                   const CTreePartition& p_sub, int c,
                                                   const Config& cfg = Config::defaults());

// Builders for subgraph-excluding classes. Preconditions are checked with
// contains_pattern when the pattern fits the budget; otherwise the builder
// runs optimistically and flags the output.
CTreePartition spider_free_partition(const Graph& g, int s, int t,
                                     const Config& cfg = Config::defaults());
CTreePartition path_free_partition(const Graph& g, int n,
                                   const Config& cfg = Config::defaults());

// lH-free graphs: a maximal H-packing becomes one dominant part over the
// inner builder's result for the H-free remainder.
CTreePartition ell_h_free_partition(const Graph& g, const Graph& h, int l,
                                    const std::function<CTreePartition(const Graph&)>& inner,
                                    const Config& cfg = Config::defaults());

// Induced-subgraph-excluding classes.
CTreePartition induced_star_free_partition(const Graph& g, int s,
                                           const Config& cfg = Config::defaults());
CTreePartition induced_star_forest_free_partition(const Graph& g, int s, int l,
                                                  const Config& cfg = Config::defaults());
CTreePartition induced_p3_forest_partition(const Graph& g, int k,
                                           const Config& cfg = Config::defaults());

enum class Utw0Mode { PathAtMost3, EdgelessH };

// c = 0 classes: component cliques (no induced P_3) or one part bounded by
// the independence number (no edgeless H on `kk` vertices).
CTreePartition induced_utw0_partition(const Graph& g, Utw0Mode mode, int kk = 0,
                                      const Config& cfg = Config::defaults());

// K_{1,t}-minor-free graphs: suppress to the core (at most 10t vertices or
// CoreTooLargeError), then carry the trivial core partition across the
// subdivision; width <= max(core size, 2).
CTreePartition k1t_partition(const Graph& g, int t, const Config& cfg = Config::defaults());

}  // namespace treepart
