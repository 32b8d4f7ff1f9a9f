#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treepart/graph.hpp"

namespace treepart {

// Where a vertex of the subdivided graph came from: an original vertex, or
// position `pos` (1-based, counted from the lower original endpoint) on the
// path replacing original edge (u,v).
struct BranchOrigin {
    bool is_vertex;
    int vertex = -1;            // original id when is_vertex
    std::pair<int, int> edge{-1, -1};  // original edge (u < v) otherwise
    int pos = 0;
};

struct SubdivisionMap {
    Graph original;
    Graph subdivided;
    std::vector<BranchOrigin> branch_of;  // indexed by subdivided vertex

    // Internal path of an original edge, from u to v (endpoints included).
    std::vector<int> path_of(int u, int v) const;
};

// Replaces each edge by a path; counts are indexed by the canonical edge
// order of g.edges(). Original ids are preserved, internal vertices appended
// edge by edge. A uniform count t yields the t-subdivision.
SubdivisionMap subdivide(const Graph& g, const std::vector<int>& counts);
SubdivisionMap subdivide_uniform(const Graph& g, int t);

// Inverse transform: contracts maximal chains of degree-2 vertices onto the
// core (vertices of degree != 2; cycle components keep their three lowest
// vertices). Throws NotASubdivisionError if a chain closes a loop or two
// chains would merge into parallel edges.
SubdivisionMap suppress_degree_two(const Graph& g);

// G^(lambda): same vertices, uv an edge iff there are at least lambda
// internally vertex-disjoint (u,v)-paths, via unit-vertex-capacity max-flow.
// The direct edge uv counts as one path.
Graph robust_power(const Graph& g, int lambda);

// Number of internally disjoint (u,v)-paths, capped at `cap`.
int internally_disjoint_paths(const Graph& g, int u, int v, int cap);

}  // namespace treepart
