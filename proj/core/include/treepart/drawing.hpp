#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "treepart/graph.hpp"
#include "treepart/oracle.hpp"

namespace treepart {

// Circular drawing: vertices on a circle in the given cyclic order, edges as
// chords. Crossings are derived from the interleaving test, never stored.
struct CircularDrawing {
    Graph graph;
    std::vector<int> order;  // order[i] = vertex at circle position i

    std::vector<int> position() const;  // inverse permutation
};

// Chords {a,b} and {c,d} cross iff their endpoints interleave cyclically.
bool chords_cross(const std::vector<int>& pos, int a, int b, int c, int d);

struct CrossingStats {
    std::vector<int> per_edge;  // aligned with graph.edges()
    int max_crossings = 0;
    int weak_k = 0;             // max over crossing pairs of min(cr(e), cr(f))
    int total = 0;
};

CrossingStats crossing_stats(const CircularDrawing& d);

// c = 2 oracle for weakly outer k-planar drawings, built from the drawing's
// crossing structure: for a singleton pair query the hitting set is the
// closest-neighbor / crossing-incidence set of size at most 4k+4. Queries
// over larger blocks go through lift_oracle. Validates the weak k-planarity
// and throws NotWeaklyOuterKPlanarError with a witness pair otherwise.
std::unique_ptr<QOracle> outer_k_planar_oracle(const CircularDrawing& d, int k);

// Drawing text format: line 1 is the cyclic vertex order; the edges come
// from the accompanying graph.
CircularDrawing read_drawing(std::istream& in, Graph g);
void write_drawing(std::ostream& out, const CircularDrawing& d);
CircularDrawing load_drawing(const std::string& path, Graph g);

}  // namespace treepart
