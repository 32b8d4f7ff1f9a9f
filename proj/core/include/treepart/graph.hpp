#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treepart {

// Sorted vertex sets are the working currency of the whole library.
using VertexSet = std::vector<int>;

VertexSet set_union_of(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b);
VertexSet set_difference_of(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
bool sets_intersect(const VertexSet& a, const VertexSet& b);
VertexSet sorted_unique(VertexSet s);

// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
// Equality of graphs is equality of adjacency; labels are provenance tags
// attached by generators and never take part in comparisons.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    // Appends an isolated vertex, returns its id.
    int add_vertex();

    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted lexicographically

    const std::string& label(int v) const;
    void set_label(int v, std::string text);
    bool has_labels() const { return !labels_.empty(); }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    // Induced subgraph on `keep` (sorted); old ids map to positions in `keep`.
    Graph induced(const VertexSet& keep) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;  // empty or size n
};

// Connected components as sorted vertex sets, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);

// Components of the induced subgraph g[sub], as sorted subsets of `sub`.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub);

// Open neighborhood N_G(S), excluding S itself.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// Neighborhood of S within a host set: N_G(S) ∩ host \ S.
VertexSet neighborhood_within(const Graph& g, const VertexSet& s, const VertexSet& host);

VertexSet all_vertices(const Graph& g);

// Text format: line 1 "n m", then m lines "u v" with 0 <= u < v < n.
// '#' begins a comment line. The writer emits edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace treepart
