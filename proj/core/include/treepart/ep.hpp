#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"
#include "treepart/treewidth.hpp"

namespace treepart {

// A family of connected subgraphs of a host graph, closed under the induced
// restrictions the packing/covering recursion performs. Members are vertex
// sets of connected subgraphs.
class SubgraphFamily {
public:
    virtual ~SubgraphFamily() = default;

    // Some member inside g[sub], or nullopt. Must be complete: returns a
    // member whenever one exists.
    virtual std::optional<VertexSet> find_member(const Graph& g,
                                                 const VertexSet& sub) const = 0;

    // Enumerates inclusion-minimal members inside g[sub]. The callback
    // returns false to stop early. `budget` counts enumeration steps and
    // aborts by returning false from the enumeration when exhausted.
    virtual bool for_each_minimal_member(
        const Graph& g, const VertexSet& sub,
        const std::function<bool(const VertexSet&)>& cb, std::int64_t& budget) const = 0;
};

// Members are single edges: the family of all edges of the host.
std::unique_ptr<SubgraphFamily> edge_family();

// Members are connected subgraphs meeting every target set. An empty target
// set makes the family empty (nothing can meet it).
std::unique_ptr<SubgraphFamily> connector_family(std::vector<VertexSet> targets);

enum class EpMode {
    Exact,   // exact packing numbers; PackingBudgetError when out of budget
    Auto,    // exact until the budget runs dry, then greedy estimates
    Greedy,  // greedy packing estimates throughout
};

struct EPResult {
    bool is_packing = false;
    std::vector<VertexSet> packing;  // > l pairwise disjoint members
    VertexSet hitting_set;           // Q: no member survives in g[sub - Q]
    bool bound_verified = false;     // size <= (width+1) * l * log2(l+1) proven
};

// Packing-versus-covering: either more than l vertex-disjoint members or a
// certified hitting set. In exact mode the hitting set obeys the
// (width+1) * l * log2(l+1) bound.
EPResult ep_hitting_set(const Graph& g, const TreeDecomposition& td,
                        const SubgraphFamily& fam, int l, EpMode mode = EpMode::Exact,
                        const Config& cfg = Config::defaults());

// Restricted variant over g[sub] with td's bags clipped to sub.
EPResult ep_hitting_set_within(const Graph& g, const TreeDecomposition& td,
                               const VertexSet& sub, const SubgraphFamily& fam, int l,
                               EpMode mode = EpMode::Exact,
                               const Config& cfg = Config::defaults());

// Greedy maximal packing: repeatedly take find_member and delete it.
std::vector<VertexSet> greedy_packing(const Graph& g, const VertexSet& sub,
                                      const SubgraphFamily& fam);

// Packing number of g[sub] capped at `cap`, with the realizing packing.
// Exact up to the node budget (PackingBudgetError when it runs out).
std::pair<int, std::vector<VertexSet>> packing_number(const Graph& g, const VertexSet& sub,
                                                      const SubgraphFamily& fam, int cap,
                                                      std::int64_t& budget);

}  // namespace treepart
