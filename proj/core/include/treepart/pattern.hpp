#pragma once

#include <optional>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"

namespace treepart {

enum class PatternMode { Subgraph, Induced };

// Injective map realizing `pattern` in `g` (embedding[p] = host vertex), or
// nullopt. Degree-sorted backtracking; patterns above cfg.pattern_budget
// vertices throw PatternTooLargeError. Deterministic: returns the embedding
// that is lexicographically least along the internal vertex order.
std::optional<std::vector<int>> contains_pattern(const Graph& g, const Graph& pattern,
                                                 PatternMode mode,
                                                 const Config& cfg = Config::defaults());

// Same, restricted to host vertices in `sub`.
std::optional<std::vector<int>> contains_pattern_within(const Graph& g,
                                                        const VertexSet& sub,
                                                        const Graph& pattern,
                                                        PatternMode mode,
                                                        const Config& cfg = Config::defaults());

}  // namespace treepart
