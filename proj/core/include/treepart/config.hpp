#pragma once

#include <cstdint>
#include <string>

namespace treepart {

// Search budgets and run modes. The environment variable TREEPART_BUDGETS
// ("tw=20,pat=12,ep=1000000") overrides the compiled defaults.
struct Config {
    int tw_exact_budget = 20;            // max n for the exact treewidth DP
    int pattern_budget = 12;             // max pattern size for subgraph search
    std::int64_t ep_node_budget = 1000000;  // branch nodes for exact packing
    int brute_n_budget = 9;              // max n for brute-force tpw enumeration
    std::int64_t cd_work_budget = 50000000;  // tuple*subset work for disjointedness checks
    bool checked = false;                // re-verify every oracle answer inline
    std::uint64_t seed = 0;

    // Compiled defaults with TREEPART_BUDGETS applied.
    static Config defaults();

    // Parses "tw=20,pat=12,ep=1000000" into an existing config.
    void apply_budget_string(const std::string& spec);
};

}  // namespace treepart
