#pragma once

#include <string>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"
#include "treepart/partition.hpp"

namespace treepart {

struct ValidationReport {
    bool valid = false;
    int width = 0;
    bool quotient_tw_ok = false;
    std::vector<std::pair<std::string, std::string>> violations;  // (kind, witness)

    std::string to_string() const;
};

// Full audit: parts partition V(G), every edge stays inside a part or maps
// to a quotient edge, and the certificate validates for the quotient at
// width <= c. Never throws; everything lands in the report.
ValidationReport validate_partition(const Graph& g, const CTreePartition& p);

struct Observation1Report {
    bool pass = false;
    int composed_width = -1;  // width of the composed decomposition of g
    int partition_width = 0;
    std::string detail;
};

// Composes a decomposition of g out of the partition (each quotient bag is
// replaced by the union of its parts), validates it, and checks
// tw(G) <= (c+1) * width(p) - 1 exactly when g fits the exact budget.
Observation1Report observation1_audit(const Graph& g, const CTreePartition& p,
                                      const Config& cfg = Config::defaults());

}  // namespace treepart
