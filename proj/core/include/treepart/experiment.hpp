#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/drawing.hpp"
#include "treepart/graph.hpp"
#include "treepart/partition.hpp"

namespace treepart {

// A named pipeline: "degree", "minor-free:s", "topo:p", "k2t", "outer-k:k",
// "spider:s,t", "path:n", "induced-star:s", "induced-star-forest:s,l",
// "induced-p3:k", "utw0:p3", "utw0:edgeless,k", "k1t:t", "c0:d".
// Runs the class machinery end to end and returns the certified partition.
CTreePartition run_pipeline(const std::string& pipeline, const Graph& g,
                            const std::optional<CircularDrawing>& drawing = std::nullopt,
                            const Config& cfg = Config::defaults());

struct ExperimentRow {
    std::string instance;
    int n = 0;
    std::int64_t k = 0;
    int c = 0;
    std::int64_t ell = 0;
    int width = 0;
    std::int64_t bound = 0;
    std::string flags;  // ';'-joined, "ok" when clean

    static const char* csv_header();  // "instance,n,k,c,ell,width,bound,flags"
    std::string csv_line() const;
};

struct ExperimentInstance {
    std::string id;
    Graph graph;
    std::optional<CircularDrawing> drawing;
};

// Runs the pipeline per instance; per-instance failures are recorded in the
// row's flags, never fatal. Rows come back in instance order.
std::vector<ExperimentRow> run_experiment(const std::string& pipeline,
                                          const std::vector<ExperimentInstance>& instances,
                                          const Config& cfg = Config::defaults());

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_json(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace treepart
