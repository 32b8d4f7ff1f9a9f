#include "treepart/experiment.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "treepart/builders.hpp"
#include "treepart/class_oracles.hpp"
#include "treepart/errors.hpp"
#include "treepart/validate.hpp"

namespace treepart {

namespace {

std::vector<int> parse_params(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item == "p3") continue;  // utw0 mode tag, handled by caller
        out.push_back(std::stoi(item));
    }
    return out;
}

}  // namespace

CTreePartition run_pipeline(const std::string& pipeline, const Graph& g,
                            const std::optional<CircularDrawing>& drawing,
                            const Config& cfg) {
    std::string name = pipeline;
    std::string arg;
    if (auto colon = pipeline.find(':'); colon != std::string::npos) {
        name = pipeline.substr(0, colon);
        arg = pipeline.substr(colon + 1);
    }

    if (name == "degree") {
        TreeDecomposition td = auto_td(g, cfg);
        auto oracle = degree_oracle(g);
        return compute_partition(g, td, singleton_partition(g), *oracle, 1, cfg);
    }
    if (name == "minor-free" || name == "topo") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError(name + " needs one parameter");
        TreeDecomposition td = auto_td(g, cfg);
        auto oracle = (name == "minor-free")
                          ? minor_free_oracle(g, td, params[0], EpMode::Auto, cfg)
                          : topo_minor_oracle(g, td, params[0], EpMode::Auto, cfg);
        return compute_partition(g, td, singleton_partition(g), *oracle, params[0], cfg);
    }
    if (name == "k2t") {
        TreeDecomposition td = auto_td(g, cfg);
        std::shared_ptr<const QOracle> base = k2t_menger_oracle(g);
        auto lifted = lift_oracle(std::move(base), g, singleton_partition(g));
        return compute_partition(g, td, singleton_partition(g), *lifted, 2, cfg);
    }
    if (name == "outer-k") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError("outer-k needs k");
        CircularDrawing d;
        if (drawing) {
            d = *drawing;
        } else {
            d.graph = g;
            d.order.resize(g.n());
            for (int v = 0; v < g.n(); ++v) d.order[v] = v;
        }
        TreeDecomposition td = auto_td(g, cfg);
        auto oracle = outer_k_planar_oracle(d, params[0]);
        return compute_partition(g, td, singleton_partition(g), *oracle, 2, cfg);
    }
    if (name == "spider") {
        auto params = parse_params(arg);
        if (params.size() != 2) throw InvalidSpecError("spider needs s,t");
        return spider_free_partition(g, params[0], params[1], cfg);
    }
    if (name == "path") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError("path needs n");
        return path_free_partition(g, params[0], cfg);
    }
    if (name == "induced-star") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError("induced-star needs s");
        return induced_star_free_partition(g, params[0], cfg);
    }
    if (name == "induced-star-forest") {
        auto params = parse_params(arg);
        if (params.size() != 2) throw InvalidSpecError("induced-star-forest needs s,l");
        return induced_star_forest_free_partition(g, params[0], params[1], cfg);
    }
    if (name == "induced-p3") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError("induced-p3 needs k");
        return induced_p3_forest_partition(g, params[0], cfg);
    }
    if (name == "utw0") {
        if (arg == "p3") return induced_utw0_partition(g, Utw0Mode::PathAtMost3, 0, cfg);
        auto params = parse_params(arg.substr(arg.find(',') + 1));
        if (arg.rfind("edgeless", 0) != 0 || params.size() != 1)
            throw InvalidSpecError("utw0 takes p3 or edgeless,k");
        return induced_utw0_partition(g, Utw0Mode::EdgelessH, params[0], cfg);
    }
    if (name == "k1t") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError("k1t needs t");
        return k1t_partition(g, params[0], cfg);
    }
    if (name == "c0") {
        auto params = parse_params(arg);
        if (params.size() != 1) throw InvalidSpecError("c0 needs d");
        return component_partition_c0(g, params[0]);
    }
    throw InvalidSpecError("unknown pipeline: " + pipeline);
}

const char* ExperimentRow::csv_header() { return "instance,n,k,c,ell,width,bound,flags"; }

std::string ExperimentRow::csv_line() const {
    std::ostringstream out;
    out << instance << ',' << n << ',' << k << ',' << c << ',' << ell << ',' << width << ','
        << bound << ',' << (flags.empty() ? "ok" : flags);
    return out.str();
}

std::vector<ExperimentRow> run_experiment(const std::string& pipeline,
                                          const std::vector<ExperimentInstance>& instances,
                                          const Config& cfg) {
    std::vector<ExperimentRow> rows;
    for (const auto& inst : instances) {
        ExperimentRow row;
        row.instance = inst.id;
        row.n = inst.graph.n();
        try {
            CTreePartition p = run_pipeline(pipeline, inst.graph, inst.drawing, cfg);
            row.k = p.k;
            row.c = p.c;
            row.ell = p.ell;
            row.width = p.width;
            row.bound = p.bound;
            std::string flags;
            for (const auto& f : p.flags) flags += (flags.empty() ? "" : ";") + f;
            ValidationReport rep = validate_partition(inst.graph, p);
            if (!rep.valid) flags += (flags.empty() ? "" : ";") + std::string("invalid");
            row.flags = flags;
        } catch (const Error& e) {
            row.flags = std::string("error: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "# schema 1\n" << ExperimentRow::csv_header() << '\n';
    for (const auto& row : rows) out << row.csv_line() << '\n';
}

void write_json(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        arr.push_back({{"instance", row.instance},
                       {"n", row.n},
                       {"k", row.k},
                       {"c", row.c},
                       {"ell", row.ell},
                       {"width", row.width},
                       {"bound", row.bound},
                       {"flags", row.flags.empty() ? "ok" : row.flags}});
    }
    out << arr.dump(2) << '\n';
}

}  // namespace treepart
