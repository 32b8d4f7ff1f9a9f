#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "treepart/brute.hpp"
#include "treepart/covering.hpp"
#include "treepart/errors.hpp"
#include "treepart/experiment.hpp"
#include "treepart/family.hpp"
#include "treepart/graph.hpp"
#include "treepart/partition.hpp"
#include "treepart/treewidth.hpp"
#include "treepart/validate.hpp"

namespace treepart {

namespace {

struct GlobalOpts {
    std::string budgets;
    bool checked = false;
    std::uint64_t seed = 0;

    Config make_config() const {
        Config cfg = Config::defaults();
        if (!budgets.empty()) cfg.apply_budget_string(budgets);
        cfg.checked = checked;
        cfg.seed = seed;
        return cfg;
    }
};

void emit_graph(const Graph& g, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-")
        write_graph(out, g);
    else
        save_graph(out_path, g);
}

// Suite line: <id> <class> <family spec words... | @graph [@drawing]>
struct SuiteLine {
    std::string id, pipeline;
    ExperimentInstance instance;
};

std::vector<std::pair<std::string, std::vector<ExperimentInstance>>> read_suite(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open suite: " + path);
    std::vector<std::pair<std::string, std::vector<ExperimentInstance>>> groups;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string id, pipeline;
        if (!(ls >> id >> pipeline)) continue;
        ExperimentInstance inst;
        inst.id = id;
        std::string token;
        std::vector<std::string> rest;
        while (ls >> token) rest.push_back(token);
        if (rest.empty()) throw FormatError("suite line needs an instance: " + line);
        if (rest[0][0] == '@') {
            inst.graph = load_graph(rest[0].substr(1));
            if (rest.size() > 1 && rest[1][0] == '@')
                inst.drawing = load_drawing(rest[1].substr(1), inst.graph);
        } else {
            std::string spec;
            for (const auto& word : rest) spec += (spec.empty() ? "" : " ") + word;
            inst.graph = generate(FamilySpec::parse(spec));
        }
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& gr) { return gr.first == pipeline; });
        if (it == groups.end()) {
            groups.push_back({pipeline, {std::move(inst)}});
        } else {
            it->second.push_back(std::move(inst));
        }
    }
    return groups;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"c-tree-partitions of bounded-treewidth graphs"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--budgets", global.budgets,
                   "budget overrides, e.g. tw=20,pat=12,ep=1000000");
    app.add_flag("--checked", global.checked, "re-verify every oracle answer inline");
    app.add_option("--seed", global.seed, "seed for randomized instances");

    // gen
    std::string gen_spec, gen_out;
    auto* gen = app.add_subcommand("gen", "generate a named family graph");
    gen->add_option("spec", gen_spec, "family spec, e.g. \"gcl 3 2\"")->required();
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // tw
    std::string tw_graph;
    bool tw_exact = false, tw_heuristic = false;
    std::string tw_out;
    auto* tw = app.add_subcommand("tw", "treewidth of a graph file");
    tw->add_option("graph", tw_graph)->required();
    tw->add_flag("--exact", tw_exact, "exact (subset dynamic program)");
    tw->add_flag("--heuristic", tw_heuristic, "min-fill heuristic");
    tw->add_option("--td-out", tw_out, "write the decomposition here");

    // partition
    std::string part_graph, part_class, part_out, part_drawing;
    int part_c = -1;
    auto* part = app.add_subcommand("partition", "run a class pipeline");
    part->add_option("graph", part_graph)->required();
    part->add_option("--class", part_class, "pipeline, e.g. degree, minor-free:3, outer-k:1")
        ->required();
    part->add_option("--c", part_c, "expected quotient treewidth (checked against the run)");
    part->add_option("--drawing", part_drawing, "circular drawing file for outer-k");
    part->add_option("-o,--out", part_out, "output partition file (default stdout)");

    // verify
    std::string ver_graph, ver_part;
    auto* ver = app.add_subcommand("verify", "validate a partition file against a graph");
    ver->add_option("graph", ver_graph)->required();
    ver->add_option("partition", ver_part)->required();

    // brute
    std::string brute_graph;
    int brute_tpw_c = -1;
    std::vector<int> brute_disjoint;
    std::string brute_covering;
    auto* brute = app.add_subcommand("brute", "brute-force audits");
    brute->add_option("graph", brute_graph)->required();
    brute->add_option("--tpw", brute_tpw_c, "exact c-tree-partition-width for this c");
    brute->add_option("--disjointed", brute_disjoint,
                      "c d: decide (c,d)-disjointedness of the covering")
        ->expected(2);
    brute->add_option("--covering", brute_covering,
                      "covering file (default: singleton partition)");

    // bench
    std::string bench_suite, bench_csv, bench_json;
    auto* bench = app.add_subcommand("bench", "run a suite file, emit a table");
    bench->add_option("suite", bench_suite)->required();
    bench->add_option("-o,--out", bench_csv, "CSV output (default stdout)");
    bench->add_option("--json", bench_json, "JSON mirror output");

    std::vector<const char*> argv;
    std::string prog = "treepart";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    Config cfg = global.make_config();
    try {
        if (gen->parsed()) {
            emit_graph(generate(FamilySpec::parse(gen_spec)), gen_out, out);
            return 0;
        }
        if (tw->parsed()) {
            Graph g = load_graph(tw_graph);
            TreeDecomposition td;
            if (tw_exact) {
                auto res = exact_treewidth(g, cfg);
                td = std::move(res.td);
                out << res.width << '\n';
            } else if (tw_heuristic) {
                td = heuristic_td(g);
                out << td.width() << '\n';
            } else {
                td = auto_td(g, cfg);
                out << td.width() << '\n';
            }
            if (!tw_out.empty()) {
                std::ofstream f(tw_out);
                write_td(f, td);
            }
            return 0;
        }
        if (part->parsed()) {
            Graph g = load_graph(part_graph);
            std::optional<CircularDrawing> drawing;
            if (!part_drawing.empty()) drawing = load_drawing(part_drawing, g);
            CTreePartition p = run_pipeline(part_class, g, drawing, cfg);
            if (part_c >= 0 && p.c != part_c) {
                err << "pipeline produced c = " << p.c << ", expected " << part_c << '\n';
                return 1;
            }
            ValidationReport rep = validate_partition(g, p);
            if (!rep.valid) {
                err << "output failed validation:\n" << rep.to_string() << '\n';
                return 1;
            }
            if (part_out.empty() || part_out == "-")
                write_partition(out, p);
            else
                save_partition(part_out, p);
            return 0;
        }
        if (ver->parsed()) {
            Graph g = load_graph(ver_graph);
            CTreePartition p = load_partition(ver_part);
            ValidationReport rep = validate_partition(g, p);
            out << rep.to_string() << '\n';
            return rep.valid ? 0 : 1;
        }
        if (brute->parsed()) {
            Graph g = load_graph(brute_graph);
            if (brute_tpw_c >= 0) {
                out << brute_min_tpw(g, brute_tpw_c, cfg) << '\n';
                return 0;
            }
            if (!brute_disjoint.empty()) {
                Covering beta;
                if (brute_covering.empty()) {
                    beta = singleton_partition(g);
                } else {
                    std::ifstream f(brute_covering);
                    if (!f) throw FormatError("cannot open: " + brute_covering);
                    beta = read_covering(f, false);
                }
                auto res = check_cd_disjointed(g, beta, brute_disjoint[0], brute_disjoint[1],
                                               cfg);
                if (res.pass) {
                    out << "disjointed\n";
                    return 0;
                }
                out << "counterexample component:";
                for (int v : res.counterexample->x) out << ' ' << v;
                out << '\n';
                return 1;
            }
            err << "brute needs --tpw or --disjointed\n";
            return 2;
        }
        if (bench->parsed()) {
            auto groups = read_suite(bench_suite);
            std::vector<ExperimentRow> rows;
            for (auto& [pipeline, instances] : groups) {
                auto batch = run_experiment(pipeline, instances, cfg);
                rows.insert(rows.end(), batch.begin(), batch.end());
            }
            if (bench_csv.empty() || bench_csv == "-") {
                write_csv(out, rows);
            } else {
                std::ofstream f(bench_csv);
                write_csv(f, rows);
            }
            if (!bench_json.empty()) {
                std::ofstream f(bench_json);
                write_json(f, rows);
            }
            for (const auto& row : rows)
                if (row.flags.rfind("error", 0) == 0 || row.flags.find("invalid") != std::string::npos)
                    return 1;
            return 0;
        }
    } catch (const ClassViolationError& e) {
        err << "class violation: " << e.what() << '\n';
        return 1;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace treepart
