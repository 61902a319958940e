// shachom command-line tool: cluster / eval / sweep over CSV datasets.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "shachom/config.hpp"
#include "shachom/dataset.hpp"
#include "shachom/dendrogram_io.hpp"
#include "shachom/error.hpp"
#include "shachom/evaluate.hpp"
#include "shachom/pipeline.hpp"

namespace fs = std::filesystem;
using namespace shachom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

void add_common_flags(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--input", cfg.input_path, "input CSV path")->required();
    cmd.add_option("--alpha", cfg.alpha,
                   "weighting coefficient: scalar or comma-separated per-attribute list, "
                   "each in (0,1)");
    cmd.add_option("--k", cfg.k, "final number of clusters");
    cmd.add_option("--tie-eps", cfg.tie_eps,
                   "relative tolerance for distance ties (default 1e-9)");
    cmd.add_option("--split-ratio", cfg.split_ratio, "train fraction (default 0.66)");
    cmd.add_option("--seed", cfg.seed, "seed for the train/test split (default 42)");
    cmd.add_option("--bins", cfg.n_bins, "equal-width bins for ID3 input (default 10)");
    cmd.add_option("--out", cfg.output_dir, "output directory")->required();
    cmd.add_flag("--has-header", cfg.has_header, "first CSV row is a header");
    cmd.add_option("--label-column", cfg.label_column,
                   "0-based column holding class labels (dropped from features)");
    cmd.add_option("--drop-attributes", cfg.drop_attributes,
                   "remove this many final attributes before clustering");
    cmd.add_option("--drop-instances", cfg.drop_instances,
                   "remove this many final rows before clustering");
    cmd.add_flag("--no-stratify",
                 [&cfg](std::int64_t) { cfg.stratify = false; },
                 "plain random split instead of a stratified one");
    cmd.add_flag("--newick", cfg.write_newick, "also export the dendrogram as Newick");
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

/// cluster + artifact writing shared by all three commands.
ClusteringResult cluster_to_dir(const RunConfig& cfg, const Dataset& ds,
                                const fs::path& dir) {
    const ClusteringResult result = run_cluster(cfg, ds);
    const std::string config_json = config_to_json(cfg);
    fs::create_directories(dir);
    write_dendrogram_json(result.dendrogram, dir / "dendrogram.json", config_json);
    write_partition_csv(result.partition, dir / "partition.csv", config_json);
    if (cfg.write_newick)
        write_newick(result.dendrogram, dir / "dendrogram.nwk");
    return result;
}

int cmd_cluster(const RunConfig& cfg) {
    validate(cfg);
    const Dataset ds = load_input(cfg);
    if (ds.has_labels())
        std::cerr << "note: input labels are ignored by clustering\n";
    cluster_to_dir(cfg, ds, cfg.output_dir);
    std::cout << "wrote " << (fs::path(cfg.output_dir) / "dendrogram.json").string()
              << " and partition.csv\n";
    return kExitOk;
}

EvalReport eval_to_dir(const RunConfig& cfg, const fs::path& dir) {
    const Dataset ds = load_input(cfg);
    if (ds.has_labels())
        std::cerr << "note: input labels are replaced by cluster annotations\n";
    if (cfg.drop_attributes > 0 || cfg.drop_instances > 0) {
        fs::create_directories(dir);
        write_csv(ds, dir / "input_derived.csv"); // the truncated copy this cell ran on
    }
    const ClusteringResult clustering = cluster_to_dir(cfg, ds, dir);
    const EvalReport report = run_eval(cfg, ds, clustering);
    write_text(dir / "report.json", report_to_json(report, config_to_json(cfg)));
    return report;
}

int cmd_eval(const RunConfig& cfg) {
    validate(cfg);
    const EvalReport report = eval_to_dir(cfg, cfg.output_dir);
    std::cout << "weighted: tp_rate=" << report.weighted.tp_rate
              << " fp_rate=" << report.weighted.fp_rate
              << " precision=" << report.weighted.precision
              << " recall=" << report.weighted.recall << "\n";
    std::cout << "wrote " << (fs::path(cfg.output_dir) / "report.json").string() << "\n";
    return kExitOk;
}

std::string sanitize_for_path(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (c == ',' || c == ';' || c == '/' || c == ' ')
            c = '_';
    return out;
}

int cmd_sweep(const RunConfig& base, const std::string& grid_spec) {
    const std::vector<SweepAxis> axes = parse_grid(grid_spec);
    const auto swept = [&axes](std::string_view key) {
        return std::any_of(axes.begin(), axes.end(),
                           [&](const SweepAxis& a) { return a.key == key; });
    };
    if (base.k == 0 && !swept("k"))
        throw ValidationError("k must come from --k or the grid");
    if (base.alpha.empty() && !swept("alpha"))
        throw ValidationError("alpha must come from --alpha or the grid");

    const std::vector<SweepCell> cells = expand_grid(base, axes);
    for (const SweepCell& cell : cells)
        validate(cell.config); // fail fast before any cell runs

    const fs::path out_dir(base.output_dir);
    fs::create_directories(out_dir);

    std::string table = "# config: " + config_to_json(base) + "\n";
    table += "# grid: " + grid_spec + "\n";
    table += "cell,k,alpha,drop_attributes,drop_instances,status,"
             "tp_rate,fp_rate,precision,recall,path\n";

    std::size_t failures = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const SweepCell& cell = cells[i];
        char prefix[16];
        std::snprintf(prefix, sizeof prefix, "cell_%03zu_", i);
        const fs::path cell_dir = out_dir / (prefix + sanitize_for_path(cell.name));

        std::string row = cell.name + "," + std::to_string(cell.config.k) + "," +
                          cell.config.alpha + "," +
                          std::to_string(cell.config.drop_attributes) + "," +
                          std::to_string(cell.config.drop_instances) + ",";
        try {
            const EvalReport report = eval_to_dir(cell.config, cell_dir);
            char metrics[128];
            std::snprintf(metrics, sizeof metrics, "ok,%.6f,%.6f,%.6f,%.6f,",
                          report.weighted.tp_rate, report.weighted.fp_rate,
                          report.weighted.precision, report.weighted.recall);
            row += metrics;
            row += cell_dir.string();
        } catch (const std::exception& e) {
            ++failures;
            std::string what = e.what();
            for (char& c : what)
                if (c == ',' || c == '\n')
                    c = ';';
            row += "failed,,,,,";
            row += what;
            std::cerr << "cell '" << cell.name << "' failed: " << e.what() << "\n";
        }
        table += row + "\n";
    }

    write_text(out_dir / "sweep.csv", table);
    std::cout << "wrote " << (out_dir / "sweep.csv").string() << " (" << cells.size()
              << " cells, " << failures << " failed)\n";
    return failures == cells.size() ? kExitValidation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SHACHOM semi-supervised single-linkage clustering with "
                 "homogeneity tie-breaking, plus ID3-based evaluation"};
    app.require_subcommand(1);
    // usage: shachom --config run.ini <command>, with flags under a
    // [cluster] / [eval] / [sweep] section; command-line flags win
    app.set_config("--config", "", "read flags from an ini file (CLI overrides)");

    RunConfig cluster_cfg, eval_cfg, sweep_cfg;
    std::string grid_spec;

    CLI::App* cluster = app.add_subcommand("cluster", "cluster a dataset, export "
                                                      "dendrogram and partition");
    add_common_flags(*cluster, cluster_cfg);
    cluster->get_option("--k")->required();
    cluster->get_option("--alpha")->required();

    CLI::App* eval = app.add_subcommand("eval", "cluster, then train and score an ID3 "
                                                "tree on the cluster annotations");
    add_common_flags(*eval, eval_cfg);
    eval->get_option("--k")->required();
    eval->get_option("--alpha")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "run eval over a parameter grid");
    add_common_flags(*sweep, sweep_cfg);
    sweep->add_option("--grid", grid_spec,
                      "axes as key=v1,v2;... over k, alpha, drop_attributes, "
                      "drop_instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (cluster->parsed())
            return cmd_cluster(cluster_cfg);
        if (eval->parsed())
            return cmd_eval(eval_cfg);
        return cmd_sweep(sweep_cfg, grid_spec);
    } catch (const ValidationError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
}
