#include "shachom/pipeline.hpp"

#include <fstream>

#include "shachom/error.hpp"

namespace shachom {

Dataset load_input(const RunConfig& cfg) {
    Dataset ds = load_csv(cfg.input_path, cfg.has_header, cfg.label_column);
    if (cfg.drop_attributes > 0)
        ds = drop_last_attributes(ds, cfg.drop_attributes);
    if (cfg.drop_instances > 0)
        ds = drop_last_instances(ds, cfg.drop_instances);
    return ds;
}

ClusteringResult run_cluster(const RunConfig& cfg, const Dataset& ds) {
    const WeightVector w = alpha_from_string(cfg.alpha, ds.n_attributes());
    return cluster(ds, cfg.k, w, cfg.tie_eps);
}

EvalReport run_eval(const RunConfig& cfg, const Dataset& ds,
                    const ClusteringResult& clustering) {
    const Dataset annotated = annotate_with_clusters(ds, clustering.partition);
    const SplitPair parts = split(annotated, cfg.split_ratio, cfg.seed, cfg.stratify);

    const Discretizer disc = Discretizer::fit(parts.train, cfg.n_bins);
    const NominalDataset train = disc.apply(parts.train);
    const NominalDataset test = disc.apply(parts.test);

    const auto tree = id3_train(train);
    EvalReport report = evaluate(*tree, test);

    report.k = cfg.k;
    report.alpha = alpha_from_string(cfg.alpha, ds.n_attributes()).alphas();
    report.split_seed = cfg.seed;
    report.n_bins = cfg.n_bins;
    report.split_ratio = cfg.split_ratio;
    for (std::size_t t = 0; t < disc.constant_attribute().size(); ++t)
        if (disc.constant_attribute()[t])
            report.flags.push_back("attribute '" + ds.attribute_names()[t] +
                                   "' is constant on the training part; single bin used");
    return report;
}

void write_partition_csv(const Partition& p, const std::filesystem::path& path,
                         const std::string& config_json) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << "# config: " << config_json << "\n";
    out << "instance,cluster\n";
    for (std::size_t i = 0; i < p.assignment.size(); ++i)
        out << i << ',' << p.assignment[i] << '\n';
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

} // namespace shachom
