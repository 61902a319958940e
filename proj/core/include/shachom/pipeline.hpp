#ifndef SHACHOM_PIPELINE_HPP
#define SHACHOM_PIPELINE_HPP

#include <filesystem>
#include <string>

#include "shachom/cluster.hpp"
#include "shachom/config.hpp"
#include "shachom/dataset.hpp"
#include "shachom/evaluate.hpp"

namespace shachom {

/// load_csv + the configured attribute/instance drops.
Dataset load_input(const RunConfig& cfg);

/// Clustering stage: resolves alpha against the dataset and runs shachom.
ClusteringResult run_cluster(const RunConfig& cfg, const Dataset& ds);

/// Evaluation stage: annotate with clusters, split, discretize (bins fitted
/// on the training part only), train ID3, score the test part. Provenance
/// fields of the report are filled from `cfg`.
EvalReport run_eval(const RunConfig& cfg, const Dataset& ds,
                    const ClusteringResult& clustering);

/// Partition CSV: "# config: {...}" comment, "instance,cluster" header, one
/// row per instance.
void write_partition_csv(const Partition& p, const std::filesystem::path& path,
                         const std::string& config_json);

} // namespace shachom

#endif
