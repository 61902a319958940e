#ifndef SHACHOM_EVALUATE_HPP
#define SHACHOM_EVALUATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shachom/cluster.hpp"
#include "shachom/dataset.hpp"
#include "shachom/discretize.hpp"
#include "shachom/id3.hpp"

namespace shachom {

struct ClassMetrics {
    double tp_rate = 0.0;   // TP / (TP + FN); equals recall
    double fp_rate = 0.0;   // FP / (FP + TN)
    double precision = 0.0; // TP / (TP + FP)
    double recall = 0.0;
    std::size_t support = 0;
};

/// Per-class and support-weighted classification metrics plus the run
/// provenance needed to reproduce them. Zero-denominator rates are reported
/// as 0 and listed in `flags`.
struct EvalReport {
    std::vector<std::pair<std::string, ClassMetrics>> per_class;
    ClassMetrics weighted; // support = test size
    std::vector<std::string> flags;

    // provenance, filled by the pipeline
    std::size_t k = 0;
    std::vector<double> alpha;
    std::uint64_t split_seed = 0;
    std::uint32_t n_bins = 0;
    double split_ratio = 0.0;
};

/// Replaces the dataset's labels with the partition's cluster labels
/// ("0".."k-1"). Any prior labels are discarded; callers that care should
/// check has_labels() first and say so.
Dataset annotate_with_clusters(const Dataset& ds, const Partition& p);

/// Scores `tree` on `test` via the full confusion matrix. Classes appearing
/// only in predictions get a zero-support row and are omitted from the
/// weighted averages; a test class the tree never predicts still scores
/// (its instances count as false negatives).
EvalReport evaluate(const DecisionNode& tree, const NominalDataset& test);

/// Versioned JSON form of a report (see docs/formats.md); doubles printed
/// with 17 significant digits, `config_json` embedded verbatim.
std::string report_to_json(const EvalReport& report,
                           const std::string& config_json = "{}");

} // namespace shachom

#endif
