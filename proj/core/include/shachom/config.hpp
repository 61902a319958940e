#ifndef SHACHOM_CONFIG_HPP
#define SHACHOM_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shachom {

/// Everything a run needs, validated up front and embedded into every output
/// artifact so any file can be reproduced from its own header.
struct RunConfig {
    std::string input_path;
    std::size_t k = 0;
    std::string alpha; // scalar or comma-separated per-attribute list
    double tie_eps = 1e-9;
    double split_ratio = 0.66;
    std::uint64_t seed = 42;
    std::uint32_t n_bins = 10;
    std::string output_dir;

    bool has_header = false;
    std::optional<std::size_t> label_column;
    std::size_t drop_attributes = 0;
    std::size_t drop_instances = 0;
    bool stratify = true;
    bool write_newick = false;
};

/// Range and syntax checks that need no dataset: k >= 1, alpha values in
/// (0, 1), tie_eps >= 0, split_ratio in (0, 1), n_bins >= 2, paths non-empty.
/// Throws ValidationError. Checks against the dataset's attribute count
/// happen at load time.
void validate(const RunConfig& cfg);

/// Canonical JSON encoding of the config (fixed field order, 17 significant
/// digits) used for artifact embedding.
std::string config_to_json(const RunConfig& cfg);

/// One sweep axis: a config key and its values, in user-given order.
struct SweepAxis {
    std::string key; // k | alpha | drop_attributes | drop_instances
    std::vector<std::string> values;
};

/// Parses "k=3,10,30;alpha=0.05,0.2,0.35". Axes are normalized to the fixed
/// order k, alpha, drop_attributes, drop_instances regardless of input
/// order; values keep their given order. Unknown keys are rejected.
std::vector<SweepAxis> parse_grid(const std::string& spec);

struct SweepCell {
    std::string name; // e.g. "k=3,alpha=0.2"
    RunConfig config;
};

/// Cartesian product of the axes applied over `base`. An empty grid yields
/// the single base cell. Cells come out sorted by grid key (axis order, then
/// value order), which is also their generation order.
std::vector<SweepCell> expand_grid(const RunConfig& base,
                                   const std::vector<SweepAxis>& axes);

} // namespace shachom

#endif
