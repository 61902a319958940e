#ifndef SHACHOM_DATASET_HPP
#define SHACHOM_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shachom {

/// A numeric feature matrix with attribute names and optional per-instance
/// class labels. Rows are instances, columns attributes; every cell is a
/// finite double. Immutable after construction.
class Dataset {
public:
    Dataset(std::size_t n_instances, std::size_t n_attributes,
            std::vector<double> values,
            std::vector<std::string> attribute_names,
            std::optional<std::vector<std::string>> labels = std::nullopt,
            std::string label_name = "label");

    std::size_t n_instances() const { return n_instances_; }
    std::size_t n_attributes() const { return n_attributes_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * n_attributes_, n_attributes_};
    }
    double at(std::size_t i, std::size_t j) const {
        return values_[i * n_attributes_ + j];
    }

    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    bool has_labels() const { return labels_.has_value(); }
    const std::vector<std::string>& labels() const;
    const std::string& label_name() const { return label_name_; }

    bool operator==(const Dataset&) const = default;

private:
    std::size_t n_instances_ = 0;
    std::size_t n_attributes_ = 0;
    std::vector<double> values_; // row-major
    std::vector<std::string> attribute_names_;
    std::optional<std::vector<std::string>> labels_;
    std::string label_name_;
};

/// Train/test partition of a parent dataset's rows. Index vectors refer to
/// parent row positions and are disjoint, exhaustive, and sorted ascending.
struct SplitPair {
    Dataset train;
    Dataset test;
    std::uint64_t seed = 0;
    double ratio = 0.0;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

/// Reads a comma-separated numeric table. '.' is the decimal point; empty
/// lines are ignored. `label_column` (0-based) moves that column out of the
/// feature matrix into the labels. Parse failures name the offending data
/// row and column (both 1-based).
Dataset load_csv(const std::filesystem::path& path, bool has_header,
                 std::optional<std::size_t> label_column = std::nullopt);

/// Writes the same dialect load_csv reads: header row, then one row per
/// instance, labels (if any) as the final column. Doubles are printed with
/// enough digits to reload bit-identically.
void write_csv(const Dataset& ds, const std::filesystem::path& path);

/// Copy of `ds` without the final `m` feature columns (0 <= m < n_attributes).
Dataset drop_last_attributes(const Dataset& ds, std::size_t m);

/// Copy of `ds` without the final `m` rows (0 <= m < n_instances).
Dataset drop_last_instances(const Dataset& ds, std::size_t m);

/// Deterministic labeled split: train receives round(ratio * n_instances)
/// rows. With `stratify`, per-class train counts stay within one instance of
/// ratio * class_size (largest-remainder allocation). Identical inputs give
/// identical index sets on every platform.
SplitPair split(const Dataset& ds, double ratio, std::uint64_t seed, bool stratify);

} // namespace shachom

#endif
