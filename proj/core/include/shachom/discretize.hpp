#ifndef SHACHOM_DISCRETIZE_HPP
#define SHACHOM_DISCRETIZE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shachom/dataset.hpp"

namespace shachom {

/// A labeled table of categorical bin indices, the discretized counterpart
/// of a Dataset. `bin_edges[t]` holds attribute t's interior cut points
/// (strictly increasing; empty for a constant attribute).
struct NominalDataset {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::uint32_t> bins; // row-major
    std::vector<std::string> classes; // per row
    std::vector<std::vector<double>> bin_edges;
    std::vector<bool> constant_attribute;
    std::uint32_t n_bins = 0;

    std::uint32_t bin(std::size_t i, std::size_t j) const { return bins[i * n_cols + j]; }
    std::span<const std::uint32_t> row(std::size_t i) const {
        return {bins.data() + i * n_cols, n_cols};
    }
};

/// Equal-width binning fitted on training data and reusable on test data.
/// Per attribute: width = (max - min) / n_bins over the fitted column;
/// bin(x) = floor((x - min) / width), with the column maximum falling in the
/// last bin and out-of-range values clamped to the nearest outer bin.
/// A constant attribute degenerates to a single bin (flagged, not an error).
class Discretizer {
public:
    static Discretizer fit(const Dataset& train, std::uint32_t n_bins);

    /// Requires labels on `ds` (they become the nominal classes).
    NominalDataset apply(const Dataset& ds) const;

    std::uint32_t n_bins() const { return n_bins_; }
    const std::vector<std::vector<double>>& bin_edges() const { return bin_edges_; }
    const std::vector<bool>& constant_attribute() const { return constant_; }

private:
    std::vector<double> lo_;
    std::vector<double> width_; // 0 for constant attributes
    std::vector<std::vector<double>> bin_edges_;
    std::vector<bool> constant_;
    std::uint32_t n_bins_ = 0;
};

/// fit + apply on the same data.
NominalDataset discretize(const Dataset& ds, std::uint32_t n_bins);

} // namespace shachom

#endif
