#include "shachom/discretize.hpp"

#include <algorithm>
#include <cmath>

#include "shachom/error.hpp"

namespace shachom {

Discretizer Discretizer::fit(const Dataset& train, std::uint32_t n_bins) {
    if (n_bins < 2)
        throw ValidationError("discretization needs at least 2 bins");

    Discretizer d;
    d.n_bins_ = n_bins;
    const std::size_t n_attr = train.n_attributes();
    d.lo_.resize(n_attr);
    d.width_.resize(n_attr);
    d.bin_edges_.resize(n_attr);
    d.constant_.resize(n_attr);

    for (std::size_t t = 0; t < n_attr; ++t) {
        double lo = train.at(0, t);
        double hi = lo;
        for (std::size_t i = 1; i < train.n_instances(); ++i) {
            lo = std::min(lo, train.at(i, t));
            hi = std::max(hi, train.at(i, t));
        }
        d.lo_[t] = lo;
        d.constant_[t] = (hi == lo);
        if (d.constant_[t]) {
            d.width_[t] = 0.0; // single bin
        } else {
            d.width_[t] = (hi - lo) / static_cast<double>(n_bins);
            d.bin_edges_[t].reserve(n_bins - 1);
            for (std::uint32_t b = 1; b < n_bins; ++b)
                d.bin_edges_[t].push_back(lo + d.width_[t] * static_cast<double>(b));
        }
    }
    return d;
}

NominalDataset Discretizer::apply(const Dataset& ds) const {
    if (!ds.has_labels())
        throw ValidationError("discretization requires a labeled dataset");
    if (ds.n_attributes() != lo_.size())
        throw ValidationError("dataset has " + std::to_string(ds.n_attributes()) +
                              " attributes, discretizer was fitted on " +
                              std::to_string(lo_.size()));

    NominalDataset out;
    out.n_rows = ds.n_instances();
    out.n_cols = ds.n_attributes();
    out.n_bins = n_bins_;
    out.bin_edges = bin_edges_;
    out.constant_attribute = constant_;
    out.classes = ds.labels();
    out.bins.resize(out.n_rows * out.n_cols);

    for (std::size_t i = 0; i < out.n_rows; ++i) {
        for (std::size_t t = 0; t < out.n_cols; ++t) {
            std::uint32_t b = 0;
            if (!constant_[t]) {
                const double pos = (ds.at(i, t) - lo_[t]) / width_[t];
                // the fitted maximum and anything above clamp to the last
                // bin; below the minimum clamps to the first
                const double f = std::floor(pos);
                if (f <= 0.0)
                    b = 0;
                else if (f >= static_cast<double>(n_bins_ - 1))
                    b = n_bins_ - 1;
                else
                    b = static_cast<std::uint32_t>(f);
            }
            out.bins[i * out.n_cols + t] = b;
        }
    }
    return out;
}

NominalDataset discretize(const Dataset& ds, std::uint32_t n_bins) {
    return Discretizer::fit(ds, n_bins).apply(ds);
}

} // namespace shachom
