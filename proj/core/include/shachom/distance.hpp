#ifndef SHACHOM_DISTANCE_HPP
#define SHACHOM_DISTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shachom/dataset.hpp"

namespace shachom {

/// Cluster identifier. Leaves are 0..n-1; merged clusters receive fresh ids
/// n, n+1, ... and never reuse a retired id.
using ClusterId = std::uint32_t;

/// Euclidean distance between two equal-length vectors. Coordinates are
/// accumulated left to right so results are bit-reproducible.
double euclidean(std::span<const double> a, std::span<const double> b);

/// Condensed inter-cluster distance store keyed by unordered id pair.
/// One entry per pair, no self-distances. Merged clusters are retired in
/// place; their entries stay allocated but are never visited again.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n_initial);

    double at(ClusterId a, ClusterId b) const;
    void set(ClusterId a, ClusterId b, double d);

    /// Activates a fresh id (one past the largest ever issued). Distances to
    /// the other active clusters must be set before the next query.
    ClusterId add_cluster();
    void retire(ClusterId id);

    bool is_active(ClusterId id) const;
    /// Active ids in ascending order.
    const std::vector<ClusterId>& active() const { return active_; }
    std::size_t active_count() const { return active_.size(); }
    /// Number of stored active-pair entries: m*(m-1)/2 for m active clusters.
    std::size_t entry_count() const;

private:
    std::size_t index_of(ClusterId a, ClusterId b) const;

    // Ragged lower triangle: row j holds entries (i, j) for all i < j.
    std::vector<std::vector<double>> rows_;
    std::vector<ClusterId> active_; // sorted ascending
    std::vector<bool> active_flag_;
};

/// All-pairs Euclidean distances over the dataset rows; entry (i, j) is the
/// distance between instances i and j. Requires at least two instances.
DistanceMatrix build_distance_matrix(const Dataset& ds);

/// The minimum entry of a distance matrix together with every pair that
/// attains it up to tolerance.
struct TieSet {
    double min_value = 0.0;
    /// Pairs (a, b) with a < b, sorted ascending by (a, b). Never empty.
    std::vector<std::pair<ClusterId, ClusterId>> candidates;

    std::size_t occ() const { return candidates.size(); }
};

/// Global minimum scan. A pair with entry d is a candidate when
/// d - min <= tie_eps * max(1, min); tie_eps = 0 keeps exact ties only.
TieSet min_with_ties(const DistanceMatrix& mat, double tie_eps);

} // namespace shachom

#endif
