#include "shachom/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shachom/error.hpp"

namespace shachom {

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ValidationError("euclidean: vector lengths differ (" +
                              std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
    double sum = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const double d = a[t] - b[t];
        sum += d * d;
    }
    return std::sqrt(sum);
}

DistanceMatrix::DistanceMatrix(std::size_t n_initial) {
    rows_.resize(n_initial);
    for (std::size_t j = 0; j < n_initial; ++j)
        rows_[j].assign(j, 0.0);
    active_.resize(n_initial);
    for (std::size_t j = 0; j < n_initial; ++j)
        active_[j] = static_cast<ClusterId>(j);
    active_flag_.assign(n_initial, true);
}

std::size_t DistanceMatrix::index_of(ClusterId a, ClusterId b) const {
    if (a == b)
        throw ValidationError("no self-distance is stored");
    if (a > b)
        std::swap(a, b);
    if (b >= rows_.size())
        throw ValidationError("cluster id " + std::to_string(b) + " unknown");
    return a; // row b, slot a
}

double DistanceMatrix::at(ClusterId a, ClusterId b) const {
    const std::size_t i = index_of(a, b);
    return rows_[std::max(a, b)][i];
}

void DistanceMatrix::set(ClusterId a, ClusterId b, double d) {
    if (!(std::isfinite(d) && d >= 0.0))
        throw InternalError("distance entries must be finite and non-negative");
    const std::size_t i = index_of(a, b);
    rows_[std::max(a, b)][i] = d;
}

ClusterId DistanceMatrix::add_cluster() {
    const ClusterId id = static_cast<ClusterId>(rows_.size());
    rows_.emplace_back(id, 0.0);
    active_.push_back(id); // fresh id is always the largest: stays sorted
    active_flag_.push_back(true);
    return id;
}

void DistanceMatrix::retire(ClusterId id) {
    if (id >= active_flag_.size() || !active_flag_[id])
        throw ValidationError("cannot retire inactive cluster " + std::to_string(id));
    active_flag_[id] = false;
    active_.erase(std::find(active_.begin(), active_.end(), id));
}

bool DistanceMatrix::is_active(ClusterId id) const {
    return id < active_flag_.size() && active_flag_[id];
}

std::size_t DistanceMatrix::entry_count() const {
    return active_.size() * (active_.size() - 1) / 2;
}

DistanceMatrix build_distance_matrix(const Dataset& ds) {
    if (ds.n_instances() < 2)
        throw ValidationError("distance matrix needs at least 2 instances");
    DistanceMatrix mat(ds.n_instances());
    for (std::size_t j = 1; j < ds.n_instances(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            mat.set(static_cast<ClusterId>(i), static_cast<ClusterId>(j),
                    euclidean(ds.row(i), ds.row(j)));
    return mat;
}

TieSet min_with_ties(const DistanceMatrix& mat, double tie_eps) {
    if (mat.active_count() < 2)
        throw ValidationError("min_with_ties needs at least 2 active clusters");
    if (tie_eps < 0.0)
        throw ValidationError("tie_eps must be non-negative");

    const auto& ids = mat.active();
    double min_value = std::numeric_limits<double>::infinity();
    for (std::size_t bj = 1; bj < ids.size(); ++bj)
        for (std::size_t bi = 0; bi < bj; ++bi)
            min_value = std::min(min_value, mat.at(ids[bi], ids[bj]));

    const double tol = tie_eps * std::max(1.0, min_value);
    TieSet ties;
    ties.min_value = min_value;
    // Scan in ascending (i, j): candidates come out canonically ordered.
    for (std::size_t bi = 0; bi + 1 < ids.size(); ++bi)
        for (std::size_t bj = bi + 1; bj < ids.size(); ++bj)
            if (mat.at(ids[bi], ids[bj]) - min_value <= tol)
                ties.candidates.emplace_back(ids[bi], ids[bj]);
    return ties;
}

} // namespace shachom
