#ifndef SHACHOM_HOMOGENEITY_HPP
#define SHACHOM_HOMOGENEITY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shachom/dataset.hpp"
#include "shachom/distance.hpp"

namespace shachom {

/// Per-attribute weighting coefficients, each strictly inside (0, 1).
/// An attribute's term in the homogeneity measure is scaled by (1 - alpha),
/// so a larger coefficient shrinks that attribute's contribution.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> alphas);

    std::size_t size() const { return alphas_.size(); }
    double operator[](std::size_t t) const { return alphas_[t]; }
    const std::vector<double>& alphas() const { return alphas_; }

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<double> alphas_;
};

/// WeightVector with the same coefficient on every attribute.
WeightVector broadcast_alpha(double alpha, std::size_t n_attributes);

/// Parses a scalar or comma-separated alpha list, checking each value
/// against the open interval but not the list length.
std::vector<double> parse_alpha_values(const std::string& spec);

/// Parses the CLI form: either a single scalar ("0.2") broadcast over all
/// attributes, or a comma-separated per-attribute list whose length must
/// equal `n_attributes`.
WeightVector alpha_from_string(const std::string& spec, std::size_t n_attributes);

/// A cluster's member set plus its per-attribute column sums, maintained
/// incrementally across merges. `members` is sorted ascending.
struct ClusterSums {
    ClusterId id = 0;
    std::vector<std::size_t> members;
    std::vector<double> sums;
};

/// Singleton cluster for one dataset row (id = instance index).
ClusterSums singleton_sums(const Dataset& ds, std::size_t instance);

/// Inter-cluster homogeneity:
///
///   hc = (1/N) * sum_t (1 - alpha_t) * |sums_i[t] - sums_j[t]|
///
/// over the N attributes. Symmetric, non-negative, zero exactly when the sum
/// vectors are equal. Uses raw sums, not means, so the measure is sensitive
/// to cluster size.
double hc(const ClusterSums& ci, const ClusterSums& cj, const WeightVector& w);

/// Union of two disjoint clusters under a fresh id; sums add element-wise.
ClusterSums merged_sums(const ClusterSums& ci, const ClusterSums& cj, ClusterId new_id);

/// Secondary ties on hc closer than this are broken by id order.
inline constexpr double kHcTieTolerance = 1e-12;

struct QualifiedCouple {
    std::pair<ClusterId, ClusterId> couple;
    double hc_value = 0.0;
    /// Candidates whose hc lies within kHcTieTolerance of the minimum;
    /// greater than 1 means the winner was decided by id order.
    std::size_t tied_at_minimum = 1;
};

/// Among distance-tied candidates, the pair with minimal hc. When several
/// candidates share the minimal hc the first in ascending (smaller id,
/// larger id) order wins; that ordering is re-imposed internally, so the
/// result does not depend on the candidate list's order.
QualifiedCouple qualified_couple(const TieSet& candidates,
                                 const std::map<ClusterId, ClusterSums>& state,
                                 const WeightVector& w);

} // namespace shachom

#endif
