#ifndef SHACHOM_CLUSTER_HPP
#define SHACHOM_CLUSTER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "shachom/dataset.hpp"
#include "shachom/distance.hpp"
#include "shachom/homogeneity.hpp"

namespace shachom {

/// How the merged pair was singled out at a step.
enum class TieResolution {
    UniqueMin,    // occ = 1: the minimum distance pair was unique
    Homogeneity,  // occ > 1: smallest hc was unique among candidates
    IdOrder,      // occ > 1: hc tied as well; ascending id order decided
};

std::string_view to_string(TieResolution r);

/// One merge: which clusters fused, at what height, and how ties were
/// resolved. `hc_value` is present exactly when occ > 1.
struct MergeRecord {
    std::size_t step = 0; // 1-based
    ClusterId left = 0;   // left < right
    ClusterId right = 0;
    ClusterId new_id = 0;
    double distance = 0.0;
    std::size_t occ = 1;
    TieResolution resolved_by = TieResolution::UniqueMin;
    std::optional<double> hc_value;

    bool operator==(const MergeRecord&) const = default;
};

/// Ordered merge history. Leaves are ids 0..n_leaves-1; record r creates
/// id n_leaves + r. Heights are non-decreasing (single linkage admits no
/// inversions); the engine verifies this on every run.
struct Dendrogram {
    std::size_t n_leaves = 0;
    std::size_t final_k = 0;
    std::vector<MergeRecord> records;

    bool operator==(const Dendrogram&) const = default;
};

/// Flat cluster assignment with labels 0..k-1, canonicalized so that label
/// numbering follows first occurrence over instance index.
struct Partition {
    std::vector<std::uint32_t> assignment;
    std::size_t k = 0;

    bool operator==(const Partition&) const = default;
};

struct ClusteringResult {
    Dendrogram dendrogram;
    Partition partition;
};

/// Single-linkage inter-cluster distance after merging i and j, seen from a
/// surviving cluster: min of the two previous distances.
double single_linkage_update(double d_ik, double d_jk);

/// Agglomerative single-linkage clustering down to k clusters. Every
/// instance starts as a singleton; each step merges the minimum-distance
/// pair, with distance ties broken by minimal inter-cluster homogeneity
/// (hc) under `w`, and hc ties broken by ascending id. Deterministic:
/// identical inputs give bit-identical results.
ClusteringResult cluster(const Dataset& ds, std::size_t k, const WeightVector& w,
                         double tie_eps = 1e-9);

/// Partition at a coarser cut k_prime (final_k <= k_prime <= n_leaves),
/// obtained by replaying the first n_leaves - k_prime records.
Partition partition_at(const Dendrogram& dg, std::size_t k_prime);

} // namespace shachom

#endif
