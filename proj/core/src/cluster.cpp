#include "shachom/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "shachom/error.hpp"

namespace shachom {

std::string_view to_string(TieResolution r) {
    switch (r) {
        case TieResolution::UniqueMin: return "unique-min";
        case TieResolution::Homogeneity: return "homogeneity";
        case TieResolution::IdOrder: return "id-order";
    }
    throw InternalError("unknown TieResolution");
}

double single_linkage_update(double d_ik, double d_jk) {
    if (!(std::isfinite(d_ik) && d_ik >= 0.0 && std::isfinite(d_jk) && d_jk >= 0.0))
        throw ValidationError("single_linkage_update requires finite non-negative distances");
    return std::min(d_ik, d_jk);
}

namespace {

/// Labels clusters by first occurrence over instance index.
Partition canonical_partition(const std::vector<std::vector<std::size_t>>& member_sets,
                              std::size_t n_instances) {
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> set_of(n_instances, kUnset);
    for (std::size_t s = 0; s < member_sets.size(); ++s)
        for (const std::size_t m : member_sets[s]) {
            if (m >= n_instances || set_of[m] != kUnset)
                throw InternalError("partition does not cover each instance exactly once");
            set_of[m] = static_cast<std::uint32_t>(s);
        }

    Partition p;
    p.assignment.assign(n_instances, kUnset);
    std::vector<std::uint32_t> label_of(member_sets.size(), kUnset);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n_instances; ++i) {
        if (set_of[i] == kUnset)
            throw InternalError("instance missing from every cluster");
        if (label_of[set_of[i]] == kUnset)
            label_of[set_of[i]] = next++;
        p.assignment[i] = label_of[set_of[i]];
    }
    p.k = next;
    if (p.k != member_sets.size())
        throw InternalError("empty cluster in partition");
    return p;
}

} // namespace

ClusteringResult cluster(const Dataset& ds, std::size_t k, const WeightVector& w,
                         double tie_eps) {
    const std::size_t n = ds.n_instances();
    if (k < 1 || k > n)
        throw ValidationError("k must lie in [1, " + std::to_string(n) + "], got " +
                              std::to_string(k));
    if (w.size() != ds.n_attributes())
        throw ValidationError("weight vector length " + std::to_string(w.size()) +
                              " does not match " + std::to_string(ds.n_attributes()) +
                              " attributes");
    if (tie_eps < 0.0)
        throw ValidationError("tie_eps must be non-negative");

    Dendrogram dg;
    dg.n_leaves = n;
    dg.final_k = k;

    std::map<ClusterId, ClusterSums> state;
    for (std::size_t i = 0; i < n; ++i)
        state.emplace(static_cast<ClusterId>(i), singleton_sums(ds, i));

    if (k < n) {
        DistanceMatrix mat = build_distance_matrix(ds);
        double last_height = 0.0;

        for (std::size_t step = 1; state.size() > k; ++step) {
            const TieSet ties = min_with_ties(mat, tie_eps);

            MergeRecord rec;
            rec.step = step;
            rec.distance = ties.min_value;
            rec.occ = ties.occ();
            if (ties.occ() == 1) {
                rec.resolved_by = TieResolution::UniqueMin;
                std::tie(rec.left, rec.right) = ties.candidates.front();
            } else {
                const QualifiedCouple qc = qualified_couple(ties, state, w);
                std::tie(rec.left, rec.right) = qc.couple;
                rec.hc_value = qc.hc_value;
                rec.resolved_by = qc.tied_at_minimum > 1 ? TieResolution::IdOrder
                                                         : TieResolution::Homogeneity;
            }

            if (rec.distance < last_height)
                throw InternalError("merge height decreased: single-linkage "
                                    "monotonicity violated");
            last_height = rec.distance;

            const ClusterId fresh = mat.add_cluster();
            rec.new_id = fresh;
            for (const ClusterId c : mat.active())
                if (c != rec.left && c != rec.right && c != fresh)
                    mat.set(fresh, c,
                            single_linkage_update(mat.at(rec.left, c), mat.at(rec.right, c)));
            mat.retire(rec.left);
            mat.retire(rec.right);

            state.emplace(fresh, merged_sums(state.at(rec.left), state.at(rec.right), fresh));
            state.erase(rec.left);
            state.erase(rec.right);

            dg.records.push_back(std::move(rec));
        }
    }

    if (dg.records.size() != n - k)
        throw InternalError("merge count does not equal n_instances - k");

    std::vector<std::vector<std::size_t>> member_sets;
    member_sets.reserve(state.size());
    for (const auto& [id, cs] : state)
        member_sets.push_back(cs.members);

    return ClusteringResult{std::move(dg), canonical_partition(member_sets, n)};
}

Partition partition_at(const Dendrogram& dg, std::size_t k_prime) {
    if (k_prime < dg.final_k || k_prime > dg.n_leaves)
        throw ValidationError("k' must lie in [" + std::to_string(dg.final_k) + ", " +
                              std::to_string(dg.n_leaves) + "], got " +
                              std::to_string(k_prime));

    const std::size_t replay = dg.n_leaves - k_prime;
    std::map<ClusterId, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < dg.n_leaves; ++i)
        members.emplace(static_cast<ClusterId>(i), std::vector<std::size_t>{i});

    for (std::size_t r = 0; r < replay; ++r) {
        const MergeRecord& rec = dg.records[r];
        auto li = members.find(rec.left);
        auto ri = members.find(rec.right);
        if (li == members.end() || ri == members.end())
            throw ValidationError("dendrogram record " + std::to_string(r + 1) +
                                  " references a consumed or unknown cluster");
        std::vector<std::size_t> merged(li->second.size() + ri->second.size());
        std::merge(li->second.begin(), li->second.end(), ri->second.begin(),
                   ri->second.end(), merged.begin());
        members.erase(li);
        members.erase(ri);
        if (!members.emplace(rec.new_id, std::move(merged)).second)
            throw ValidationError("dendrogram reuses cluster id " +
                                  std::to_string(rec.new_id));
    }

    std::vector<std::vector<std::size_t>> member_sets;
    member_sets.reserve(members.size());
    for (auto& [id, ms] : members)
        member_sets.push_back(std::move(ms));
    return canonical_partition(member_sets, dg.n_leaves);
}

} // namespace shachom
