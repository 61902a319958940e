#include "shachom/homogeneity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "shachom/error.hpp"

namespace shachom {

WeightVector::WeightVector(std::vector<double> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty())
        throw ValidationError("weight vector must not be empty");
    for (const double a : alphas_)
        if (!(a > 0.0 && a < 1.0))
            throw ValidationError("weighting coefficient " + std::to_string(a) +
                                  " outside the open interval (0, 1)");
}

WeightVector broadcast_alpha(double alpha, std::size_t n_attributes) {
    if (n_attributes < 1)
        throw ValidationError("attribute count must be at least 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ValidationError("alpha must lie strictly inside (0, 1)");
    return WeightVector(std::vector<double>(n_attributes, alpha));
}

std::vector<double> parse_alpha_values(const std::string& spec) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t pos = spec.find(',', start);
        if (pos == std::string::npos)
            pos = spec.size();
        const char* first = spec.data() + start;
        const char* last = spec.data() + pos;
        while (first < last && *first == ' ')
            ++first;
        while (last > first && last[-1] == ' ')
            --last;
        double v = 0.0;
        const auto [end, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || end != last)
            throw ValidationError("cannot parse alpha value '" +
                                  std::string(first, last) + "'");
        if (!(v > 0.0 && v < 1.0))
            throw ValidationError("alpha value " + std::string(first, last) +
                                  " outside the open interval (0, 1)");
        parts.push_back(v);
        start = pos + 1;
    }
    return parts;
}

WeightVector alpha_from_string(const std::string& spec, std::size_t n_attributes) {
    std::vector<double> parts = parse_alpha_values(spec);
    if (parts.size() == 1)
        return broadcast_alpha(parts[0], n_attributes);
    if (parts.size() != n_attributes)
        throw ValidationError("alpha list has " + std::to_string(parts.size()) +
                              " entries but the dataset has " +
                              std::to_string(n_attributes) + " attributes");
    return WeightVector(std::move(parts));
}

ClusterSums singleton_sums(const Dataset& ds, std::size_t instance) {
    if (instance >= ds.n_instances())
        throw ValidationError("instance index out of range");
    const auto row = ds.row(instance);
    return ClusterSums{static_cast<ClusterId>(instance),
                       {instance},
                       {row.begin(), row.end()}};
}

double hc(const ClusterSums& ci, const ClusterSums& cj, const WeightVector& w) {
    const std::size_t n = w.size();
    if (ci.sums.size() != n || cj.sums.size() != n)
        throw ValidationError("hc: sum vectors and weights must have equal length");
    double total = 0.0;
    for (std::size_t t = 0; t < n; ++t)
        total += (1.0 - w[t]) * std::abs(ci.sums[t] - cj.sums[t]);
    return total / static_cast<double>(n);
}

ClusterSums merged_sums(const ClusterSums& ci, const ClusterSums& cj, ClusterId new_id) {
    if (ci.sums.size() != cj.sums.size())
        throw ValidationError("merged_sums: sum vector lengths differ");
    if (ci.members.empty() || cj.members.empty())
        throw ValidationError("merged_sums: empty clusters are unrepresentable");

    ClusterSums out;
    out.id = new_id;
    out.members.resize(ci.members.size() + cj.members.size());
    std::merge(ci.members.begin(), ci.members.end(), cj.members.begin(),
               cj.members.end(), out.members.begin());
    for (std::size_t i = 1; i < out.members.size(); ++i)
        if (out.members[i] == out.members[i - 1])
            throw ValidationError("merged_sums: member sets overlap at instance " +
                                  std::to_string(out.members[i]));

    out.sums.resize(ci.sums.size());
    for (std::size_t t = 0; t < ci.sums.size(); ++t)
        out.sums[t] = ci.sums[t] + cj.sums[t];
    return out;
}

QualifiedCouple qualified_couple(const TieSet& candidates,
                                 const std::map<ClusterId, ClusterSums>& state,
                                 const WeightVector& w) {
    if (candidates.candidates.empty())
        throw ValidationError("qualified_couple: no candidates");

    auto pairs = candidates.candidates;
    for (auto& [a, b] : pairs)
        if (a > b)
            std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());

    std::vector<double> values(pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        const auto i = state.find(pairs[c].first);
        const auto j = state.find(pairs[c].second);
        if (i == state.end() || j == state.end())
            throw ValidationError("qualified_couple: candidate references a retired or "
                                  "unknown cluster");
        values[c] = hc(i->second, j->second, w);
    }

    const double min_hc = *std::min_element(values.begin(), values.end());
    QualifiedCouple result;
    result.tied_at_minimum = 0;
    bool chosen = false;
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        if (values[c] - min_hc <= kHcTieTolerance) {
            ++result.tied_at_minimum;
            if (!chosen) {
                result.couple = pairs[c];
                result.hc_value = values[c];
                chosen = true;
            }
        }
    }
    return result;
}

} // namespace shachom
