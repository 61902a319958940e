#include "shachom/id3.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "shachom/error.hpp"

namespace shachom {

namespace {

constexpr double kGainTieTolerance = 1e-12;

/// Class counts over `rows` in first-occurrence order.
struct ClassCounts {
    std::vector<std::string> order;
    std::vector<std::size_t> counts;

    void add(const std::string& cls) {
        for (std::size_t c = 0; c < order.size(); ++c) {
            if (order[c] == cls) {
                ++counts[c];
                return;
            }
        }
        order.push_back(cls);
        counts.push_back(1);
    }

    /// Majority class, earliest-seen breaking ties.
    const std::string& majority() const {
        std::size_t best = 0;
        for (std::size_t c = 1; c < order.size(); ++c)
            if (counts[c] > counts[best])
                best = c;
        return order[best];
    }

    bool pure() const { return order.size() == 1; }
};

ClassCounts count_classes(const NominalDataset& data, std::span<const std::size_t> rows) {
    ClassCounts cc;
    for (const std::size_t r : rows)
        cc.add(data.classes[r]);
    return cc;
}

double entropy_of_counts(const std::vector<std::size_t>& counts, std::size_t total) {
    double h = 0.0;
    for (const std::size_t c : counts) {
        if (c == 0)
            continue; // 0 * log 0 = 0
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

double gain_on_rows(const NominalDataset& data, std::span<const std::size_t> rows,
                    std::size_t attribute) {
    const ClassCounts base = count_classes(data, rows);
    const double h_class = entropy_of_counts(base.counts, rows.size());

    // partition rows by bin value of the attribute
    std::vector<std::uint32_t> values;
    std::vector<std::vector<std::size_t>> parts;
    for (const std::size_t r : rows) {
        const std::uint32_t v = data.bin(r, attribute);
        std::size_t p = 0;
        for (; p < values.size(); ++p)
            if (values[p] == v)
                break;
        if (p == values.size()) {
            values.push_back(v);
            parts.emplace_back();
        }
        parts[p].push_back(r);
    }

    double weighted = 0.0;
    for (const auto& part : parts) {
        const ClassCounts cc = count_classes(data, part);
        weighted += static_cast<double>(part.size()) / static_cast<double>(rows.size()) *
                    entropy_of_counts(cc.counts, part.size());
    }
    return h_class - weighted;
}

std::unique_ptr<DecisionNode> build(const NominalDataset& data,
                                    const std::vector<std::size_t>& rows,
                                    std::vector<bool>& used) {
    const ClassCounts cc = count_classes(data, rows);

    auto node = std::make_unique<DecisionNode>();
    node->class_label = cc.majority();

    const bool attributes_left =
        std::any_of(used.begin(), used.end(), [](bool u) { return !u; });
    if (cc.pure() || !attributes_left)
        return node; // leaf

    // best gain, lowest attribute index breaking ties
    std::size_t best_attr = 0;
    double best_gain = -1.0;
    for (std::size_t t = 0; t < data.n_cols; ++t) {
        if (used[t])
            continue;
        const double g = gain_on_rows(data, rows, t);
        if (best_gain < 0.0 || g > best_gain + kGainTieTolerance) {
            best_gain = g;
            best_attr = t;
        }
    }

    node->is_leaf = false;
    node->split_attribute = best_attr;

    // one child per bin value present, in ascending bin order
    std::vector<std::uint32_t> values;
    for (const std::size_t r : rows) {
        const std::uint32_t v = data.bin(r, best_attr);
        if (std::find(values.begin(), values.end(), v) == values.end())
            values.push_back(v);
    }
    std::sort(values.begin(), values.end());

    used[best_attr] = true;
    for (const std::uint32_t v : values) {
        std::vector<std::size_t> subset;
        for (const std::size_t r : rows)
            if (data.bin(r, best_attr) == v)
                subset.push_back(r);
        node->children.emplace(v, build(data, subset, used));
    }
    used[best_attr] = false;

    return node;
}

} // namespace

double class_entropy(const NominalDataset& data, std::span<const std::size_t> rows) {
    const ClassCounts cc = count_classes(data, rows);
    return entropy_of_counts(cc.counts, rows.size());
}

double information_gain(const NominalDataset& data, std::size_t attribute) {
    if (data.n_rows == 0)
        throw ValidationError("information_gain: empty dataset");
    if (attribute >= data.n_cols)
        throw ValidationError("information_gain: attribute index out of range");
    std::vector<std::size_t> rows(data.n_rows);
    std::iota(rows.begin(), rows.end(), 0);
    return gain_on_rows(data, rows, attribute);
}

std::unique_ptr<DecisionNode> id3_train(const NominalDataset& train) {
    if (train.n_rows == 0)
        throw ValidationError("id3_train: empty training set");
    std::vector<std::size_t> rows(train.n_rows);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<bool> used(train.n_cols, false);
    return build(train, rows, used);
}

const std::string& id3_predict(const DecisionNode& tree,
                               std::span<const std::uint32_t> instance) {
    const DecisionNode* node = &tree;
    while (!node->is_leaf) {
        if (node->split_attribute >= instance.size())
            throw ValidationError("id3_predict: instance lacks attribute " +
                                  std::to_string(node->split_attribute));
        const auto child = node->children.find(instance[node->split_attribute]);
        if (child == node->children.end())
            return node->class_label; // unseen bin: node majority
        node = child->second.get();
    }
    return node->class_label;
}

} // namespace shachom
