#ifndef SHACHOM_ID3_HPP
#define SHACHOM_ID3_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>

#include "shachom/discretize.hpp"

namespace shachom {

/// Decision tree node. An internal node splits on `split_attribute` with one
/// child per bin value present in its training subset; `majority_class` (the
/// subset's majority, earliest-seen class breaking ties) answers bin values
/// never seen at train time. No attribute repeats on a root-to-leaf path.
struct DecisionNode {
    bool is_leaf = true;
    std::string class_label; // leaf class, or node majority when internal
    std::size_t split_attribute = 0;
    std::map<std::uint32_t, std::unique_ptr<DecisionNode>> children;
};

/// Entropy of the class column restricted to `rows`, in bits.
double class_entropy(const NominalDataset& data, std::span<const std::size_t> rows);

/// entropy(class) - sum_v (|subset_v| / |data|) * entropy(class | attr = v),
/// with 0 * log 0 taken as 0. Non-negative, bounded by the class entropy.
double information_gain(const NominalDataset& data, std::size_t attribute);

/// ID3 induction: leaves on class purity or attribute exhaustion; otherwise
/// splits on the maximum-gain attribute, lowest index breaking gain ties
/// within 1e-12.
std::unique_ptr<DecisionNode> id3_train(const NominalDataset& train);

/// Tree descent by bin value; an unseen bin stops at that node's stored
/// majority class.
const std::string& id3_predict(const DecisionNode& tree,
                               std::span<const std::uint32_t> instance);

} // namespace shachom

#endif
