#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "shachom/error.hpp"
#include "shachom/id3.hpp"
#include "support.hpp"

using namespace shachom;

namespace {

NominalDataset nominal(std::size_t n_cols, const std::vector<std::uint32_t>& bins,
                       const std::vector<std::string>& classes,
                       std::uint32_t n_bins = 4) {
    NominalDataset d;
    d.n_rows = classes.size();
    d.n_cols = n_cols;
    d.bins = bins;
    d.classes = classes;
    d.n_bins = n_bins;
    d.bin_edges.resize(n_cols);
    d.constant_attribute.assign(n_cols, false);
    return d;
}

// Direct-formula gain, written against materialized subsets rather than
// counting maps, as an independent check.
double gain_oracle(const NominalDataset& d, std::size_t attr) {
    const auto entropy = [](const std::vector<std::string>& classes) {
        double h = 0.0;
        std::vector<std::string> seen;
        for (const auto& c : classes) {
            if (std::find(seen.begin(), seen.end(), c) != seen.end())
                continue;
            seen.push_back(c);
            const double count = static_cast<double>(
                std::count(classes.begin(), classes.end(), c));
            const double p = count / static_cast<double>(classes.size());
            h -= p * std::log2(p);
        }
        return h;
    };

    double remainder = 0.0;
    std::vector<std::uint32_t> seen_bins;
    for (std::size_t r = 0; r < d.n_rows; ++r) {
        const std::uint32_t v = d.bin(r, attr);
        if (std::find(seen_bins.begin(), seen_bins.end(), v) != seen_bins.end())
            continue;
        seen_bins.push_back(v);
        std::vector<std::string> subset;
        for (std::size_t q = 0; q < d.n_rows; ++q)
            if (d.bin(q, attr) == v)
                subset.push_back(d.classes[q]);
        remainder += static_cast<double>(subset.size()) /
                     static_cast<double>(d.n_rows) * entropy(subset);
    }
    return entropy(d.classes) - remainder;
}

} // namespace

TEST_CASE("information gain on hand-checked tables") {
    // perfectly separating attribute over balanced binary classes
    const auto sep = nominal(1, {0, 0, 1, 1}, {"+", "+", "-", "-"});
    CHECK(information_gain(sep, 0) == doctest::Approx(1.0).epsilon(1e-12));

    // constant attribute carries nothing
    const auto flat = nominal(1, {2, 2, 2, 2}, {"+", "+", "-", "-"});
    CHECK(information_gain(flat, 0) == 0.0);

    // {+,+} / {+,-} split of [+,+,+,-]: 0.8113 - 0.5*0 - 0.5*1
    const auto skew = nominal(1, {0, 0, 1, 1}, {"+", "+", "+", "-"});
    CHECK(information_gain(skew, 0) == doctest::Approx(0.31127812445913283).epsilon(1e-12));
}

TEST_CASE("information gain matches the direct-formula oracle on random tables") {
    std::mt19937_64 rng(606);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t rows = 2 + testsup::uniform_int(rng, 40);
        const std::size_t cols = 1 + testsup::uniform_int(rng, 5);
        const std::uint32_t n_bins = 2 + static_cast<std::uint32_t>(testsup::uniform_int(rng, 4));
        std::vector<std::uint32_t> bins(rows * cols);
        for (auto& b : bins)
            b = static_cast<std::uint32_t>(testsup::uniform_int(rng, n_bins));
        std::vector<std::string> classes(rows);
        for (auto& c : classes)
            c = std::to_string(testsup::uniform_int(rng, 3));
        const auto d = nominal(cols, bins, classes, n_bins);

        const std::size_t attr = testsup::uniform_int(rng, cols);
        const double gain = information_gain(d, attr);
        CHECK(gain == doctest::Approx(gain_oracle(d, attr)).epsilon(1e-9));
        CHECK(gain >= -1e-12);
        std::vector<std::size_t> all(rows);
        std::iota(all.begin(), all.end(), 0);
        CHECK(gain <= class_entropy(d, all) + 1e-12);
    }
}

TEST_CASE("id3 training on pure and separable data") {
    const auto pure = nominal(2, {0, 1, 1, 0, 0, 1}, {"x", "x", "x"});
    const auto leaf = id3_train(pure);
    CHECK(leaf->is_leaf);
    CHECK(leaf->class_label == "x");

    const auto sep = nominal(1, {0, 0, 1, 1}, {"+", "+", "-", "-"});
    const auto tree = id3_train(sep);
    REQUIRE_FALSE(tree->is_leaf);
    CHECK(tree->split_attribute == 0);
    CHECK(tree->children.size() == 2);
    CHECK(tree->children.at(0)->is_leaf);
    CHECK(tree->children.at(0)->class_label == "+");
    CHECK(tree->children.at(1)->class_label == "-");
}

TEST_CASE("id3 splits on the higher-gain attribute") {
    // attribute 0: gain 0.3113 ({+,+} / {+,-}); attribute 1: constant, gain 0
    const auto d = nominal(2, {0, 3, 0, 3, 1, 3, 1, 3}, {"+", "+", "+", "-"});
    CHECK(information_gain(d, 0) == doctest::Approx(0.31127812445913283).epsilon(1e-12));
    CHECK(information_gain(d, 1) == 0.0);
    const auto tree = id3_train(d);
    REQUIRE_FALSE(tree->is_leaf);
    CHECK(tree->split_attribute == 0);
}

TEST_CASE("prediction basics, unseen bins fall back to node majority") {
    const auto d = nominal(2, {0, 3, 0, 3, 1, 3, 1, 3}, {"+", "+", "+", "-"});
    const auto tree = id3_train(d);

    // training rows reproduce their branch
    const std::vector<std::uint32_t> row0{0, 3};
    CHECK(id3_predict(*tree, row0) == "+");

    // bin 2 never occurred at the root: majority of the whole training set
    const std::vector<std::uint32_t> unseen{2, 3};
    CHECK(id3_predict(*tree, unseen) == "+");

    const auto leaf = id3_train(nominal(1, {0, 0}, {"z", "z"}));
    const std::vector<std::uint32_t> any{7};
    CHECK(id3_predict(*leaf, any) == "z");
}

TEST_CASE("majority ties break toward the earliest-seen class") {
    // attributes exhausted at the root child: {-, +} subset, "-" seen first
    const auto d = nominal(1, {0, 0, 1, 1}, {"-", "+", "+", "+"});
    const auto tree = id3_train(d);
    REQUIRE_FALSE(tree->is_leaf);
    const auto& child = tree->children.at(0);
    CHECK(child->is_leaf);
    CHECK(child->class_label == "-");
}

TEST_CASE("training accuracy is 1.0 on consistent separable data") {
    std::mt19937_64 rng(8181);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t rows = 6 + testsup::uniform_int(rng, 30);
        const std::size_t cols = 2 + testsup::uniform_int(rng, 4);
        std::vector<std::uint32_t> bins(rows * cols);
        std::vector<std::string> classes(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            const std::uint32_t cls = static_cast<std::uint32_t>(testsup::uniform_int(rng, 3));
            classes[r] = std::to_string(cls);
            // attribute 0 encodes the class; the rest are noise
            bins[r * cols] = cls;
            for (std::size_t c = 1; c < cols; ++c)
                bins[r * cols + c] = static_cast<std::uint32_t>(testsup::uniform_int(rng, 4));
        }
        const auto d = nominal(cols, bins, classes);
        const auto tree = id3_train(d);
        for (std::size_t r = 0; r < rows; ++r)
            CHECK(id3_predict(*tree, d.row(r)) == classes[r]);
    }
}

TEST_CASE("no attribute repeats on any root-to-leaf path") {
    std::mt19937_64 rng(415);
    const std::size_t rows = 40, cols = 4;
    std::vector<std::uint32_t> bins(rows * cols);
    for (auto& b : bins)
        b = static_cast<std::uint32_t>(testsup::uniform_int(rng, 3));
    std::vector<std::string> classes(rows);
    for (auto& c : classes)
        c = std::to_string(testsup::uniform_int(rng, 2));
    const auto tree = id3_train(nominal(cols, bins, classes, 3));

    std::function<void(const DecisionNode&, std::vector<std::size_t>)> walk =
        [&](const DecisionNode& node, std::vector<std::size_t> path) {
            if (node.is_leaf)
                return;
            CHECK(std::find(path.begin(), path.end(), node.split_attribute) == path.end());
            CHECK(!node.children.empty());
            path.push_back(node.split_attribute);
            for (const auto& [v, child] : node.children)
                walk(*child, path);
        };
    walk(*tree, {});
}
