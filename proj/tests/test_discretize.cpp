#include <doctest.h>

#include <algorithm>
#include <vector>

#include "shachom/discretize.hpp"
#include "shachom/error.hpp"
#include "support.hpp"

using namespace shachom;

namespace {

Dataset column(const std::vector<double>& values) {
    std::vector<std::string> labels(values.size(), "x");
    return Dataset(values.size(), 1, values, {"a0"}, labels);
}

} // namespace

TEST_CASE("two-bin column with the boundary value") {
    const NominalDataset d = discretize(column({0, 5, 10}), 2);
    CHECK(d.bin(0, 0) == 0);
    CHECK(d.bin(1, 0) == 1); // boundary falls in the upper bin
    CHECK(d.bin(2, 0) == 1); // maximum falls in the last bin
    REQUIRE(d.bin_edges[0].size() == 1);
    CHECK(d.bin_edges[0][0] == 5.0);
}

TEST_CASE("column maximum always lands in the last bin") {
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> values(10);
        for (auto& v : values)
            v = testsup::uniform(rng, -20, 20);
        const std::uint32_t n_bins = 2 + static_cast<std::uint32_t>(testsup::uniform_int(rng, 9));
        const NominalDataset d = discretize(column(values), n_bins);
        const auto max_it = std::max_element(values.begin(), values.end());
        const auto pos = static_cast<std::size_t>(max_it - values.begin());
        CHECK(d.bin(pos, 0) == n_bins - 1);
        const auto min_pos = static_cast<std::size_t>(
            std::min_element(values.begin(), values.end()) - values.begin());
        CHECK(d.bin(min_pos, 0) == 0);
        for (std::size_t t = 1; t < d.bin_edges[0].size(); ++t)
            CHECK(d.bin_edges[0][t] > d.bin_edges[0][t - 1]);
    }
}

TEST_CASE("test values outside the fitted range clamp to the outer bins") {
    const Discretizer disc = Discretizer::fit(column({0, 5, 10}), 2);
    const NominalDataset out = disc.apply(column({-100, 12, 4.999}));
    CHECK(out.bin(0, 0) == 0);
    CHECK(out.bin(1, 0) == 1);
    CHECK(out.bin(2, 0) == 0);
}

TEST_CASE("constant attribute degenerates to one bin") {
    const NominalDataset d = discretize(column({7, 7, 7}), 4);
    CHECK(d.constant_attribute[0]);
    CHECK(d.bin_edges[0].empty());
    CHECK(d.bin(0, 0) == 0);
    CHECK(d.bin(2, 0) == 0);
}

TEST_CASE("discretize validation") {
    CHECK_THROWS_AS(discretize(column({1, 2}), 1), ValidationError);
    const Dataset unlabeled = testsup::three_points();
    CHECK_THROWS_AS(Discretizer::fit(unlabeled, 4).apply(unlabeled), ValidationError);
    const Discretizer one_col = Discretizer::fit(column({1, 2}), 2);
    const Dataset two_cols(1, 2, {1, 2}, {"a", "b"}, std::vector<std::string>{"x"});
    CHECK_THROWS_AS(one_col.apply(two_cols), ValidationError);
}

TEST_CASE("edges are reusable: train fit applied to test keeps train geometry") {
    std::mt19937_64 rng(23);
    std::vector<double> train_col(40), test_col(15);
    for (auto& v : train_col)
        v = testsup::uniform(rng, 0, 100);
    for (auto& v : test_col)
        v = testsup::uniform(rng, -10, 110);
    const Discretizer disc = Discretizer::fit(column(train_col), 10);
    const NominalDataset test = disc.apply(column(test_col));
    CHECK(test.bin_edges == disc.bin_edges());
    for (std::size_t i = 0; i < test.n_rows; ++i)
        CHECK(test.bin(i, 0) <= 9);
}
