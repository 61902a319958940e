#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "shachom/distance.hpp"
#include "shachom/error.hpp"
#include "support.hpp"

using namespace shachom;

TEST_CASE("euclidean basics") {
    const std::vector<double> o{0, 0}, p{3, 4};
    CHECK(euclidean(o, p) == 5.0);
    CHECK(euclidean(p, p) == 0.0);

    const std::vector<double> a{2, 3}, b{3, 2};
    CHECK(euclidean(a, b) == doctest::Approx(1.4142135624).epsilon(1e-9));
    CHECK(euclidean(a, b) == euclidean(b, a));

    const std::vector<double> short_vec{1};
    CHECK_THROWS_AS(euclidean(a, short_vec), ValidationError);
}

TEST_CASE("euclidean triangle inequality on random triples") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t d = 1 + testsup::uniform_int(rng, 8);
        std::vector<double> x(d), y(d), z(d);
        for (std::size_t t = 0; t < d; ++t) {
            x[t] = testsup::uniform(rng, -100, 100);
            y[t] = testsup::uniform(rng, -100, 100);
            z[t] = testsup::uniform(rng, -100, 100);
        }
        const double xy = euclidean(x, y), yz = euclidean(y, z), xz = euclidean(x, z);
        CHECK(xz <= (xy + yz) * (1.0 + 1e-12));
    }
}

TEST_CASE("build_distance_matrix on the three-point set") {
    const DistanceMatrix mat = build_distance_matrix(testsup::three_points());
    const double r2 = std::sqrt(2.0);
    CHECK(mat.at(0, 1) == r2);
    CHECK(mat.at(0, 2) == r2);
    CHECK(mat.at(1, 2) == 2.0);
    CHECK(mat.at(2, 1) == 2.0); // unordered access
    CHECK(mat.entry_count() == 3);
}

TEST_CASE("build_distance_matrix matches a naive double loop") {
    std::mt19937_64 rng(55);
    const Dataset ds = testsup::random_dataset(rng, 31, 4);
    const DistanceMatrix mat = build_distance_matrix(ds);
    CHECK(mat.entry_count() == 31 * 30 / 2);
    for (std::size_t i = 0; i < ds.n_instances(); ++i) {
        for (std::size_t j = i + 1; j < ds.n_instances(); ++j) {
            double sum = 0.0;
            for (std::size_t t = 0; t < ds.n_attributes(); ++t) {
                const double diff = ds.at(i, t) - ds.at(j, t);
                sum += diff * diff;
            }
            CHECK(mat.at(static_cast<ClusterId>(i), static_cast<ClusterId>(j)) ==
                  std::sqrt(sum));
        }
    }
}

TEST_CASE("distance matrix edge cases") {
    const Dataset dup(2, 2, {1, 2, 1, 2}, {"a0", "a1"});
    const DistanceMatrix mat = build_distance_matrix(dup);
    CHECK(mat.entry_count() == 1);
    CHECK(mat.at(0, 1) == 0.0);

    const Dataset one(1, 1, {5}, {"a0"});
    CHECK_THROWS_AS(build_distance_matrix(one), ValidationError);
}

TEST_CASE("min_with_ties finds the tied pairs of the three-point set") {
    const DistanceMatrix mat = build_distance_matrix(testsup::three_points());
    const TieSet ties = min_with_ties(mat, 1e-9);
    CHECK(ties.min_value == std::sqrt(2.0));
    CHECK(ties.occ() == 2);
    REQUIRE(ties.candidates.size() == 2);
    CHECK(ties.candidates[0] == std::pair<ClusterId, ClusterId>{0, 1});
    CHECK(ties.candidates[1] == std::pair<ClusterId, ClusterId>{0, 2});
}

TEST_CASE("min_with_ties distinct and total-tie cases") {
    DistanceMatrix mat(3);
    mat.set(0, 1, 1.0);
    mat.set(0, 2, 2.0);
    mat.set(1, 2, 3.0);
    const TieSet single = min_with_ties(mat, 1e-9);
    CHECK(single.min_value == 1.0);
    CHECK(single.occ() == 1);
    CHECK(single.candidates[0] == std::pair<ClusterId, ClusterId>{0, 1});

    DistanceMatrix all(4);
    for (ClusterId j = 1; j < 4; ++j)
        for (ClusterId i = 0; i < j; ++i)
            all.set(i, j, 7.5);
    CHECK(min_with_ties(all, 0.0).occ() == 6);
}

TEST_CASE("min_with_ties candidate list always contains the argmin pair") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 3 + testsup::uniform_int(rng, 12);
        DistanceMatrix mat(n);
        double best = 1e18;
        std::pair<ClusterId, ClusterId> argmin{0, 1};
        for (ClusterId j = 1; j < n; ++j) {
            for (ClusterId i = 0; i < j; ++i) {
                const double d = testsup::uniform(rng, 0.0, 5.0);
                mat.set(i, j, d);
                if (d < best) {
                    best = d;
                    argmin = {i, j};
                }
            }
        }
        const double eps = rep % 2 ? 0.0 : 1e-6;
        const TieSet ties = min_with_ties(mat, eps);
        CHECK(ties.min_value == best);
        CHECK(std::find(ties.candidates.begin(), ties.candidates.end(), argmin) !=
              ties.candidates.end());
        const double tol = eps * std::max(1.0, best);
        for (const auto& [a, b] : ties.candidates)
            CHECK(mat.at(a, b) - best <= tol);
    }
}

TEST_CASE("retirement keeps retired pairs out of the scan") {
    DistanceMatrix mat(3);
    mat.set(0, 1, 0.5);
    mat.set(0, 2, 2.0);
    mat.set(1, 2, 3.0);
    const ClusterId fresh = mat.add_cluster();
    CHECK(fresh == 3);
    mat.set(fresh, 2, 2.0);
    mat.retire(0);
    mat.retire(1);
    CHECK(mat.active() == std::vector<ClusterId>{2, 3});
    const TieSet ties = min_with_ties(mat, 0.0);
    CHECK(ties.min_value == 2.0);
    CHECK(ties.candidates[0] == std::pair<ClusterId, ClusterId>{2, 3});
    CHECK_THROWS_AS(mat.retire(0), ValidationError);
}

TEST_CASE("min_with_ties rejects bad inputs") {
    DistanceMatrix mat(2);
    mat.set(0, 1, 1.0);
    CHECK_THROWS_AS(min_with_ties(mat, -1.0), ValidationError);
    mat.retire(0);
    CHECK_THROWS_AS(min_with_ties(mat, 0.0), ValidationError);
}
