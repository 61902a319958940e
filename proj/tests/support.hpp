#ifndef SHACHOM_TESTS_SUPPORT_HPP
#define SHACHOM_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "shachom/dataset.hpp"

// Test-side randomness is built from raw mt19937_64 draws so every platform
// generates the same cases; std::shuffle and the distribution classes are
// implementation-defined and would not.

namespace testsup {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline double normal(std::mt19937_64& rng, double mean, double sd) {
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 == 0.0);
    const double u2 = uniform01(rng);
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Continuous random dataset; pairwise distances are distinct with
/// probability one.
inline shachom::Dataset random_dataset(std::mt19937_64& rng, std::size_t n,
                                       std::size_t d, double lo = 0.0,
                                       double hi = 10.0) {
    std::vector<double> values;
    values.reserve(n * d);
    for (std::size_t i = 0; i < n * d; ++i)
        values.push_back(uniform(rng, lo, hi));
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c)
        names.push_back("a" + std::to_string(c));
    return shachom::Dataset(n, d, std::move(values), std::move(names));
}

/// The canonical three-point set: A(2,3), B(3,2), C(1,2).
inline shachom::Dataset three_points() {
    return shachom::Dataset(3, 2, {2, 3, 3, 2, 1, 2}, {"a0", "a1"});
}

/// Synthetic stand-in for a 178x13 three-class benchmark. Three well
/// separated Gaussian blobs (sizes 59/71/48) snapped to a 0.25 grid, with a
/// planted equidistant triple per blob so merge-distance ties occur at
/// nonzero homogeneity. Deterministic for a given seed.
inline shachom::Dataset synthetic_benchmark(std::uint64_t seed = 20240913) {
    const std::size_t sizes[3] = {59, 71, 48};
    const std::size_t d = 13;
    std::mt19937_64 rng(seed);

    std::vector<double> values;
    std::vector<std::string> labels;
    for (std::size_t cls = 0; cls < 3; ++cls) {
        const double center = 10.0 + 15.0 * static_cast<double>(cls);
        for (std::size_t i = 0; i < sizes[cls]; ++i) {
            for (std::size_t t = 0; t < d; ++t) {
                const double raw = normal(rng, center + static_cast<double>(t), 1.0);
                values.push_back(std::round(raw * 4.0) / 4.0);
            }
            labels.push_back(std::to_string(cls));
        }
    }

    // Plant x, x+0.25*e0, x+0.25*e1 inside each blob: d(x,y) = d(x,z) = 0.25
    // exactly, and the tied pairs have different column sums.
    std::size_t offset = 0;
    for (std::size_t cls = 0; cls < 3; ++cls) {
        const std::size_t x = offset + 3;
        for (std::size_t t = 0; t < d; ++t) {
            values[(x + 1) * d + t] = values[x * d + t];
            values[(x + 2) * d + t] = values[x * d + t];
        }
        values[(x + 1) * d + 0] += 0.25;
        values[(x + 2) * d + 1] += 0.25;
        offset += sizes[cls];
    }

    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c)
        names.push_back("a" + std::to_string(c));
    return shachom::Dataset(178, d, std::move(values), std::move(names),
                            std::move(labels), "class");
}

/// Fresh scratch directory under the system temp path.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("shachom_" + tag + "_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace testsup

#endif
