#ifndef SHACHOM_SRC_RNG_HPP
#define SHACHOM_SRC_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

// std::shuffle and the distribution classes are implementation-defined, so
// splits built on them would not reproduce across standard libraries. Only
// the mt19937_64 engine itself is pinned by the standard; everything here
// derives from its raw draws.

namespace shachom::detail {

/// Uniform integer in [0, bound) by rejection; bound >= 1.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

/// Fisher-Yates with bounded_rand; deterministic for a given engine state.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace shachom::detail

#endif
