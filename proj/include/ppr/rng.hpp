#ifndef PPR_RNG_HPP
#define PPR_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ppr {

// std::mt19937_64 raw output is fully specified by the standard, so every
// draw below is bit-identical across platforms. Standard-library
// distributions are not, which is why we roll our own two helpers.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed derivation for hierarchical campaigns: master -> trial -> stage.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(master ^ splitmix64(a)) ^ splitmix64(b ^ 0x517cc1b727220a95ULL));
}

/// Uniform in [0, n); unbiased via rejection.
inline std::uint64_t rnd_below(Rng& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double rnd_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void rnd_shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rnd_below(rng, i)]);
}

}  // namespace ppr

#endif
