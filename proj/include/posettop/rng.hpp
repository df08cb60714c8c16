#pragma once

#include <cstdint>
#include <random>

namespace posettop {

// All randomized behavior in the library is pinned to std::mt19937_64 raw
// output with the explicit mappings below. std distributions are avoided:
// their output is not reproducible across standard library implementations.

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
inline double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection on the raw 64-bit stream.
inline std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = gen();
    while (v >= limit) v = gen();
    return v % n;
}

/// splitmix64 finalizer, used to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace posettop
