#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace monolab {

// Unbiased uniform draw from [0, n). Rejection sampling keeps the outcome
// probabilities exact; mt19937_64 is fully specified by the standard, so
// sequences reproduce across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) return r % n;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent per-trial stream seed; trials can run in any order or in
// parallel and still reproduce.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

}  // namespace monolab
