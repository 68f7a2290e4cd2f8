#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace ggt::test {

/// Seed for randomized tests; GGT_SEED overrides the fixed default.
inline std::uint64_t seed() {
    if (const char* env = std::getenv("GGT_SEED")) return std::stoull(env);
    return 20240611;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

template <typename Rng>
int uniform(Rng& r, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(r);
}

}  // namespace ggt::test
