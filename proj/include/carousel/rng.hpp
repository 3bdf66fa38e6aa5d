#pragma once

#include <cstdint>
#include <random>

namespace carousel {

// splitmix64, used to decorrelate per-trial seeds derived as seed ^ trial.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(seed ^ trial));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace carousel
