#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace puritydyn {

// splitmix64, used to mix (seed, counter...) tuples into independent
// substreams so parallel work is reproducible regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = splitmix64(seed);
    for (auto p : parts) h = splitmix64(h ^ (p + 0x9e3779b97f4a7c15ULL));
    return h;
}

inline std::mt19937_64 substream(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
    return std::mt19937_64(mix_seed(seed, parts));
}

}  // namespace puritydyn
