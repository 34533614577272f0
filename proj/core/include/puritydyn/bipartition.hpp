#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace puritydyn {

// Bipartition of an n-site chain encoded as an n-bit mask: site j (1-based)
// maps to bit j-1, a set bit puts the site in subsystem A. The contiguous
// cut "first k sites in A" is therefore mask 2^k - 1.
struct Bipartition {
    std::uint64_t mask = 0;
    int n = 0;

    Bipartition() = default;
    Bipartition(std::uint64_t mask_, int n_) : mask(mask_), n(n_) {
        if (n_ < 1 || n_ > 63) throw std::invalid_argument("bipartition: n out of range");
        if (mask_ >> n_) throw std::invalid_argument("bipartition: mask has bits above site n");
    }

    int weight() const { return std::popcount(mask); }

    bool contains_site(int j) const { return (mask >> (j - 1)) & 1u; }

    Bipartition complement() const {
        return Bipartition(~mask & ((std::uint64_t(1) << n) - 1), n);
    }
};

inline Bipartition contiguous_mask(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("contiguous_mask: k out of [0, n]");
    std::uint64_t m = (k == 0) ? 0 : ((std::uint64_t(1) << k) - 1);
    return Bipartition(m, n);
}

}  // namespace puritydyn
