#include "puritydyn/transfer.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "puritydyn/coupling.hpp"

namespace puritydyn::markov {

namespace {

template <typename Scalar>
Scalar from_rational(const Rational& r);

template <>
double from_rational<double>(const Rational& r) { return to_double(r); }

template <>
Rational from_rational<Rational>(const Rational& r) { return r; }

template <typename Scalar>
std::array<Scalar, 16> gate_as(const GateMatrix4& g) {
    std::array<Scalar, 16> out;
    for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(i)] = from_rational<Scalar>(g.m[static_cast<std::size_t>(i)]);
    return out;
}

// Gate on sites (j, j+1): local index = bit_{j-1} + 2*bit_j, matching the
// printed {00, 10, 01, 11} basis order.
template <typename Scalar>
void apply_gate(PurityVectorFull<Scalar>& x, int n, int j, const std::array<Scalar, 16>& g) {
    const std::uint64_t bj = std::uint64_t(1) << (j - 1);
    const std::uint64_t bk = std::uint64_t(1) << j;
    const std::uint64_t size = std::uint64_t(1) << n;
    for (std::uint64_t s = 0; s < size; ++s) {
        if (s & (bj | bk)) continue;
        const std::uint64_t i00 = s, i10 = s | bj, i01 = s | bk, i11 = s | bj | bk;
        const Scalar v0 = x[i00], v1 = x[i10], v2 = x[i01], v3 = x[i11];
        x[i00] = g[0] * v0 + g[1] * v1 + g[2] * v2 + g[3] * v3;
        x[i10] = g[4] * v0 + g[5] * v1 + g[6] * v2 + g[7] * v3;
        x[i01] = g[8] * v0 + g[9] * v1 + g[10] * v2 + g[11] * v3;
        x[i11] = g[12] * v0 + g[13] * v1 + g[14] * v2 + g[15] * v3;
    }
}

}  // namespace

void check_full_capacity(int n, bool rational_mode) {
    const int cap = rational_mode ? kMaxFullRationalSites : kMaxFullFloatSites;
    if (n > cap)
        throw capacity_error("propagate_full: n = " + std::to_string(n) + " exceeds the 2^n capacity (max " +
                             std::to_string(cap) + (rational_mode ? " in rational mode)" : " in float mode)"));
}

template <typename Scalar>
void apply_transfer_step(PurityVectorFull<Scalar>& x, int n, Protocol protocol, const GateMatrix4& gate) {
    const auto g = gate_as<Scalar>(gate);
    for (const auto& [j, k] : gate_sequence(n, protocol)) {
        (void)k;
        apply_gate(x, n, j, g);
    }
}

template <typename Scalar>
PurityVectorFull<Scalar> propagate_full(int n, int d, int t, Protocol protocol, GateRep rep) {
    if (n < 2) throw std::invalid_argument("propagate_full: n must be >= 2");
    check_full_capacity(n, std::is_same_v<Scalar, Rational>);
    const GateMatrix4 gate = gate_matrix(rep, d);
    PurityVectorFull<Scalar> x(std::uint64_t(1) << n, from_rational<Scalar>(Rational(1)));
    for (int step = 0; step < t; ++step) apply_transfer_step(x, n, protocol, gate);
    return x;
}

template <typename Scalar>
Scalar extract_purity(const PurityVectorFull<Scalar>& x, const Bipartition& cut) {
    if (x.size() != (std::uint64_t(1) << cut.n)) throw std::invalid_argument("extract_purity: size mismatch");
    return x[cut.mask];
}

template <typename Scalar>
Scalar extract_from_coefficients(const PurityVectorFull<Scalar>& x, const Bipartition& cut) {
    if (x.size() != (std::uint64_t(1) << cut.n)) throw std::invalid_argument("extract_from_coefficients: size mismatch");
    Scalar sum = from_rational<Scalar>(Rational(0));
    std::uint64_t sub = cut.mask;
    while (true) {  // enumerate submasks of A; B sites carry bit 0
        sum += x[sub];
        if (sub == 0) break;
        sub = (sub - 1) & cut.mask;
    }
    const Rational norm = rational_pow(Rational(2), cut.weight());
    return sum / from_rational<Scalar>(norm);
}

template <typename Scalar>
PurityVectorFull<Scalar> steady_state_vector(int n, int d, GateRep rep) {
    check_full_capacity(n, std::is_same_v<Scalar, Rational>);
    const std::uint64_t size = std::uint64_t(1) << n;
    PurityVectorFull<Scalar> x(size);
    if (rep == GateRep::kKuoPurity) {
        std::vector<Scalar> by_weight(static_cast<std::size_t>(n) + 1);
        for (int w = 0; w <= n; ++w) by_weight[static_cast<std::size_t>(w)] = from_rational<Scalar>(lubkin_purity(d, n, w));
        for (std::uint64_t s = 0; s < size; ++s) x[s] = by_weight[static_cast<std::size_t>(std::popcount(s))];
        return x;
    }
    if (rep == GateRep::kNonSymmetric_d2) {
        if (d != 2) throw std::invalid_argument("steady_state_vector: non-symmetric representation requires d=2");
        // x_0 = 1 and x_s = 3^w(s) (2^n-1)/(4^n-1) for s != 0
        Rational c(bigint_pow(BigInt(2), static_cast<unsigned long>(n)) - 1,
                   bigint_pow(BigInt(4), static_cast<unsigned long>(n)) - 1);
        c.canonicalize();
        std::vector<Scalar> by_weight(static_cast<std::size_t>(n) + 1);
        for (int w = 0; w <= n; ++w)
            by_weight[static_cast<std::size_t>(w)] = from_rational<Scalar>(c * rational_pow(Rational(3), w));
        x[0] = from_rational<Scalar>(Rational(1));
        for (std::uint64_t s = 1; s < size; ++s) x[s] = by_weight[static_cast<std::size_t>(std::popcount(s))];
        return x;
    }
    throw std::invalid_argument("steady_state_vector: unsupported representation");
}

#define PURITYDYN_INSTANTIATE(S)                                                                            \
    template void apply_transfer_step<S>(PurityVectorFull<S>&, int, Protocol, const GateMatrix4&);          \
    template PurityVectorFull<S> propagate_full<S>(int, int, int, Protocol, GateRep);                       \
    template S extract_purity<S>(const PurityVectorFull<S>&, const Bipartition&);                           \
    template S extract_from_coefficients<S>(const PurityVectorFull<S>&, const Bipartition&);                \
    template PurityVectorFull<S> steady_state_vector<S>(int, int, GateRep);

PURITYDYN_INSTANTIATE(double)
PURITYDYN_INSTANTIATE(Rational)

#undef PURITYDYN_INSTANTIATE

}  // namespace puritydyn::markov
