#include "puritydyn/kernel_census.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "puritydyn/linalg_exact.hpp"

namespace puritydyn::markov {

namespace {

// Row echelon over Z with content stripping; reduces in place, returns rank.
// Only row operations, so the row space (= spanned image) is preserved.
int integer_row_echelon(IntMatrix& M) {
    const int rows = M.rows, cols = M.cols;
    auto strip = [&](int i, int from) {
        BigInt g = 0;
        for (int j = from; j < cols; ++j) {
            if (M(i, j) != 0) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), M(i, j).get_mpz_t());
                if (g == 1) return;
            }
        }
        if (g <= 1) return;
        for (int j = from; j < cols; ++j)
            if (M(i, j) != 0) mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), g.get_mpz_t());
    };
    for (int i = 0; i < rows; ++i) strip(i, 0);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (M(i, c) == 0) continue;
            if (piv < 0 || mpz_cmpabs(M(i, c).get_mpz_t(), M(piv, c).get_mpz_t()) < 0) piv = i;
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(M(r, j), M(piv, j));
        const BigInt pv = M(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (M(i, c) == 0) continue;
            const BigInt f = M(i, c);
            M(i, c) = 0;
            for (int j = c + 1; j < cols; ++j) M(i, j) = M(i, j) * pv - f * M(r, j);
            strip(i, c + 1);
        }
        ++r;
    }
    return r;
}

// Scaled integer Kuo gate: (d^2+1) * M_{j,k}, entries {0, d^2+1, d}.
struct ScaledGate {
    BigInt one;  // d^2 + 1
    BigInt a;    // d
};

// One circuit step applied to an integer vector on the full 2^n space.
// Each gate multiplies the global scale by d^2+1.
void apply_step_int(std::vector<BigInt>& x, int n, int d, Protocol protocol) {
    const ScaledGate g{BigInt(d) * d + 1, BigInt(d)};
    for (const auto& [j, k] : gate_sequence(n, protocol)) {
        (void)k;
        const std::uint64_t bj = std::uint64_t(1) << (j - 1);
        const std::uint64_t bk = std::uint64_t(1) << j;
        const std::uint64_t size = std::uint64_t(1) << n;
        for (std::uint64_t s = 0; s < size; ++s) {
            if (s & (bj | bk)) continue;
            BigInt v0 = std::move(x[s]);
            BigInt v3 = std::move(x[s | bj | bk]);
            const BigInt mid = g.a * (v0 + v3);
            x[s] = g.one * v0;
            x[s | bj] = mid;
            x[s | bk] = mid;
            x[s | bj | bk] = g.one * std::move(v3);
        }
    }
}

}  // namespace

KernelCensus even_sector_kernel_census(int n, int d, Protocol protocol) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("kernel census: n must be even and >= 4");
    if (n > kMaxCensusSites)
        throw capacity_error("kernel census: n = " + std::to_string(n) + " exceeds the exact-arithmetic cap " +
                             std::to_string(kMaxCensusSites));
    if (d < 2) throw std::invalid_argument("kernel census: d must be >= 2");

    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> reps;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (s < (s ^ full)) reps.push_back(s);
    }
    const int N = static_cast<int>(reps.size());  // 2^(n-1)

    // Columns of M_even: image of e_s + e_flip(s), read off at representatives.
    // The flip symmetry of M keeps images in the symmetric subspace.
    IntMatrix M(N, N);
    {
        std::vector<BigInt> x(std::uint64_t(1) << n);
        for (int c = 0; c < N; ++c) {
            for (auto& v : x) v = 0;
            x[reps[static_cast<std::size_t>(c)]] = 1;
            x[reps[static_cast<std::size_t>(c)] ^ full] = 1;
            apply_step_int(x, n, d, protocol);
            for (int r = 0; r < N; ++r) M(r, c) = x[reps[static_cast<std::size_t>(r)]];
        }
    }

    KernelCensus out;
    out.ranks.push_back(N);

    // Ranks of powers via the shrinking image: rows of W span im(M^p).
    const int maxp = n / 2 + 1;
    IntMatrix W(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) W(i, j) = M(j, i);
    for (int p = 1; p <= maxp; ++p) {
        const int r = integer_row_echelon(W);
        out.ranks.push_back(r);
        if (p == maxp) break;
        IntMatrix next(r, N);
        for (int i = 0; i < r; ++i) {
            for (int row = 0; row < N; ++row) {
                BigInt s = 0;
                for (int jj = 0; jj < N; ++jj) {
                    if (M(row, jj) != 0 && W(i, jj) != 0) s += M(row, jj) * W(i, jj);
                }
                next(i, row) = std::move(s);
            }
        }
        W = std::move(next);
    }

    // Weyr characteristic: w_p = rank(M^(p-1)) - rank(M^p) counts blocks of size >= p.
    std::vector<long> w(static_cast<std::size_t>(maxp) + 1, 0);
    for (int p = 1; p <= maxp; ++p)
        w[static_cast<std::size_t>(p)] = out.ranks[static_cast<std::size_t>(p - 1)] - out.ranks[static_cast<std::size_t>(p)];
    if (w[static_cast<std::size_t>(maxp)] != 0)
        throw std::runtime_error("kernel census: ranks did not stabilize by p = n/2 + 1");
    for (int size = 1; size < maxp; ++size) {
        const long count = w[static_cast<std::size_t>(size)] - w[static_cast<std::size_t>(size) + 1];
        if (count < 0) throw std::runtime_error("kernel census: non-monotone Weyr characteristic");
        if (count > 0) out.blocks[size] = static_cast<int>(count);
    }
    out.nonzero_count = out.ranks.back();
    out.algebraic = N - out.nonzero_count;
    out.geometric = N - out.ranks[1];
    return out;
}

}  // namespace puritydyn::markov
