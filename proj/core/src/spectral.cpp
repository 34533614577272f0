#include "puritydyn/spectral.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "puritydyn/coupling.hpp"

namespace puritydyn::toeplitz {

namespace {

using B50 = boost::multiprecision::cpp_bin_float_50;

B50 to_b50(const Rational& r) {
    return B50(r.get_num().get_str()) / B50(r.get_den().get_str());
}

void require_even(int n, const char* who) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument(std::string(who) + ": closed spectrum needs even n >= 4");
}

}  // namespace

SpectralData closed_spectrum(int n, int d) {
    require_even(n, "closed_spectrum");
    SpectralData s;
    s.n = n;
    s.d = d;
    const double a = alpha_double(d);
    for (int j = 1; j <= n / 2 - 1; ++j) {
        const double phi = j * M_PI / n;
        s.angles.push_back(phi);
        const double c = std::cos(phi);
        s.eigenvalues.push_back(4 * a * a * c * c);
    }
    s.zero_algebraic = n / 2 - 1;
    s.zero_geometric = 1;
    return s;
}

std::pair<std::vector<double>, std::vector<double>> closed_eigenvectors(int n, int d, int j) {
    require_even(n, "closed_eigenvectors");
    if (j < 1 || j > n / 2 - 1) throw std::invalid_argument("closed_eigenvectors: j outside 1..n/2-1");
    const double a = alpha_double(d);
    const double phi = j * M_PI / n;
    const double c = 2 * a * std::cos(phi);
    const double s = std::sin(phi);
    std::vector<double> R(static_cast<std::size_t>(n - 2)), L(static_cast<std::size_t>(n - 2));
    for (int k = 1; k <= n - 2; ++k) {
        R[static_cast<std::size_t>(k - 1)] = std::pow(c, k - 2) * std::sin((k + 1) * phi) / s;
        L[static_cast<std::size_t>(k - 1)] = std::pow(c, n - 3 - k) * std::sin((n - k) * phi) / s;
    }
    return {R, L};
}

SpectralData full_spectral_data(int n, int d) {
    SpectralData s = closed_spectrum(n, d);
    for (int j = 1; j <= n / 2 - 1; ++j) {
        auto [R, L] = closed_eigenvectors(n, d, j);
        double dot = 0.0;
        for (int k = 0; k < n - 2; ++k) dot += R[static_cast<std::size_t>(k)] * L[static_cast<std::size_t>(k)];
        s.pair_norm.push_back(dot);
        s.right.push_back(std::move(R));
        s.left.push_back(std::move(L));
    }
    s.steady_right.assign(static_cast<std::size_t>(n), 0.0);
    s.steady_left.assign(static_cast<std::size_t>(n), 0.0);
    s.steady_right.front() = s.steady_right.back() = 1.0;
    for (int k = 2; k <= n - 1; ++k) s.steady_right[static_cast<std::size_t>(k - 1)] = to_double(lubkin_purity(d, n, k));
    s.steady_left.front() = s.steady_left.back() = 0.5;
    return s;
}

double lambda2(int n, int d) {
    require_even(n, "lambda2");
    const double a = alpha_double(d);
    const double c = std::cos(M_PI / n);
    return 4 * a * a * c * c;
}

Rational lambda2_tdl(int d) {
    if (d < 2) throw std::invalid_argument("lambda2_tdl: d must be >= 2");
    const Rational a = alpha(d);
    return 4 * a * a;
}

JordanChains make_jordan_chains(int n, int d) {
    require_even(n, "make_jordan_chains");
    if (n > 64) throw capacity_error("make_jordan_chains: exact chains capped at n = 64");
    const int m = n / 2 - 1;
    const int nn = n - 2;
    const RationalMatrix T = toeplitz_matrix<Rational>(n, d);
    const RationalMatrix Tt = rational_transpose(T);

    RationalMatrix Tm1 = T;  // T^(m-1)
    for (int p = 0; p < m - 2; ++p) Tm1 = rational_matmul(Tm1, T);
    const RationalMatrix Tm = (m >= 2) ? rational_matmul(Tm1, T) : T;

    JordanChains chains;
    chains.n = n;
    chains.d = d;
    chains.m = m;

    auto pick_generator = [&](const RationalMatrix& Pm, const RationalMatrix& Pm1) {
        for (const auto& v : rational_nullspace(Pm)) {
            if (m == 1 || !is_zero(rational_matvec(Pm1, v))) return v;
        }
        throw std::runtime_error("jordan chains: no generator found (kernel not a single block?)");
    };

    // right chain: p_m generates, p_{k-1} = T p_k
    {
        std::vector<RationalVector> p(static_cast<std::size_t>(m));
        p[static_cast<std::size_t>(m - 1)] = pick_generator(Tm, Tm1);
        for (int k = m - 1; k >= 1; --k)
            p[static_cast<std::size_t>(k - 1)] = rational_matvec(T, p[static_cast<std::size_t>(k)]);
        if (!is_zero(rational_matvec(T, p[0]))) throw std::runtime_error("jordan chains: right chain does not terminate");
        chains.right = std::move(p);
    }
    // left chain: q_1 generates, q_{k+1} = T^t q_k
    {
        RationalMatrix Tm1t = rational_transpose(Tm1);
        RationalMatrix Tmt = rational_transpose(Tm);
        std::vector<RationalVector> q(static_cast<std::size_t>(m));
        q[0] = pick_generator(Tmt, Tm1t);
        for (int k = 1; k < m; ++k) q[static_cast<std::size_t>(k)] = rational_matvec(Tt, q[static_cast<std::size_t>(k - 1)]);
        if (!is_zero(rational_matvec(Tt, q[static_cast<std::size_t>(m - 1)])))
            throw std::runtime_error("jordan chains: left chain does not terminate");
        chains.left = std::move(q);
    }

    // biorthonormalize: the Gram <q_i, p_j> = g_{j-i+1} is triangular Toeplitz,
    // so convolving the right chain with the series inverse of g fixes it.
    std::vector<Rational> g(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) g[static_cast<std::size_t>(r)] = dot(chains.left[0], chains.right[static_cast<std::size_t>(r)]);
    if (g[0] == 0) throw std::runtime_error("jordan chains: singular chain pairing");
    std::vector<Rational> h(static_cast<std::size_t>(m));
    h[0] = 1 / g[0];
    for (int r = 1; r < m; ++r) {
        Rational acc = 0;
        for (int s = 1; s <= r; ++s) acc += g[static_cast<std::size_t>(s)] * h[static_cast<std::size_t>(r - s)];
        h[static_cast<std::size_t>(r)] = -acc / g[0];
    }
    std::vector<RationalVector> fixed(static_cast<std::size_t>(m), RationalVector(static_cast<std::size_t>(nn), Rational(0)));
    for (int k = 0; k < m; ++k) {
        for (int s = 0; s <= k; ++s) {
            const Rational& coef = h[static_cast<std::size_t>(k - s)];
            if (coef == 0) continue;
            for (int i = 0; i < nn; ++i)
                fixed[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] +=
                    coef * chains.right[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
        }
    }
    chains.right = std::move(fixed);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Rational ip = dot(chains.left[static_cast<std::size_t>(i)], chains.right[static_cast<std::size_t>(j)]);
            if (ip != ((i == j) ? 1 : 0)) throw std::runtime_error("jordan chains: biorthonormalization failed");
        }
    return chains;
}

namespace {

const JordanChains& cached_chains(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, JordanChains> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), make_jordan_chains(n, d)).first;
    return it->second;
}

}  // namespace

ReducedPurity<double> spectral_propagate(int n, int d, int t, bool include_kernel) {
    require_even(n, "spectral_propagate");
    if (t < 0) throw std::invalid_argument("spectral_propagate: t must be >= 0");
    const int m = n / 2 - 1;
    const int nn = n - 2;

    ReducedPurity<double> out;
    out.n = n;
    out.t = t;
    out.protocol = Protocol::kStaircase;
    out.values.assign(static_cast<std::size_t>(nn), 1.0);
    if (t == 0) return out;

    const B50 a = to_b50(alpha(d));
    const B50 pi = boost::multiprecision::acos(B50(-1));
    std::vector<B50> acc(static_cast<std::size_t>(nn));

    // steady projector: <L | 1> = 1, components are the random-state purities
    for (int k = 2; k <= n - 1; ++k) acc[static_cast<std::size_t>(k - 2)] = to_b50(lubkin_purity(d, n, k));

    // a1 in T indexing: alpha^(k+1), k = 1..n-2
    std::vector<B50> a1(static_cast<std::size_t>(nn));
    {
        B50 p = a * a;
        for (int i = 0; i < nn; ++i) {
            a1[static_cast<std::size_t>(i)] = p;
            p *= a;
        }
    }

    for (int j = 1; j <= m; ++j) {
        const B50 phi = pi * j / n;
        const B50 sphi = boost::multiprecision::sin(phi);
        const B50 c = 2 * a * boost::multiprecision::cos(phi);
        const B50 lam = c * c;
        std::vector<B50> R(static_cast<std::size_t>(nn)), L(static_cast<std::size_t>(nn));
        for (int k = 1; k <= nn; ++k) {
            R[static_cast<std::size_t>(k - 1)] = boost::multiprecision::pow(c, k - 2) *
                                                 boost::multiprecision::sin((k + 1) * phi) / sphi;
            L[static_cast<std::size_t>(k - 1)] = boost::multiprecision::pow(c, n - 3 - k) *
                                                 boost::multiprecision::sin((n - k) * phi) / sphi;
        }
        B50 cj = 0, la1 = 0, lsum = 0;
        for (int i = 0; i < nn; ++i) {
            cj += L[static_cast<std::size_t>(i)] * R[static_cast<std::size_t>(i)];
            la1 += L[static_cast<std::size_t>(i)] * a1[static_cast<std::size_t>(i)];
            lsum += L[static_cast<std::size_t>(i)];
        }
        const B50 border = (la1 + a * L[static_cast<std::size_t>(nn - 1)]) / (lam - 1);
        const B50 coef = (border + lsum) / cj * boost::multiprecision::pow(lam, t);
        for (int i = 0; i < nn; ++i) acc[static_cast<std::size_t>(i)] += coef * R[static_cast<std::size_t>(i)];
    }

    if (include_kernel && t < m) {
        const JordanChains& ch = cached_chains(n, d);
        const Rational ar = alpha(d);
        std::vector<Rational> a1r(static_cast<std::size_t>(nn));
        {
            Rational p = ar * ar;
            for (int i = 0; i < nn; ++i) {
                a1r[static_cast<std::size_t>(i)] = p;
                p *= ar;
            }
        }
        // lifted left borders: q_k[1] = -sum_{i>=k} <q_i, a1>, q_k[n] likewise with a2
        std::vector<Rational> d1(static_cast<std::size_t>(m)), d2(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            d1[static_cast<std::size_t>(i)] = dot(ch.left[static_cast<std::size_t>(i)], a1r);
            d2[static_cast<std::size_t>(i)] = ch.left[static_cast<std::size_t>(i)][static_cast<std::size_t>(nn - 1)] * ar;
        }
        RationalVector kernel(static_cast<std::size_t>(nn), Rational(0));
        for (int k = 1; k <= m - t; ++k) {
            const int lk = k + t;
            Rational coef = 0;
            for (int i = lk - 1; i < m; ++i) coef -= d1[static_cast<std::size_t>(i)] + d2[static_cast<std::size_t>(i)];
            for (const auto& x : ch.left[static_cast<std::size_t>(lk - 1)]) coef += x;
            if (coef == 0) continue;
            for (int i = 0; i < nn; ++i)
                kernel[static_cast<std::size_t>(i)] += ch.right[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)] * coef;
        }
        for (int i = 0; i < nn; ++i) acc[static_cast<std::size_t>(i)] += to_b50(kernel[static_cast<std::size_t>(i)]);
    }

    for (int i = 0; i < nn; ++i) out.values[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)].convert_to<double>();
    return out;
}

}  // namespace puritydyn::toeplitz
