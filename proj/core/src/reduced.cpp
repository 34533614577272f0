#include "puritydyn/reduced.hpp"

#include <cmath>
#include <stdexcept>

#include "puritydyn/coupling.hpp"

namespace puritydyn::toeplitz {

namespace {

template <typename Scalar>
Scalar from_rational(const Rational& r) {
    if constexpr (std::is_same_v<Scalar, Rational>)
        return r;
    else
        return to_double(r);
}

template <typename Scalar>
std::vector<Scalar> alpha_powers(int n, int d, int maxpow) {
    const Rational a = alpha(d);
    std::vector<Scalar> pw(static_cast<std::size_t>(maxpow) + 1);
    Rational acc = 1;
    for (int p = 0; p <= maxpow; ++p) {
        pw[static_cast<std::size_t>(p)] = from_rational<Scalar>(acc);
        acc *= a;
    }
    return pw;
}

}  // namespace

template <typename Scalar>
DenseMatrix<Scalar> toeplitz_matrix(int n, int d) {
    if (n < 4) throw std::invalid_argument("toeplitz_matrix: n must be >= 4 (no interior cuts otherwise)");
    const int m = n - 2;
    const auto pw = alpha_powers<Scalar>(n, d, n);
    DenseMatrix<Scalar> T(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int p = i - j;
            if (p == -1)
                T(i, j) = pw[1];
            else if (p >= 0)
                T(i, j) = pw[static_cast<std::size_t>(p + 2)];
        }
    }
    return T;
}

template <typename Scalar>
std::vector<Scalar> affine_vector(int n, int d) {
    if (n < 4) throw std::invalid_argument("affine_vector: n must be >= 4");
    const auto pw = alpha_powers<Scalar>(n, d, n);
    std::vector<Scalar> a(static_cast<std::size_t>(n - 2));
    for (int k = 2; k <= n - 1; ++k) a[static_cast<std::size_t>(k - 2)] = pw[static_cast<std::size_t>(k)];
    a.back() += pw[1];
    return a;
}

template <typename Scalar>
DenseMatrix<Scalar> brickwall_matrix(int n, int d) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("brickwall_matrix: n must be even and >= 6");
    const int m = n / 2 - 1;
    const Scalar a2 = from_rational<Scalar>(alpha(d) * alpha(d));
    DenseMatrix<Scalar> T(m, m);
    for (int i = 0; i < m; ++i) {
        T(i, i) = a2 + a2;
        if (i > 0) T(i, i - 1) = a2;
        if (i + 1 < m) T(i, i + 1) = a2;
    }
    return T;
}

template <typename Scalar>
ReducedPurity<Scalar> recursion_step(const ReducedPurity<Scalar>& in, int d) {
    const int n = in.n;
    if (n < 4) throw std::invalid_argument("recursion_step: n must be >= 4");
    ReducedPurity<Scalar> out = in;
    out.t = in.t + 1;
    if (in.protocol == Protocol::kStaircase) {
        const int m = n - 2;
        if (static_cast<int>(in.values.size()) != m) throw std::invalid_argument("recursion_step: size mismatch");
        const auto pw = alpha_powers<Scalar>(n, d, n);
        const Scalar a = pw[1];
        const Scalar a2 = pw[2];
        // (T I)_i = alpha I_{i+1} + alpha^2 S_i with S_i = I_i + alpha S_{i-1};
        // the boundary terms of the affine vector pin I_1 = I_n = 1.
        Scalar prefix = from_rational<Scalar>(Rational(0));
        for (int i = 0; i < m; ++i) {
            prefix = in.values[static_cast<std::size_t>(i)] + a * prefix;
            Scalar v = pw[static_cast<std::size_t>(i + 2)] + a2 * prefix;
            if (i + 1 < m) v += a * in.values[static_cast<std::size_t>(i + 1)];
            out.values[static_cast<std::size_t>(i)] = v;
            if (i == m - 1) out.values[static_cast<std::size_t>(i)] += a;
        }
    } else {
        const int m = n / 2 - 1;
        if (static_cast<int>(in.values.size()) != m) throw std::invalid_argument("recursion_step: size mismatch");
        const Scalar a2 = from_rational<Scalar>(alpha(d) * alpha(d));
        for (int i = 0; i < m; ++i) {
            Scalar v = (a2 + a2) * in.values[static_cast<std::size_t>(i)];
            if (i > 0) v += a2 * in.values[static_cast<std::size_t>(i - 1)];
            if (i + 1 < m) v += a2 * in.values[static_cast<std::size_t>(i + 1)];
            if (i == 0) v += a2;
            if (i == m - 1) v += a2;
            out.values[static_cast<std::size_t>(i)] = v;
        }
    }
    return out;
}

template <typename Scalar>
std::vector<ReducedPurity<Scalar>> propagate_reduced(int n, int d, int t_max, Protocol protocol) {
    if (n < 4) throw std::invalid_argument("propagate_reduced: n must be >= 4");
    if (protocol == Protocol::kBrickWall && n % 2 != 0)
        throw std::invalid_argument("propagate_reduced: brick-wall reduction needs even n");
    ReducedPurity<Scalar> I;
    I.n = n;
    I.t = 0;
    I.protocol = protocol;
    const int m = protocol == Protocol::kStaircase ? n - 2 : n / 2 - 1;
    I.values.assign(static_cast<std::size_t>(m), from_rational<Scalar>(Rational(1)));
    std::vector<ReducedPurity<Scalar>> out;
    out.reserve(static_cast<std::size_t>(t_max) + 1);
    out.push_back(I);
    for (int t = 0; t < t_max; ++t) {
        I = recursion_step(I, d);
        out.push_back(I);
    }
    return out;
}

Rational closed_form_small_t(int k, int n, int d, int t) {
    if (t < 1 || t > 3) throw std::invalid_argument("closed_form_small_t: printed forms exist for t in {1,2,3}");
    if (n < 2 * t) throw std::invalid_argument("closed_form_small_t: requires n >= 2t");
    if (k < 2 || k > n - 1) throw std::invalid_argument("closed_form_small_t: cut k outside 2..n-1");
    const Rational a = alpha(d);
    const Rational b = 1 - a;  // beta
    const Rational lph = a / b;
    const Rational ak = rational_pow(a, k);
    switch (t) {
        case 1:
            return lph + (1 - 2 * a) / b * ak;
        case 2:
            return lph * lph + ak * (1 - 2 * a) / b * (1 / b + a * a * k);
        default: {
            const Rational a2b = a * a * b;
            const Rational inner = (1 - a * b) + k * a2b * (1 + Rational(3, 2) * a2b) +
                                   Rational(k) * k * a2b * a2b / 2;
            return lph * lph * lph + ak * (1 - 2 * a) * inner / (b * b * b);
        }
    }
}

RationalMatrix similarity_normalize(int n, int d) {
    const Rational a = alpha(d);
    const auto T = toeplitz_matrix<Rational>(n, d);
    const int m = n - 2;
    RationalMatrix out(m, m);
    // R = diag(alpha, ..., alpha^(n-2)); (R^-1 T R)_{ij} = alpha^(j-i) T_{ij}
    std::vector<Rational> pw(static_cast<std::size_t>(m), Rational(1));
    for (int p = 1; p < m; ++p) pw[static_cast<std::size_t>(p)] = pw[static_cast<std::size_t>(p - 1)] * a;
    const Rational a2 = a * a;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Rational v = T(i, j);
            if (j >= i)
                v *= pw[static_cast<std::size_t>(j - i)];
            else
                v /= pw[static_cast<std::size_t>(i - j)];
            out(i, j) = v;
            const bool in_pattern = (j <= i + 1);
            if (in_pattern && v != a2)
                throw std::runtime_error("similarity_normalize: Hessenberg entry is not alpha^2");
            if (!in_pattern && v != 0)
                throw std::runtime_error("similarity_normalize: fill-in above the superdiagonal");
        }
    }
    return out;
}

std::vector<Rational> characteristic_polynomial(int n, int d) {
    const auto T = toeplitz_matrix<Rational>(n, d);
    const int m = n - 2;
    // Faddeev-LeVerrier: M_1 = T, c_k = -tr(T M_k)/k ... exact over Q
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
    c[static_cast<std::size_t>(m)] = 1;
    RationalMatrix Mk = T;
    for (int k = 1; k <= m; ++k) {
        Rational tr = 0;
        for (int i = 0; i < m; ++i) tr += Mk(i, i);
        const Rational ck = -tr / k;
        c[static_cast<std::size_t>(m - k)] = ck;
        if (k == m) break;
        for (int i = 0; i < m; ++i) Mk(i, i) += ck;
        Mk = rational_matmul(T, Mk);
    }
    return c;
}

CharacteristicReport characteristic_check(int n, int d) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("characteristic_check: needs even n >= 4");
    if (n > 14) throw capacity_error("characteristic_check: exact determinants capped at n = 14");
    const auto coeffs = characteristic_polynomial(n, d);
    const int m = n - 2;
    std::vector<double> cd(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) cd[i] = to_double(coeffs[i]);
    const auto eval = [&](double x) {
        double acc = 0.0;
        for (int k = m; k >= 0; --k) acc = acc * x + cd[static_cast<std::size_t>(k)];
        return acc;
    };
    const double a = alpha_double(d);
    std::vector<double> lambdas;
    for (int j = 1; j <= n / 2 - 1; ++j) {
        const double c = std::cos(j * M_PI / n);
        lambdas.push_back(4 * a * a * c * c);
    }
    CharacteristicReport rep;
    for (double l : lambdas) rep.max_root_residual = std::max(rep.max_root_residual, std::abs(eval(l)));
    rep.roots_ok = rep.max_root_residual < 1e-13;
    rep.min_midpoint_value = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + 1 < lambdas.size(); ++j) {
        const double mid = 0.5 * (lambdas[j] + lambdas[j + 1]);
        rep.min_midpoint_value = std::min(rep.min_midpoint_value, std::abs(eval(mid)));
    }
    // also separate the smallest closed-form eigenvalue from zero
    rep.min_midpoint_value = std::min(rep.min_midpoint_value, std::abs(eval(0.5 * lambdas.back())));
    rep.midpoints_ok = rep.min_midpoint_value > 1e3 * (rep.max_root_residual + 1e-300);
    int mult = 0;
    while (mult <= m && coeffs[static_cast<std::size_t>(mult)] == 0) ++mult;
    rep.zero_multiplicity = mult;
    rep.zero_multiplicity_ok = (mult == n / 2 - 1);
    return rep;
}

#define PURITYDYN_INSTANTIATE(S)                                                          \
    template DenseMatrix<S> toeplitz_matrix<S>(int, int);                                 \
    template std::vector<S> affine_vector<S>(int, int);                                   \
    template DenseMatrix<S> brickwall_matrix<S>(int, int);                                \
    template ReducedPurity<S> recursion_step<S>(const ReducedPurity<S>&, int);            \
    template std::vector<ReducedPurity<S>> propagate_reduced<S>(int, int, int, Protocol);

PURITYDYN_INSTANTIATE(double)
PURITYDYN_INSTANTIATE(Rational)

#undef PURITYDYN_INSTANTIATE

}  // namespace puritydyn::toeplitz
