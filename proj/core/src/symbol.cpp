#include "puritydyn/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "puritydyn/coupling.hpp"

namespace puritydyn::spectra {

Rational lambda_phantom(int d) {
    const Rational a = alpha(d);
    const Rational lph = a / (1 - a);
    // same thing written through d, kept as a consistency guard
    if (lph != make_rational(d, static_cast<long>(d) * (d - 1) + 1))
        throw std::logic_error("lambda_phantom: algebraic identity violated");
    return lph;
}

std::complex<double> symbol_eval(std::complex<double> z, int d) {
    const double a = alpha_double(d);
    if (std::abs(z) == 0.0) throw std::domain_error("symbol_eval: pole at z = 0");
    const std::complex<double> den = 1.0 - a * z;
    if (std::abs(den) < 1e-300) throw std::domain_error("symbol_eval: pole at z = 1/alpha");
    return a / z + a * a / den;
}

std::complex<double> brickwall_symbol_eval(std::complex<double> z, int d) {
    const double a = alpha_double(d);
    if (std::abs(z) == 0.0) throw std::domain_error("brickwall_symbol_eval: pole at z = 0");
    return a * a * (2.0 + z + 1.0 / z);
}

SymbolCurve sample_symbol(int d, int grid_size) {
    if (grid_size < 8) throw std::invalid_argument("sample_symbol: grid too small");
    SymbolCurve c;
    c.d = d;
    c.theta.reserve(static_cast<std::size_t>(grid_size));
    c.values.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double th = 2.0 * M_PI * i / grid_size;
        c.theta.push_back(th);
        c.values.push_back(symbol_eval(std::polar(1.0, th), d));
    }
    return c;
}

std::vector<std::complex<double>> symbol_coefficients(const SymbolCurve& curve, int k_min, int k_max) {
    if (k_min > k_max) throw std::invalid_argument("symbol_coefficients: empty range");
    const std::size_t N = curve.values.size();
    std::vector<std::complex<double>> out;
    for (int k = k_min; k <= k_max; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            acc += curve.values[i] * std::polar(1.0, -k * curve.theta[i]);
        }
        out.push_back(acc / static_cast<double>(N));
    }
    return out;
}

Region symbol_region_membership(std::complex<double> z0, int d, int grid_size, double boundary_tol) {
    if (grid_size < 64) throw std::invalid_argument("symbol_region_membership: grid too small");
    // distance to the curve decides the boundary verdict
    double min_dist = 1e300;
    for (int i = 0; i < grid_size; ++i) {
        const double th = 2.0 * M_PI * i / grid_size;
        min_dist = std::min(min_dist, std::abs(symbol_eval(std::polar(1.0, th), d) - z0));
    }
    if (min_dist <= boundary_tol) return Region::kBoundary;

    // winding number of a(e^{i theta}) - z0 by summed argument increments,
    // refining adaptively where the curve passes close to z0
    const auto winding = [&](int steps) {
        double total = 0.0;
        std::complex<double> prev = symbol_eval(std::polar(1.0, 0.0), d) - z0;
        for (int i = 1; i <= steps; ++i) {
            const double th = 2.0 * M_PI * i / steps;
            const std::complex<double> cur = symbol_eval(std::polar(1.0, th), d) - z0;
            total += std::arg(cur / prev);
            prev = cur;
        }
        return total / (2.0 * M_PI);
    };
    int steps = grid_size;
    double w = winding(steps);
    while (std::abs(w - std::round(w)) > 1e-6 && steps < (1 << 22)) {
        steps *= 4;
        w = winding(steps);
    }
    const long wi = std::lround(w);
    // the curve passes close to z0 relative to the grid; refuse to guess
    if (std::abs(w - static_cast<double>(wi)) > 1e-6) return Region::kBoundary;
    return wi != 0 ? Region::kInside : Region::kOutside;
}

}  // namespace puritydyn::spectra
