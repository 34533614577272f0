#include "puritydyn/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "puritydyn/coupling.hpp"
#include "puritydyn/reduced.hpp"

namespace puritydyn::spectra {

RateSeries effective_rate(const std::vector<double>& series, double steady_value, bool subtract) {
    if (series.size() < 2) throw std::invalid_argument("effective_rate: need at least two samples");
    RateSeries out;
    out.subtracted = subtract;
    const double c = subtract ? steady_value : 0.0;
    for (std::size_t t = 0; t + 1 < series.size(); ++t) {
        const double den = series[t] - c;
        if (std::abs(den) < 1e-300) break;  // numeric floor, series ends here
        out.times.push_back(static_cast<double>(t) + 0.5);
        out.values.push_back((series[t + 1] - c) / den);
    }
    return out;
}

std::optional<double> transition_time(const RateSeries& rates, double lambda_ph, double lambda_2) {
    if (rates.values.empty()) return std::nullopt;
    const double mid = 0.5 * (lambda_ph + lambda_2);
    // a series that never sits above the midpoint has no phantom plateau
    if (rates.values.front() < mid) return std::nullopt;
    for (std::size_t i = 1; i < rates.values.size(); ++i) {
        const double prev = rates.values[i - 1];
        const double cur = rates.values[i];
        if (cur < mid) {
            const double f = (prev - mid) / (prev - cur);
            return rates.times[i - 1] + f * (rates.times[i] - rates.times[i - 1]);
        }
    }
    return std::nullopt;
}

RateSeries effective_rate_long(int n, int d, int cut, int t_max, Protocol protocol) {
    if (t_max < 1) throw std::invalid_argument("effective_rate_long: t_max must be >= 1");
    const double a = alpha_double(d);
    RateSeries out;
    out.n = n;
    out.d = d;
    out.cut = cut;
    out.subtracted = true;

    int m = 0, idx = 0;
    if (protocol == Protocol::kStaircase) {
        if (n < 4) throw std::invalid_argument("effective_rate_long: n must be >= 4");
        if (cut < 2 || cut > n - 1) throw std::invalid_argument("effective_rate_long: cut outside 2..n-1");
        m = n - 2;
        idx = cut - 2;
    } else {
        if (n < 6 || n % 2 != 0 || cut % 2 != 0)
            throw std::invalid_argument("effective_rate_long: brick-wall tracks even cuts of an even chain");
        m = n / 2 - 1;
        idx = cut / 2 - 1;
        if (idx < 0 || idx >= m) throw std::invalid_argument("effective_rate_long: cut outside 2..n-2");
    }

    // deviation from the fixed point evolves homogeneously, J(t+1) = T J(t)
    std::vector<double> J(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int k = protocol == Protocol::kStaircase ? i + 2 : 2 * (i + 1);
        J[static_cast<std::size_t>(i)] = 1.0 - to_double(lubkin_purity(d, n, k));
    }
    std::vector<double> K(static_cast<std::size_t>(m));
    const double a2 = a * a;
    for (int t = 0; t < t_max; ++t) {
        if (protocol == Protocol::kStaircase) {
            double prefix = 0.0;
            for (int i = 0; i < m; ++i) {
                prefix = J[static_cast<std::size_t>(i)] + a * prefix;
                double v = a2 * prefix;
                if (i + 1 < m) v += a * J[static_cast<std::size_t>(i + 1)];
                K[static_cast<std::size_t>(i)] = v;
            }
        } else {
            for (int i = 0; i < m; ++i) {
                double v = 2 * a2 * J[static_cast<std::size_t>(i)];
                if (i > 0) v += a2 * J[static_cast<std::size_t>(i - 1)];
                if (i + 1 < m) v += a2 * J[static_cast<std::size_t>(i + 1)];
                K[static_cast<std::size_t>(i)] = v;
            }
        }
        if (J[static_cast<std::size_t>(idx)] == 0.0) break;
        out.times.push_back(static_cast<double>(t) + 0.5);
        out.values.push_back(K[static_cast<std::size_t>(idx)] / J[static_cast<std::size_t>(idx)]);
        double norm = 0.0;
        for (double v : K) norm = std::max(norm, std::abs(v));
        if (norm == 0.0) break;
        for (int i = 0; i < m; ++i) J[static_cast<std::size_t>(i)] = K[static_cast<std::size_t>(i)] / norm;
    }
    return out;
}

}  // namespace puritydyn::spectra
