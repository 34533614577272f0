#pragma once

#include <optional>
#include <vector>

#include "puritydyn/circuit.hpp"

namespace puritydyn::spectra {

// Local relaxation rate lambda_eff(t + 1/2) = (I(t+1) - c) / (I(t) - c),
// the discrete form of exp(I'/I); c is the steady value when subtracted.
struct RateSeries {
    int n = 0;
    int d = 0;
    int cut = 0;
    bool subtracted = false;
    std::vector<double> times;   // half-integer
    std::vector<double> values;  // truncated where the denominator underflows
};

RateSeries effective_rate(const std::vector<double>& series, double steady_value, bool subtract);

// First downward crossing of the midpoint (lambda_ph + lambda_2)/2, linearly
// interpolated; empty when the series never sits on the phantom plateau.
std::optional<double> transition_time(const RateSeries& rates, double lambda_ph, double lambda_2);

// lambda_eff over long horizons for the exact reduced dynamics: propagates
// the deviation J(t) = I(t) - I(inf) (a pure iteration by T) with per-step
// rescaling, so the two-plateau structure stays resolvable far past the
// range where I(t) - I(inf) underflows in double.
RateSeries effective_rate_long(int n, int d, int cut, int t_max, Protocol protocol = Protocol::kStaircase);

}  // namespace puritydyn::spectra
