#pragma once

#include "puritydyn/rational.hpp"

namespace puritydyn {

// Coupling constant of the 2-site purity transfer matrix, alpha = d/(d^2+1).
Rational alpha(int d);

inline double alpha_double(int d) { return to_double(alpha(d)); }

// Purity of a Haar-random pure state for a size-w subsystem of n qudits,
// (d^w + d^(n-w)) / (1 + d^n). This is the fixed point the dynamics relaxes to.
Rational lubkin_purity(int d, int n, int w);

}  // namespace puritydyn
