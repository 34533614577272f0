#pragma once

#include <complex>
#include <vector>

#include "puritydyn/rational.hpp"

namespace puritydyn::spectra {

// Relaxation rate seen in the thermodynamic limit: alpha/(1-alpha), which is
// the sup-norm of the Toeplitz symbol rather than any finite-matrix eigenvalue.
Rational lambda_phantom(int d);

// Symbol of the staircase Toeplitz matrix, a(z) = alpha/z + alpha^2/(1 - alpha z).
std::complex<double> symbol_eval(std::complex<double> z, int d);

// Brick-wall symbol alpha^2 (2 + z + 1/z), real on the unit circle.
std::complex<double> brickwall_symbol_eval(std::complex<double> z, int d);

struct SymbolCurve {
    int d = 2;
    std::vector<double> theta;
    std::vector<std::complex<double>> values;  // a(e^{i theta})
};

SymbolCurve sample_symbol(int d, int grid_size);

// Fourier coefficients a_k of the sampled curve for k in [k_min, k_max],
// recovering the matrix diagonals (a_{-1} = alpha, a_{p>=0} = alpha^(p+2)).
std::vector<std::complex<double>> symbol_coefficients(const SymbolCurve& curve, int k_min, int k_max);

enum class Region { kInside, kOutside, kBoundary };

// Membership of z0 in the Toeplitz-operator spectrum (the closed region
// bounded by the symbol curve): points within tol of the curve are flagged
// as boundary, otherwise the winding number of a(e^{i theta}) - z0 decides.
Region symbol_region_membership(std::complex<double> z0, int d, int grid_size, double boundary_tol = 1e-9);

}  // namespace puritydyn::spectra
