#pragma once

#include <utility>
#include <vector>

#include "puritydyn/linalg_exact.hpp"
#include "puritydyn/rational.hpp"
#include "puritydyn/reduced.hpp"

namespace puritydyn::toeplitz {

// Closed-form spectral data of T (and its lift to the affine matrix A):
// nondegenerate eigenvalues 4 alpha^2 cos^2(j pi / n) with Chebyshev
// eigenvectors, plus a single nilpotent Jordan block of size n/2 - 1.
struct SpectralData {
    int n = 0;
    int d = 0;
    std::vector<double> eigenvalues;  // descending in j = 1..n/2-1
    std::vector<double> angles;       // phi_j = j pi / n
    int zero_algebraic = 0;
    int zero_geometric = 1;
    std::vector<std::vector<double>> right;  // [j-1][k-1], unnormalized closed form
    std::vector<std::vector<double>> left;
    std::vector<double> pair_norm;  // <L_j | R_j>
    std::vector<double> steady_right;  // A's steady pair, components 1..n
    std::vector<double> steady_left;
};

// Eigenvalues and multiplicity bookkeeping only (cheap at any n).
SpectralData closed_spectrum(int n, int d);

// Everything, including eigenvector tables and the steady pair.
SpectralData full_spectral_data(int n, int d);

// (R_j, L_j) for one j, components k = 1..n-2.
std::pair<std::vector<double>, std::vector<double>> closed_eigenvectors(int n, int d, int j);

// Largest eigenvalue of T at finite n, and its n -> infinity limit.
double lambda2(int n, int d);
Rational lambda2_tdl(int d);

// Jordan basis of the nilpotent part of T, exact over Q and
// biorthonormalized, right chain T p_k = p_{k-1}, left chain q_{k+1} = T^t q_k.
struct JordanChains {
    int n = 0;
    int d = 0;
    int m = 0;  // block size n/2 - 1
    std::vector<RationalVector> right;
    std::vector<RationalVector> left;
};

JordanChains make_jordan_chains(int n, int d);

// I(t) = A^t (1,...,1) assembled from the spectral decomposition of A:
// steady projector + closed eigen pairs + (optionally) the nilpotent chain
// sum, which shifts by t and dies entirely at t >= n/2 - 1. The eigen part
// cancels against huge chain coefficients at small t, so accumulation runs
// in 50-digit floats with the chains kept exact.
ReducedPurity<double> spectral_propagate(int n, int d, int t, bool include_kernel = true);

}  // namespace puritydyn::toeplitz
