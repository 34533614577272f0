#pragma once

#include <vector>

#include "puritydyn/circuit.hpp"
#include "puritydyn/linalg_exact.hpp"
#include "puritydyn/rational.hpp"

namespace puritydyn::toeplitz {

// Contiguous-cut purities I_k, k = 2..n-1 (staircase) or the even cuts
// I_2, I_4, ..., I_{n-2} (brick-wall), with their time stamp.
template <typename Scalar>
struct ReducedPurity {
    int n = 0;
    int t = 0;
    Protocol protocol = Protocol::kStaircase;
    std::vector<Scalar> values;  // indexed by position in the cut list

    // cut list element i corresponds to cut k = first_cut() + stride()*i
    int first_cut() const { return 2; }
    int stride() const { return protocol == Protocol::kStaircase ? 1 : 2; }
    int num_cuts() const { return static_cast<int>(values.size()); }

    const Scalar& at_cut(int k) const {
        const int i = (k - first_cut()) / stride();
        if (k < first_cut() || (k - first_cut()) % stride() != 0 || i >= num_cuts())
            throw std::invalid_argument("ReducedPurity: cut not tracked by this protocol");
        return values[static_cast<std::size_t>(i)];
    }
};

// The (n-2) x (n-2) lower-Hessenberg Toeplitz matrix of the staircase
// reduction: superdiagonal alpha, diagonals alpha^(p+2) below.
template <typename Scalar>
DenseMatrix<Scalar> toeplitz_matrix(int n, int d);

// Affine constant: (alpha^2, ..., alpha^(n-2), alpha^(n-1) + alpha).
template <typename Scalar>
std::vector<Scalar> affine_vector(int n, int d);

// Brick-wall tridiagonal (n/2-1 dim): diag 2 alpha^2, off-diag alpha^2,
// affine constant (alpha^2, 0, ..., 0, alpha^2).
template <typename Scalar>
DenseMatrix<Scalar> brickwall_matrix(int n, int d);

// One recursion step I(t+1) = a + T I(t), O(n) via the prefix structure of T.
template <typename Scalar>
ReducedPurity<Scalar> recursion_step(const ReducedPurity<Scalar>& in, int d);

// Iterate from the all-ones start; returns the t_max+1 snapshots (t = 0..t_max).
template <typename Scalar>
std::vector<ReducedPurity<Scalar>> propagate_reduced(int n, int d, int t_max,
                                                     Protocol protocol = Protocol::kStaircase);

// Printed closed forms for I_k(t), t in {1,2,3}. The derivation ignores the
// right boundary, so values are exact only for cuts k <= n - t.
Rational closed_form_small_t(int k, int n, int d, int t);

// R^-1 T R with R = diag(alpha, ..., alpha^(n-2)); all nonzero entries
// collapse to alpha^2 (checked exactly).
RationalMatrix similarity_normalize(int n, int d);

// Characteristic polynomial checks of T: closed-form eigenvalues are roots,
// midpoints are not, and lambda = 0 has algebraic multiplicity n/2 - 1.
struct CharacteristicReport {
    bool roots_ok = false;
    bool midpoints_ok = false;
    bool zero_multiplicity_ok = false;
    int zero_multiplicity = 0;
    double max_root_residual = 0.0;
    double min_midpoint_value = 0.0;

    bool all_ok() const { return roots_ok && midpoints_ok && zero_multiplicity_ok; }
};

CharacteristicReport characteristic_check(int n, int d);

// Exact characteristic polynomial coefficients of T, det(xI - T) =
// sum_k coeffs[k] x^k (Faddeev-LeVerrier over Q).
std::vector<Rational> characteristic_polynomial(int n, int d);

}  // namespace puritydyn::toeplitz
