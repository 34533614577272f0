#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "puritydyn/circuit.hpp"

namespace puritydyn::spectra {

// Union of eigenvalue clouds of T + eps E over independent Gaussian E.
struct PseudospectrumCloud {
    int n = 0;
    int d = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<std::vector<std::complex<double>>> per_trial;  // n-2 values each
    std::vector<double> perturbation_norm;                     // ||eps E||_F per trial
    std::vector<std::string> failed_trials;

    std::vector<std::complex<double>> all() const {
        std::vector<std::complex<double>> out;
        for (const auto& t : per_trial) out.insert(out.end(), t.begin(), t.end());
        return out;
    }
};

// Eigenvalues of T + eps E for `trials` draws of i.i.d. standard normal E,
// dense nonsymmetric solve in double precision. Deterministic per (seed, trial).
PseudospectrumCloud pseudospectrum_sample(int n, int d, double epsilon, int trials, std::uint64_t seed);

// Eigenvalues of the unperturbed T. high_care switches to quad precision,
// which is what it takes to resolve the small closed-form eigenvalues
// through the exponentially ill-conditioned eigenbasis.
std::vector<std::complex<double>> finite_spectrum(int n, int d, bool high_care = false);

// Directed Hausdorff distance max_{a in from} min_{b in to} |a - b|.
double directed_hausdorff(const std::vector<std::complex<double>>& from,
                          const std::vector<std::complex<double>>& to);

}  // namespace puritydyn::spectra
