#include "puritydyn/pseudospectrum.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <random>
#include <stdexcept>

#include "puritydyn/coupling.hpp"
#include "puritydyn/reduced.hpp"
#include "puritydyn/rng.hpp"

namespace puritydyn::spectra {

namespace {

Eigen::MatrixXd toeplitz_dense(int n, int d) {
    const auto T = toeplitz::toeplitz_matrix<double>(n, d);
    Eigen::MatrixXd M(T.rows, T.cols);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.cols; ++j) M(i, j) = T(i, j);
    return M;
}

}  // namespace

PseudospectrumCloud pseudospectrum_sample(int n, int d, double epsilon, int trials, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("pseudospectrum_sample: n must be >= 4");
    if (n > 1200) throw capacity_error("pseudospectrum_sample: dense solves capped at n = 1200");
    if (epsilon <= 0) throw std::invalid_argument("pseudospectrum_sample: epsilon must be > 0");
    if (trials < 1) throw std::invalid_argument("pseudospectrum_sample: trials must be >= 1");

    const Eigen::MatrixXd T = toeplitz_dense(n, d);
    const int m = n - 2;

    PseudospectrumCloud cloud;
    cloud.n = n;
    cloud.d = d;
    cloud.epsilon = epsilon;
    cloud.seed = seed;
    cloud.trials = trials;
    cloud.per_trial.resize(static_cast<std::size_t>(trials));
    cloud.perturbation_norm.resize(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic)
    for (int trial = 0; trial < trials; ++trial) {
        auto eng = substream(seed, {0x70736575ULL, static_cast<std::uint64_t>(trial)});
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::MatrixXd E(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) E(i, j) = gauss(eng);
        const Eigen::MatrixXd P = T + epsilon * E;
        cloud.perturbation_norm[static_cast<std::size_t>(trial)] = epsilon * E.norm();
        Eigen::EigenSolver<Eigen::MatrixXd> solver(P, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) {
#pragma omp critical
            cloud.failed_trials.push_back("trial " + std::to_string(trial) + ": eigen solver did not converge");
            continue;
        }
        std::vector<std::complex<double>> ev(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        cloud.per_trial[static_cast<std::size_t>(trial)] = std::move(ev);
    }
    return cloud;
}

std::vector<std::complex<double>> finite_spectrum(int n, int d, bool high_care) {
    if (n < 4) throw std::invalid_argument("finite_spectrum: n must be >= 4");
    if (!high_care) {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(toeplitz_dense(n, d), false);
        if (solver.info() != Eigen::Success) throw std::runtime_error("finite_spectrum: solver did not converge");
        std::vector<std::complex<double>> out(static_cast<std::size_t>(n - 2));
        for (int i = 0; i < n - 2; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        return out;
    }
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    using MatQ = Eigen::Matrix<Quad, Eigen::Dynamic, Eigen::Dynamic>;
    const auto T = toeplitz::toeplitz_matrix<double>(n, d);
    MatQ M(T.rows, T.cols);
    const Quad aq = Quad(d) / (Quad(d) * d + 1);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.cols; ++j) {
            const int p = i - j;
            if (p == -1)
                M(i, j) = aq;
            else if (p >= 0)
                M(i, j) = boost::multiprecision::pow(aq, p + 2);
            else
                M(i, j) = 0;
        }
    Eigen::EigenSolver<MatQ> solver(M, false);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n - 2));
    for (int i = 0; i < n - 2; ++i) {
        const auto ev = solver.eigenvalues()(i);
        out[static_cast<std::size_t>(i)] = {ev.real().convert_to<double>(), ev.imag().convert_to<double>()};
    }
    return out;
}

double directed_hausdorff(const std::vector<std::complex<double>>& from,
                          const std::vector<std::complex<double>>& to) {
    if (from.empty() || to.empty()) throw std::invalid_argument("directed_hausdorff: empty point set");
    double worst = 0.0;
    for (const auto& p : from) {
        double best = 1e300;
        for (const auto& q : to) best = std::min(best, std::abs(p - q));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace puritydyn::spectra
