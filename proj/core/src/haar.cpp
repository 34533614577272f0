#include "puritydyn/haar.hpp"

#include <complex>
#include <stdexcept>

namespace puritydyn::mc {

Eigen::MatrixXcd sample_haar_unitary(int dim, std::mt19937_64& engine) {
    if (dim < 4) throw std::invalid_argument("sample_haar_unitary: two-qudit dimension d^2 >= 4 required");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd A(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            const double re = gauss(engine);
            const double im = gauss(engine);
            A(i, j) = std::complex<double>(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    Eigen::MatrixXcd Q = qr.householderQ();
    const auto diag = qr.matrixQR().diagonal();
    for (int j = 0; j < dim; ++j) {
        const std::complex<double> r = diag(j);
        Q.col(j) *= r / std::abs(r);
    }
    return Q;
}

}  // namespace puritydyn::mc
