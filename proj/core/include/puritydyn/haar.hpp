#pragma once

#include <Eigen/Dense>

#include <random>

namespace puritydyn::mc {

// Haar-distributed unitary by the Ginibre construction: i.i.d. complex
// Gaussian matrix, QR, then fold the R-diagonal phases into Q so the result
// is the Q-factor of the positive-diagonal decomposition. Plain QR without
// the phase fix is not Haar.
Eigen::MatrixXcd sample_haar_unitary(int dim, std::mt19937_64& engine);

}  // namespace puritydyn::mc
