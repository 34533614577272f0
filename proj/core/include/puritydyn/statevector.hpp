#pragma once

#include <Eigen/Dense>

#include <vector>

#include "puritydyn/bipartition.hpp"
#include "puritydyn/circuit.hpp"

namespace puritydyn::mc {

// Pure state of n qudits; basis index sum_j digit_j d^(j-1), site 1 fastest.
class StateVector {
  public:
    StateVector(int d, int n);  // |0...0>

    int d() const { return d_; }
    int n() const { return n_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    Eigen::VectorXcd& amplitudes() { return amps_; }

    double norm() const { return amps_.norm(); }

    // Contract a d^2 x d^2 gate over sites (j, j+1), 1-based.
    void apply_two_site_gate(const Eigen::MatrixXcd& gate, int j);

    // Tr rho_A^2 through the Gram matrix of the smaller tensor factor. The
    // factor is chosen canonically (ties resolved toward the side holding
    // site 1) so purity(mask) and purity(~mask) run the identical reduction.
    double purity(const Bipartition& cut) const;

  private:
    int d_;
    int n_;
    Eigen::VectorXcd amps_;
};

// All t_max + 1 snapshots of the circuit on |0...0>; gates drawn per the
// config's policy from counter-based substreams of (seed, realization).
std::vector<StateVector> run_circuit(const CircuitConfig& config, std::uint64_t realization = 0);

// One step applied in place (exposed for streaming consumers).
void apply_circuit_step(StateVector& state, const CircuitConfig& config, std::uint64_t realization, int t);

}  // namespace puritydyn::mc
