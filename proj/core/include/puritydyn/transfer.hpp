#pragma once

#include <cstdint>
#include <vector>

#include "puritydyn/bipartition.hpp"
#include "puritydyn/circuit.hpp"
#include "puritydyn/gate_matrix.hpp"
#include "puritydyn/rational.hpp"

namespace puritydyn::markov {

// Vector of average purities over all 2^n bipartitions, indexed by mask.
// In the KuoPurity representation entry s IS the purity I_s; in the
// NonSymmetric_d2 representation entries are expansion coefficients and the
// purity is recovered by extract_from_coefficients.
template <typename Scalar>
using PurityVectorFull = std::vector<Scalar>;

// One full circuit step in place, matrix-free: per gate on (j, j+1),
// update the 4 local components for every spectator configuration.
template <typename Scalar>
void apply_transfer_step(PurityVectorFull<Scalar>& x, int n, Protocol protocol, const GateMatrix4& gate);

// Average purity vector after t steps starting from the all-ones vector.
template <typename Scalar>
PurityVectorFull<Scalar> propagate_full(int n, int d, int t, Protocol protocol = Protocol::kStaircase,
                                        GateRep rep = GateRep::kKuoPurity);

// KuoPurity representation: direct component read.
template <typename Scalar>
Scalar extract_purity(const PurityVectorFull<Scalar>& x, const Bipartition& cut);

// NonSymmetric_d2 coefficient representation: (1/2^w) * sum over submasks.
template <typename Scalar>
Scalar extract_from_coefficients(const PurityVectorFull<Scalar>& x, const Bipartition& cut);

// Fixed point of the dynamics: Lubkin purities for KuoPurity, the
// 3^w-weighted coefficient vector for NonSymmetric_d2 (d=2).
template <typename Scalar>
PurityVectorFull<Scalar> steady_state_vector(int n, int d, GateRep rep = GateRep::kKuoPurity);

void check_full_capacity(int n, bool rational_mode);

}  // namespace puritydyn::markov
