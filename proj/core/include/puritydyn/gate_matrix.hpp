#pragma once

#include <array>
#include <string>
#include <vector>

#include "puritydyn/rational.hpp"

namespace puritydyn::markov {

// The three printed 2-site purity transfer matrices, in the 2-site basis
// {00, 10, 01, 11}. KuoPurity is valid for any d; the other two are the
// known d=2 forms (symmetric XY-chain and non-symmetric coefficient rep).
enum class GateRep { kKuoPurity, kSymmetricXY_d2, kNonSymmetric_d2 };

struct GateMatrix4 {
    GateRep rep = GateRep::kKuoPurity;
    int d = 2;
    std::array<Rational, 16> m{};

    Rational& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    const Rational& at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
};

GateMatrix4 gate_matrix(GateRep rep, int d);

// Structural identities of the 2-site matrices, each verified exactly in
// rationals (or in Q[sqrt(3)] for the similarity transform):
//  - KuoPurity = |r1><l1| + |r2><l2| with the closed-form projector pair,
//  - singular values of KuoPurity are {sqrt(1+4a^2), 1, 0, 0},
//  - for d=2, (A1 x A1)^-1 Kuo (A1 x A1) equals the symmetric XY form.
struct GateDecompositionReport {
    bool eigen_ok = false;
    bool svd_ok = false;
    bool similarity_ok = false;
    double sigma1 = 0.0;  // largest singular value
    std::string detail;

    bool all_ok() const { return eigen_ok && svd_ok && similarity_ok; }
};

GateDecompositionReport gate_decomposition_checks(GateRep rep, int d);

}  // namespace puritydyn::markov
