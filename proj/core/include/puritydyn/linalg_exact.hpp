#pragma once

#include <vector>

#include "puritydyn/rational.hpp"

namespace puritydyn {

// Dense matrices over exact scalars, row-major. Sizes here are small
// (kernel censuses, Jordan chains), so plain loops beat anything fancier.
template <typename T>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

using RationalMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<BigInt>;
using RationalVector = std::vector<Rational>;

RationalMatrix rational_matmul(const RationalMatrix& A, const RationalMatrix& B);
RationalVector rational_matvec(const RationalMatrix& A, const RationalVector& v);
RationalMatrix rational_transpose(const RationalMatrix& A);

// Exact rank by Gaussian elimination over Q.
int rational_rank(RationalMatrix M);

// Exact rank of an integer matrix, fraction-free elimination with per-row
// content stripping to keep entries small.
int integer_rank(IntMatrix M);

// Basis of the right nullspace of M over Q.
std::vector<RationalVector> rational_nullspace(const RationalMatrix& M);

bool is_zero(const RationalVector& v);

inline Rational dot(const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace puritydyn
