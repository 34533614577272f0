#include "puritydyn/linalg_exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace puritydyn {

RationalMatrix rational_matmul(const RationalMatrix& A, const RationalMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("rational_matmul: shape mismatch");
    RationalMatrix out(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int k = 0; k < A.cols; ++k) {
            const Rational& aik = A(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Rational& bkj = B(k, j);
                if (bkj != 0) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

RationalVector rational_matvec(const RationalMatrix& A, const RationalVector& v) {
    if (A.cols != static_cast<int>(v.size())) throw std::invalid_argument("rational_matvec: shape mismatch");
    RationalVector out(A.rows, Rational(0));
    for (int i = 0; i < A.rows; ++i) {
        Rational s = 0;
        for (int j = 0; j < A.cols; ++j) {
            if (A(i, j) != 0 && v[j] != 0) s += A(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

RationalMatrix rational_transpose(const RationalMatrix& A) {
    RationalMatrix out(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) out(j, i) = A(i, j);
    return out;
}

int rational_rank(RationalMatrix M) {
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i) {
            if (M(i, c) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < M.cols; ++j) std::swap(M(r, j), M(piv, j));
        }
        const Rational pv = M(r, c);
        for (int i = r + 1; i < M.rows; ++i) {
            if (M(i, c) == 0) continue;
            const Rational f = M(i, c) / pv;
            M(i, c) = 0;
            for (int j = c + 1; j < M.cols; ++j) {
                if (M(r, j) != 0) M(i, j) -= f * M(r, j);
            }
        }
        ++r;
    }
    return r;
}

namespace {

void strip_row_content(IntMatrix& M, int i, int from_col) {
    BigInt g = 0;
    for (int j = from_col; j < M.cols; ++j) {
        if (M(i, j) != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), M(i, j).get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g <= 1) return;
    for (int j = from_col; j < M.cols; ++j) {
        if (M(i, j) != 0) mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

int integer_rank(IntMatrix M) {
    int r = 0;
    for (int i = 0; i < M.rows; ++i) strip_row_content(M, i, 0);
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        // smallest nonzero pivot keeps the fraction-free updates tame
        int piv = -1;
        for (int i = r; i < M.rows; ++i) {
            if (M(i, c) == 0) continue;
            if (piv < 0 || mpz_cmpabs(M(i, c).get_mpz_t(), M(piv, c).get_mpz_t()) < 0) piv = i;
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < M.cols; ++j) std::swap(M(r, j), M(piv, j));
        }
        const BigInt pv = M(r, c);
        for (int i = r + 1; i < M.rows; ++i) {
            if (M(i, c) == 0) continue;
            const BigInt f = M(i, c);
            M(i, c) = 0;
            for (int j = c + 1; j < M.cols; ++j) {
                M(i, j) = M(i, j) * pv - f * M(r, j);
            }
            strip_row_content(M, i, c + 1);
        }
        ++r;
    }
    return r;
}

std::vector<RationalVector> rational_nullspace(const RationalMatrix& Min) {
    RationalMatrix M = Min;
    const int rows = M.rows, cols = M.cols;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (M(i, c) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(M(r, j), M(piv, j));
        }
        const Rational pv = M(r, c);
        for (int j = 0; j < cols; ++j) M(r, j) /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Rational f = M(i, c);
            for (int j = 0; j < cols; ++j) {
                if (M(r, j) != 0) M(i, j) -= f * M(r, j);
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<RationalVector> basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        RationalVector v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -M(static_cast<int>(i), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace puritydyn
