#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "etcs/error.hpp"
#include "etcs/poly.hpp"
#include "etcs/rational.hpp"

namespace etcs {

// Dense matrix over an exact field F (rationals or surds).
template <class F>
struct Mat {
    size_t n = 0, m = 0;
    std::vector<F> a; // row-major

    Mat() = default;
    Mat(size_t rows, size_t cols) : n(rows), m(cols), a(rows * cols, F(0)) {}

    static Mat identity(size_t k) {
        Mat r(k, k);
        for (size_t i = 0; i < k; ++i) r(i, i) = F(1);
        return r;
    }

    static Mat from_rows(std::vector<std::vector<F>> rows) {
        Mat r(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < r.n; ++i) {
            if (rows[i].size() != r.m) fail_input("ragged matrix rows");
            for (size_t j = 0; j < r.m; ++j) r(i, j) = rows[i][j];
        }
        return r;
    }

    F& operator()(size_t i, size_t j) { return a[i * m + j]; }
    const F& operator()(size_t i, size_t j) const { return a[i * m + j]; }

    bool operator==(const Mat& o) const { return n == o.n && m == o.m && a == o.a; }

    Mat transpose() const {
        Mat r(m, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_square() const { return n == m; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (sgn(x) != 0) return false;
        return true;
    }

    F trace() const {
        F t(0);
        for (size_t i = 0; i < n; ++i) t = t + (*this)(i, i);
        return t;
    }

    Mat submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        Mat r(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
        return r;
    }
};

template <class F>
Mat<F> operator+(const Mat<F>& x, const Mat<F>& y) {
    if (x.n != y.n || x.m != y.m) fail_math("matrix shape mismatch");
    Mat<F> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

template <class F>
Mat<F> operator-(const Mat<F>& x, const Mat<F>& y) {
    if (x.n != y.n || x.m != y.m) fail_math("matrix shape mismatch");
    Mat<F> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

template <class F>
Mat<F> operator-(const Mat<F>& x) {
    Mat<F> r = x;
    for (auto& v : r.a) v = F(0) - v;
    return r;
}

template <class F>
Mat<F> operator*(const Mat<F>& x, const Mat<F>& y) {
    if (x.m != y.n) fail_math("matrix shape mismatch");
    Mat<F> r(x.n, y.m);
    for (size_t i = 0; i < x.n; ++i)
        for (size_t k = 0; k < x.m; ++k) {
            if (sgn(x(i, k)) == 0) continue;
            for (size_t j = 0; j < y.m; ++j)
                r(i, j) = r(i, j) + x(i, k) * y(k, j);
        }
    return r;
}

template <class F>
Mat<F> operator*(const Mat<F>& x, const F& s) {
    Mat<F> r = x;
    for (auto& v : r.a) v = v * s;
    return r;
}

// Reduced row echelon form in place; returns pivot column indices.
template <class F>
std::vector<size_t> rref(Mat<F>& A) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < A.m && r < A.n; ++c) {
        size_t sel = r;
        while (sel < A.n && sgn(A(sel, c)) == 0) ++sel;
        if (sel == A.n) continue;
        for (size_t j = 0; j < A.m; ++j) std::swap(A(r, j), A(sel, j));
        const F inv = F(1) / A(r, c);
        for (size_t j = 0; j < A.m; ++j) A(r, j) = A(r, j) * inv;
        for (size_t i = 0; i < A.n; ++i) {
            if (i == r || sgn(A(i, c)) == 0) continue;
            const F f = A(i, c);
            for (size_t j = 0; j < A.m; ++j) A(i, j) = A(i, j) - f * A(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
size_t rank(Mat<F> A) {
    return rref(A).size();
}

// Columns form a basis of the kernel of A.
template <class F>
Mat<F> kernel_basis(Mat<F> A) {
    const size_t cols = A.m;
    const auto pivots = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<F> K(cols, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const size_t fc = free_cols[k];
        K(fc, k) = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) K(pivots[r], k) = F(0) - A(r, fc);
    }
    return K;
}

// Unique X with A X = B; A must have full column rank and the system must be
// consistent.
template <class F>
Mat<F> solve_exact(const Mat<F>& A, const Mat<F>& B) {
    if (A.n != B.n) fail_math("matrix shape mismatch");
    Mat<F> aug(A.n, A.m + B.m);
    for (size_t i = 0; i < A.n; ++i) {
        for (size_t j = 0; j < A.m; ++j) aug(i, j) = A(i, j);
        for (size_t j = 0; j < B.m; ++j) aug(i, A.m + j) = B(i, j);
    }
    const auto pivots = rref(aug);
    size_t lead = 0;
    for (; lead < pivots.size(); ++lead)
        if (pivots[lead] >= A.m) break;
    if (lead != A.m) fail_math("linear system is underdetermined");
    if (pivots.size() > A.m) fail_math("linear system is inconsistent");
    Mat<F> X(A.m, B.m);
    for (size_t i = 0; i < A.m; ++i)
        for (size_t j = 0; j < B.m; ++j) X(i, j) = aug(i, A.m + j);
    return X;
}

template <class F>
Mat<F> inverse(const Mat<F>& A) {
    if (!A.is_square()) fail_math("inverse of a non-square matrix");
    return solve_exact(A, Mat<F>::identity(A.n));
}

// Monic characteristic polynomial det(x I - A) by the trace recursion
// (valid over any field of characteristic zero).
template <class F>
Poly<F> char_poly_monic(const Mat<F>& A) {
    if (!A.is_square()) fail_math("characteristic polynomial of a non-square matrix");
    const size_t n = A.n;
    std::vector<F> coeff(n + 1, F(0));
    coeff[n] = F(1);
    Mat<F> M = Mat<F>::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        M = A * M;
        F c = (F(0) - M.trace()) * (F(1) / F(Rat(static_cast<long>(k))));
        coeff[n - k] = c;
        for (size_t i = 0; i < n; ++i) M(i, i) = M(i, i) + c;
    }
    return Poly<F>(std::move(coeff));
}

// p(A) for a polynomial p.
template <class F>
Mat<F> poly_at_matrix(const Poly<F>& p, const Mat<F>& A) {
    if (!A.is_square()) fail_math("polynomial of a non-square matrix");
    Mat<F> acc(A.n, A.n);
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = acc * A;
        for (size_t d = 0; d < A.n; ++d) acc(d, d) = acc(d, d) + p.c[i];
    }
    return acc;
}

struct Inertia {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Inertia&) const = default;
    int rank() const { return pos + neg; }
    int signature() const { return pos - neg; }
};

// Sylvester inertia of a symmetric matrix by exact congruence reduction.
template <class F>
Inertia inertia(Mat<F> A) {
    if (!A.is_symmetric()) fail_math("inertia requires a symmetric matrix");
    const size_t n = A.n;
    Inertia out;
    size_t k = 0;
    while (k < n) {
        // choose a nonzero diagonal pivot at or after k
        size_t piv = k;
        while (piv < n && sgn(A(piv, piv)) == 0) ++piv;
        if (piv == n) {
            // all remaining diagonal entries vanish; look off-diagonal
            size_t oi = n, oj = n;
            for (size_t i = k; i < n && oi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (sgn(A(i, j)) != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                out.zero += static_cast<int>(n - k);
                return out;
            }
            // e_oi += e_oj makes the (oi, oi) entry 2*A(oi, oj) != 0
            for (size_t j = 0; j < n; ++j) A(oi, j) = A(oi, j) + A(oj, j);
            for (size_t i = 0; i < n; ++i) A(i, oi) = A(i, oi) + A(i, oj);
            piv = oi;
        }
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            for (size_t i = 0; i < n; ++i) std::swap(A(i, k), A(i, piv));
        }
        const F d = A(k, k);
        if (sgn(d) > 0)
            ++out.pos;
        else
            ++out.neg;
        // rank-one update A' = A - (a a^T)/d on the trailing block,
        // where a is column k
        std::vector<F> col(n, F(0));
        for (size_t i = k + 1; i < n; ++i) col[i] = A(i, k);
        const F inv_d = F(1) / d;
        for (size_t i = k + 1; i < n; ++i) {
            if (sgn(col[i]) == 0) continue;
            const F f = col[i] * inv_d;
            for (size_t j = k + 1; j < n; ++j) A(i, j) = A(i, j) - f * col[j];
        }
        for (size_t i = k + 1; i < n; ++i) {
            A(i, k) = F(0);
            A(k, i) = F(0);
        }
        ++k;
    }
    return out;
}

using RatMat = Mat<Rat>;

} // namespace etcs
