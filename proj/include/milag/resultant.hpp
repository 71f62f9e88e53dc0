#pragma once

#include <utility>
#include <vector>

#include "milag/polynomial.hpp"

namespace milag {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Bareiss elimination; exact over any integral domain
/// whose exact_div is available.  Destroys its argument.
template <class T>
T det_bareiss(Matrix<T> m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    T prev_pivot(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        // Pivot: find a row with nonzero leading entry.
        size_t piv = k;
        while (piv < n && is_zero(m[piv][k])) ++piv;
        if (piv == n) return T();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, prev_pivot);
            }
            m[i][k] = T();
        }
        prev_pivot = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

/// Cofactor expansion along the first row; only sensible for small
/// matrices (the Wronskians here are at most 4x4).
template <class T>
T det_cofactor(const Matrix<T>& m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc{};
    for (size_t j = 0; j < n; ++j) {
        if (is_zero(m[0][j])) continue;
        Matrix<T> minor(n - 1, std::vector<T>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        T term = m[0][j] * det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// Sylvester matrix of a and b (sizes deg a + deg b), rows of b's
/// coefficients first following the usual res(a, b) convention.
template <class C>
Matrix<C> sylvester_matrix(const Poly<C>& a, const Poly<C>& b) {
    const int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) throw ZeroPolynomial("sylvester_matrix: zero input");
    const size_t n = static_cast<size_t>(da + db);
    Matrix<C> m(n, std::vector<C>(n));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a.coeff(da - k);
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            m[static_cast<size_t>(db + r)][static_cast<size_t>(r + k)] = b.coeff(db - k);
    return m;
}

/// Resultant of two polynomials over the coefficient ring C, computed
/// exactly by fraction-free elimination of the Sylvester matrix.
template <class C>
C resultant(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant: zero input");
    if (a.degree() == 0) {
        // res(c, b) = c^deg(b)
        C r(1);
        for (int i = 0; i < b.degree(); ++i) r = r * a.coeff(0);
        return r;
    }
    if (b.degree() == 0) {
        C r(1);
        for (int i = 0; i < a.degree(); ++i) r = r * b.coeff(0);
        return r;
    }
    return det_bareiss(sylvester_matrix(a, b));
}

/// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p).  Requires deg >= 2.
template <class C>
C discriminant(const Poly<C>& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeTooLow("discriminant: degree must be at least 2");
    C r = resultant(p, p.derivative());
    C d = exact_div(r, p.leading());
    return (n * (n - 1) / 2) % 2 == 1 ? -d : d;
}

} // namespace milag
