#pragma once

#include <vector>

#include "riocalc/riordan.hpp"

namespace riocalc {

namespace detail {

/// Exact determinant by cofactor expansion along the first row; used as a
/// fallback when fraction-free elimination meets a zero pivot.
template <Coefficient C>
C det_cofactor(const std::vector<std::vector<C>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    C acc(0);
    bool neg = false;
    for (size_t j = 0; j < n; ++j) {
        if (!is_zero(m[0][j])) {
            std::vector<std::vector<C>> minor;
            minor.reserve(n - 1);
            for (size_t i = 1; i < n; ++i) {
                std::vector<C> row;
                row.reserve(n - 1);
                for (size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(m[i][k]);
                minor.push_back(std::move(row));
            }
            C term = m[0][j] * det_cofactor(minor);
            acc = neg ? acc - term : acc + term;
        }
        neg = !neg;
    }
    return acc;
}

/// Fraction-free (Bareiss) determinant with positional pivoting.  Exact over
/// any integral-domain coefficient (rationals or polynomials).  A vanishing
/// pivot aborts the elimination and the determinant is recomputed from the
/// original matrix by cofactor expansion.
template <Coefficient C>
C det_bareiss(const std::vector<std::vector<C>>& orig) {
    size_t n = orig.size();
    if (n == 1) return orig[0][0];
    std::vector<std::vector<C>> m = orig;
    C prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) return det_cofactor(orig);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = C(0);
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

}  // namespace detail

/// Hankel transform h_n = det (a_{i+j})_{0..n} for n = 0..n_max.
template <Coefficient C>
std::vector<C> hankel_transform(const std::vector<C>& a, int n_max) {
    if (static_cast<int>(a.size()) < 2 * n_max + 1) throw NotEnoughTerms();
    std::vector<C> h;
    h.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::vector<C>> m(n + 1, std::vector<C>(n + 1));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) m[i][j] = a[i + j];
        h.push_back(detail::det_bareiss(m));
    }
    return h;
}

/// b_n = sum_k C(n, k) a_k
template <Coefficient C>
std::vector<C> binomial_transform(const std::vector<C>& a) {
    std::vector<C> b(a.size(), C(0));
    for (size_t n = 0; n < a.size(); ++n)
        for (size_t k = 0; k <= n; ++k) {
            C coef = coeff_from_rational<C>(binomial(static_cast<long>(n), static_cast<long>(k)));
            b[n] = b[n] + coef * a[k];
        }
    return b;
}

/// INVERT transform: the sequence of b(x) = a(x) / (1 - x a(x)).
template <Coefficient C>
std::vector<C> invert_transform(const std::vector<C>& a) {
    int n = static_cast<int>(a.size()) - 1;
    Series<C> as = Series<C>::from_coeffs(a, n);
    Series<C> b = div(as, Series<C>::one(n) - shift_up(as, 1));
    return b.coeffs();
}

enum class SumMode { row, abs_row, diagonal };

template <Coefficient C>
std::vector<C> matrix_sums(const LowerTriMatrix<C>& m, SumMode mode) {
    std::vector<C> out;
    out.reserve(m.size());
    for (int n = 0; n < m.size(); ++n) {
        C acc(0);
        switch (mode) {
            case SumMode::row:
                for (int k = 0; k <= n; ++k) acc = acc + m.entry(n, k);
                break;
            case SumMode::abs_row:
                if constexpr (SignedCoefficient<C>) {
                    for (int k = 0; k <= n; ++k) acc = acc + abs_value(m.entry(n, k));
                } else {
                    throw UnsupportedCoefficient("absolute row sums need signed coefficients");
                }
                break;
            case SumMode::diagonal:
                for (int k = 0; 2 * k <= n; ++k) acc = acc + m.entry(n - k, k);
                break;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

template <Coefficient C>
std::vector<C> row_sums(const LowerTriMatrix<C>& m) {
    return matrix_sums(m, SumMode::row);
}
template <Coefficient C>
std::vector<C> abs_row_sums(const LowerTriMatrix<C>& m) {
    return matrix_sums(m, SumMode::abs_row);
}
template <Coefficient C>
std::vector<C> diagonal_sums(const LowerTriMatrix<C>& m) {
    return matrix_sums(m, SumMode::diagonal);
}

}  // namespace riocalc
