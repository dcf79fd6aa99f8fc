#pragma once

#include <vector>

#include "riocalc/riordan.hpp"
#include "riocalc/series.hpp"

namespace riocalc {

/// Chebyshev polynomial of the second kind evaluated at a rational point,
/// by the three-term recurrence U_n = 2x U_{n-1} - U_{n-2}.
inline Rational chebyshev_U_eval(int n, const Rational& x) {
    if (n < 0) return Rational(0);
    Rational prev(1), cur = Rational(2) * x;
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        Rational next = Rational(2) * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Coefficient array of the generalized Chebyshev polynomials of the second
/// kind: ((1 - lambda x - mu x^2) / (1 + r x + s x^2), x / (1 + r x + s x^2)).
inline RatPair gen_cheb_pair(const Rational& r, const Rational& s, const Rational& lambda,
                             const Rational& mu, int order = kDefaultOrder) {
    std::vector<Rational> den = {Rational(1), r, s};
    return RatPair(rational_gf<Rational>({Rational(1), -lambda, -mu}, den, order),
                   rational_gf<Rational>({Rational(0), Rational(1)}, den, order));
}

inline RatMatrix gen_cheb_array(const Rational& r, const Rational& s, const Rational& lambda,
                                const Rational& mu, int n, int order = kDefaultOrder) {
    return gen_cheb_pair(r, s, lambda, mu, order).to_matrix(n);
}

namespace detail {
template <Coefficient C>
Series<C> onepx_pow(int e, int order) {
    return series_pow(Series<C>::from_coeffs({C(1), C(1)}, order), e);
}
}  // namespace detail

/// The parameterized coefficient array ((1 + ux + ux^2)/(1+x)^m, x/(1+x)^2)
/// whose moments expand in u to the Catalan-type involutions, m in {1, 2}.
inline RiordanPair<RatPoly> chebyshev_moment_family(int m, int order = kDefaultOrder) {
    if (m < 1 || m > 2) throw DegenerateParameters("m must be 1 or 2");
    using PS = Series<RatPoly>;
    RatPoly u = RatPoly::indeterminate();
    PS num = PS::from_coeffs({RatPoly(1), u, u}, order);
    PS den = detail::onepx_pow<RatPoly>(m, order);
    PS f = div(PS::x(order), detail::onepx_pow<RatPoly>(2, order));
    return RiordanPair<RatPoly>(div(num, den), f);
}

/// The two-parameter probe ((1 + yx + s*y*x^2)/(1+x)^2, x/(1+x)^2): the outer
/// indeterminate is y, the inner one is the scale s on the quadratic term.
inline RiordanPair<Poly<RatPoly>> scaled_chebyshev_moment_family(int order = kDefaultOrder) {
    using PP = Poly<RatPoly>;
    using PS = Series<PP>;
    PP y = PP::indeterminate();
    PP sy = PP(std::vector<RatPoly>{RatPoly(0), RatPoly::indeterminate()});
    PS num = PS::from_coeffs({PP(1), y, sy}, order);
    PS den = detail::onepx_pow<PP>(2, order);
    PS f = div(PS::x(order), den);
    return RiordanPair<PP>(div(num, den), f);
}

/// The (a, b) moment source:
/// ((1 + (2-a+u)x + (-a+b+1+u)x^2)/(1+ax+bx^2), x/(1+ax+bx^2)).
inline RiordanPair<RatPoly> general_moment_family(const Rational& a, const Rational& b,
                                                  int order = kDefaultOrder) {
    RatPoly u = RatPoly::indeterminate();
    std::vector<RatPoly> den = {RatPoly(1), RatPoly(a), RatPoly(b)};
    std::vector<RatPoly> num = {RatPoly(1), RatPoly(Rational(2) - a) + u,
                                RatPoly(-a + b + Rational(1)) + u};
    return RiordanPair<RatPoly>(rational_gf<RatPoly>(num, den, order),
                                rational_gf<RatPoly>({RatPoly(0), RatPoly(1)}, den, order));
}

/// Closed form of the involution carrying the (a, b) moments:
///   g = 2b / D,   f = (S + (a-2b)x - 1) / D,
///   S = sqrt(1 - 2ax + (a^2-4b)x^2),   D = 1-a+2b + (a-1)(a-4b)x + (a-1)S.
inline RatPair general_moment_involution(const Rational& a, const Rational& b,
                                         int order = kDefaultOrder) {
    if (is_zero(b)) throw DegenerateParameters("b must be nonzero");
    RatSeries s = sqrt1(RatSeries::from_coeffs({Rational(1), Rational(-2) * a, a * a - Rational(4) * b}, order));
    RatSeries d = RatSeries::from_coeffs({Rational(1) - a + Rational(2) * b, (a - Rational(1)) * (a - Rational(4) * b)}, order) +
                  scale(s, a - Rational(1));
    if (!is_unit(d[0])) throw DegenerateParameters("closed-form denominator vanishes at 0");
    RatSeries g = div(RatSeries::constant(Rational(2) * b, order), d);
    RatSeries fnum = s + RatSeries::from_coeffs({Rational(-1), a - Rational(2) * b}, order);
    return RatPair(g, div(fnum, d));
}

/// The k-parameter moment source ((1 + x u (1+x)^{k-1})/(1+x)^m, x/(1+x)^k).
inline RiordanPair<RatPoly> gk_moment_family(int k, int m, int order = kDefaultOrder) {
    if (k < 2 || m < 0 || m > k) throw DegenerateParameters("need k >= 2 and 0 <= m <= k");
    using PS = Series<RatPoly>;
    RatPoly u = RatPoly::indeterminate();
    PS num = PS::one(order) + scale(shift_up(detail::onepx_pow<RatPoly>(k - 1, order), 1), u);
    PS den = detail::onepx_pow<RatPoly>(m, order);
    PS f = div(PS::x(order), detail::onepx_pow<RatPoly>(k, order));
    return RiordanPair<RatPoly>(div(num, den), f);
}

/// The involution (g^m, -x g^{2k-1}) with g = 1 + x g^k.
inline RatPair gk_involution(int k, int m, int order = kDefaultOrder) {
    if (k < 2 || m < 0 || m > k) throw DegenerateParameters("need k >= 2 and 0 <= m <= k");
    RatSeries g = solve_gk<Rational>(k, order);
    return RatPair(series_pow(g, m), -shift_up(series_pow(g, 2 * k - 1), 1));
}

/// R . (1, -x) . R^{-1}: always an involution.
template <Coefficient C>
RiordanPair<C> factorization_involution(const RiordanPair<C>& r) {
    int n = r.order();
    RiordanPair<C> conj(Series<C>::one(n), -Series<C>::x(n));
    return rmul(r, rmul(conj, rinv(r)));
}

/// The associated-subgroup involution
/// (1, -x/(1+2ax+bx^2) * c(b x^2 / (1+2ax+bx^2)^2)).
inline RatPair associated_involution(const Rational& a, const Rational& b,
                                     int order = kDefaultOrder) {
    RatSeries den = RatSeries::from_coeffs({Rational(1), Rational(2) * a, b}, order);
    RatSeries arg = scale(div(shift_up(RatSeries::one(order), 2), den * den), b);
    RatSeries f = -div(RatSeries::x(order), den) * compose(catalan_series<Rational>(order), arg);
    return RatPair(RatSeries::one(order), f);
}

/// The RNA involution in its closed Catalan form
/// ((1/(1-x+x^2)) c(x^2/(1-x+x^2)^2), (-x/(1-x+x^2)) c(x^2/(1-x+x^2)^2)).
inline RatPair rna_involution(int order = kDefaultOrder) {
    RatSeries den = RatSeries::from_coeffs({Rational(1), Rational(-1), Rational(1)}, order);
    RatSeries arg = div(shift_up(RatSeries::one(order), 2), den * den);
    RatSeries core = div(compose(catalan_series<Rational>(order), arg), den);
    return RatPair(core, -shift_up(core, 1));
}

}  // namespace riocalc
