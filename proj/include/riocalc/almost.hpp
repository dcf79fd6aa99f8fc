#pragma once

#include <utility>
#include <vector>

#include "riocalc/jfrac.hpp"
#include "riocalc/riordan.hpp"
#include "riocalc/transforms.hpp"

namespace riocalc {

/// Almost-Riordan array of the first kind: an arbitrary first column with
/// generating function a(x), and the Riordan array (g, f) embedded one row
/// down in the remaining columns:
///   entry(n, 0) = [x^n] a,   entry(n, k) = [x^{n-1}] g f^{k-1}  for k >= 1.
template <Coefficient C>
class AlmostRiordan1 {
public:
    AlmostRiordan1(Series<C> a, Series<C> g, Series<C> f)
        : a_(std::move(a)), pair_(std::move(g), std::move(f)) {
        if (!is_unit(a_[0])) throw InvalidPair("first-column constant term must be a unit");
    }

    const Series<C>& a() const { return a_; }
    const Series<C>& g() const { return pair_.g(); }
    const Series<C>& f() const { return pair_.f(); }
    int order() const { return std::min(a_.order(), pair_.order()); }

    LowerTriMatrix<C> to_matrix(int n) const {
        if (n - 1 > order()) throw TruncationExceeded();
        LowerTriMatrix<C> m(n);
        for (int i = 0; i < n; ++i) m.set(i, 0, a_[i]);
        if (n > 1) {
            LowerTriMatrix<C> inner = pair_.to_matrix(n - 1);
            for (int i = 1; i < n; ++i)
                for (int k = 1; k <= i; ++k) m.set(i, k, inner.entry(i - 1, k - 1));
        }
        return m;
    }

private:
    Series<C> a_;
    RiordanPair<C> pair_;
};

/// Coefficient array of the Chebyshev polynomials of the first kind:
///   (1/(1+x^2) | (1-x^2)/(1+x^2)^2, 2x/(1+x^2)).
inline AlmostRiordan1<Rational> chebyshev_T_array(int order = kDefaultOrder) {
    std::vector<Rational> onepx2 = {Rational(1), Rational(0), Rational(1)};
    RatSeries a = rational_gf<Rational>({Rational(1)}, onepx2, order);
    RatSeries den2 = RatSeries::from_coeffs(onepx2, order);
    RatSeries g = div(RatSeries::from_coeffs({Rational(1), Rational(0), Rational(-1)}, order),
                      den2 * den2);
    RatSeries f = rational_gf<Rational>({Rational(0), Rational(2)}, onepx2, order);
    return AlmostRiordan1<Rational>(a, g, f);
}

/// The parameterized first-kind array
///   ((1+ux+ux^2)/(1+x^2) | (1+ux+ux^2)/(1+x^2)^2, x/(1+x^2)).
inline AlmostRiordan1<RatPoly> parameterized_T_array(int order = kDefaultOrder) {
    using PS = Series<RatPoly>;
    RatPoly u = RatPoly::indeterminate();
    PS num = PS::from_coeffs({RatPoly(1), u, u}, order);
    PS den = PS::from_coeffs({RatPoly(1), RatPoly(0), RatPoly(1)}, order);
    return AlmostRiordan1<RatPoly>(div(num, den), div(num, den * den), div(PS::x(order), den));
}

/// Everything the first-kind moment analysis produces: the moments read off
/// the inverted array, their coefficient array, the peeled continued
/// fraction, and the polynomial Hankel transform.
struct FirstKindMoments {
    std::vector<RatPoly> moments;
    RatMatrix coeff_array;
    JFraction<RatPoly> jf;
    std::vector<RatPoly> hankel;
};

/// Inverts the parameterized first-kind array at matrix level (there is no
/// pair-level inverse for almost-Riordan arrays) and packages the moment
/// pipeline.  `count` is the number of moments extracted.
inline FirstKindMoments first_kind_moment_pipeline(int count, int order = kDefaultOrder) {
    if (2 * count - 2 > order) throw TruncationExceeded();
    AlmostRiordan1<RatPoly> ar = parameterized_T_array(order);
    LowerTriMatrix<RatPoly> inv = matrix_inverse(ar.to_matrix(count));

    std::vector<RatPoly> mu;
    mu.reserve(count);
    for (int i = 0; i < count; ++i) mu.push_back(inv.entry(i, 0));

    RatMatrix arr(count);
    for (int r = 0; r < count; ++r) {
        if (mu[r].degree() > r) throw Error("moment polynomial degree exceeds its row");
        for (int k = 0; k <= r; ++k) arr.set(r, k, mu[r].coeff(k));
    }

    Series<RatPoly> momgf = Series<RatPoly>::from_coeffs(mu, count - 1);
    JFraction<RatPoly> jf = series_to_jfraction(momgf, (count - 1) / 2);
    std::vector<RatPoly> h = hankel_transform(mu, (count - 1) / 2);
    return FirstKindMoments{std::move(mu), std::move(arr), std::move(jf), std::move(h)};
}

}  // namespace riocalc
