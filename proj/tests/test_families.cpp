#include <random>

#include "doctest.h"
#include "riocalc/families.hpp"
#include "riocalc/jfrac.hpp"
#include "riocalc/transforms.hpp"
#include "testutil.hpp"

using namespace riocalc;
using namespace riocalc::testutil;

namespace {
const int N = kDefaultOrder;

/// Independent oracle: the explicit alternating-sum formula for U_n.
Rational chebyshev_U_closed(int n, const Rational& x) {
    Rational acc(0);
    for (int k = 0; 2 * k <= n; ++k) {
        Rational term = binomial(n - k, k) * int_pow(Rational(2) * x, n - 2 * k);
        acc += (k % 2) ? -term : term;
    }
    return acc;
}

std::vector<Rational> row_poly_values(const RatMatrix& m, int row, const Rational& x) {
    Rational acc(0);
    for (int k = 0; k <= row; ++k) acc += m.entry(row, k) * int_pow(x, k);
    return {acc};
}
}  // namespace

TEST_CASE("Chebyshev U evaluation matches the closed sum") {
    CHECK(chebyshev_U_eval(2, Rational(1)) == Rational(3));
    for (int n = 0; n <= 8; ++n) {
        for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(-3, 2)}) {
            CHECK(chebyshev_U_eval(n, x) == chebyshev_U_closed(n, x));
        }
        CHECK(chebyshev_U_eval(n, Rational(1)) == Rational(n + 1));
    }
}

TEST_CASE("the scaled-U coefficient array") {
    RatMatrix m = gen_cheb_array(Rational(0), Rational(1), Rational(0), Rational(0), 7);
    RatMatrix want = matrix_from_rows({{1},
                                       {0, 1},
                                       {-1, 0, 1},
                                       {0, -2, 0, 1},
                                       {1, 0, -3, 0, 1},
                                       {0, 3, 0, -4, 0, 1},
                                       {-1, 0, 6, 0, -5, 0, 1}});
    CHECK(m == want);

    // row polynomials evaluate to U_n(x/2)
    for (int n = 0; n < 7; ++n)
        for (const Rational& x : {Rational(1), Rational(-2), Rational(1, 3)})
            CHECK(row_poly_values(m, n, x)[0] == chebyshev_U_eval(n, x / Rational(2)));
    CHECK(row_poly_values(m, 3, Rational(1))[0] == Rational(-1));  // U_3(1/2)
}

TEST_CASE("generalized Chebyshev arrays against the direct pair") {
    // r=2, s=1, lambda=mu=-1 reproduces ((1+x+x^2)/(1+x)^2, x/(1+x)^2)
    RatMatrix m = gen_cheb_array(Rational(2), Rational(1), Rational(-1), Rational(-1), 8);
    RatPair direct(rational_gf<Rational>({1, 1, 1}, {1, 2, 1}, N),
                   rational_gf<Rational>({0, 1}, {1, 2, 1}, N));
    CHECK(m == direct.to_matrix(8));
}

TEST_CASE("the U generating-function shift identity") {
    // [t^n] t^j / (1 - 2x t + t^2) = U_{n-j}(x) at rational points
    for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
        RatSeries den = RatSeries::from_coeffs({Rational(1), Rational(-2) * x, Rational(1)}, 10);
        RatSeries base = div(RatSeries::one(10), den);
        for (int j : {1, 2}) {
            RatSeries shifted = shift_up(base, j);
            for (int n = j; n <= 8; ++n) CHECK(shifted[n] == chebyshev_U_eval(n - j, x));
        }
    }
}

TEST_CASE("row polynomials of the second moment family shift the U values") {
    // P_n(x) = U_n((x-2)/2) + y U_{n-1}((x-2)/2) + y U_{n-2}((x-2)/2);
    // probe at x = 3, y = 1, where (x-2)/2 = 1/2
    auto fam = chebyshev_moment_family(2, N);
    LowerTriMatrix<RatPoly> m = fam.to_matrix(9);
    for (int n = 0; n <= 8; ++n) {
        RatPoly pn;  // P_n(3) as a polynomial in y
        for (int k = 0; k <= n; ++k) pn = pn + m.entry(n, k) * RatPoly(int_pow(Rational(3), k));
        Rational want = chebyshev_U_eval(n, Rational(1, 2));
        if (n >= 1) want += chebyshev_U_eval(n - 1, Rational(1, 2));
        if (n >= 2) want += chebyshev_U_eval(n - 2, Rational(1, 2));
        CHECK(pn.eval(Rational(1)) == want);
    }
}

TEST_CASE("generalized Chebyshev closed form at perfect squares") {
    // Q_n(x) = s^{n/2} U_n((x-r)/(2 sqrt s)) - lambda s^{(n-1)/2} U_{n-1}(...)
    //          - mu s^{(n-2)/2} U_{n-2}(...)
    for (long sq : {1L, 2L, 3L}) {
        Rational root(sq), s = root * root;
        Rational r(1), lambda(-2), mu(3);
        RatMatrix m = gen_cheb_array(r, s, lambda, mu, 9);
        for (int n = 0; n <= 8; ++n) {
            for (const Rational& x : {Rational(0), Rational(1, 2), Rational(2)}) {
                Rational w = (x - r) / (Rational(2) * root);
                Rational want = int_pow(root, n) * chebyshev_U_eval(n, w);
                if (n >= 1) want -= lambda * int_pow(root, n - 1) * chebyshev_U_eval(n - 1, w);
                if (n >= 2) want -= mu * int_pow(root, n - 2) * chebyshev_U_eval(n - 2, w);
                CHECK(row_poly_values(m, n, x)[0] == want);
            }
        }
    }
}

TEST_CASE("main-theorem families produce the Catalan involutions") {
    RatPair i1 = gk_involution(2, 1, N);
    RatPair i2 = gk_involution(2, 2, N);
    RatSeries c = catalan_series<Rational>(N);
    CHECK(i1.g() == c);
    CHECK(i1.f() == -shift_up(c * c * c, 1));
    CHECK(i2.g() == c * c);

    CHECK(moment_coefficient_array(chebyshev_moment_family(1, N), 16) == i1.to_matrix(16));
    CHECK(moment_coefficient_array(chebyshev_moment_family(2, N), 16) == i2.to_matrix(16));

    // bivariate identity: moment generating function = g^m / (1 + u x c^3)
    using PS = Series<RatPoly>;
    RatPoly u = RatPoly::indeterminate();
    for (int m = 1; m <= 2; ++m) {
        PS mom = rinv(chebyshev_moment_family(m, N)).g();
        PS clift(N);
        for (int i = 0; i <= N; ++i) clift.at(i) = RatPoly(c[i]);
        PS cc3 = clift;
        for (int t = 1; t < 3; ++t) cc3 = cc3 * clift;
        PS denom = PS::one(N) + scale(shift_up(cc3, 1), u);
        CHECK(mom == div(m == 1 ? clift : clift * clift, denom));
    }
}

TEST_CASE("necessity probe: the squared moment array over the scale parameter") {
    auto fam = scaled_chebyshev_moment_family(14);
    LowerTriMatrix<RatPoly> arr = moment_coefficient_array(fam, 6);
    LowerTriMatrix<RatPoly> sq = arr * arr;
    RatPoly s = RatPoly::indeterminate();

    CHECK(sq.entry(0, 0) == RatPoly(1));
    CHECK(sq.entry(1, 1) == RatPoly(1));
    CHECK(sq.entry(1, 0) == RatPoly(0));
    CHECK(sq.entry(2, 0) == RatPoly(2) - RatPoly(2) * s);
    CHECK(sq.entry(3, 0) == RatPoly(2) * (RatPoly(1) - s));
    CHECK(sq.entry(3, 1) == RatPoly(-2) * (s * s + s - RatPoly(2)));
    CHECK(sq.entry(4, 0) == RatPoly(5) * s * s - RatPoly(16) * s + RatPoly(11));
    CHECK(sq.entry(4, 1) == -(s * s * s) - RatPoly(2) * s * s - s + RatPoly(4));
    CHECK(sq.entry(4, 2) == RatPoly(-4) * s * s - RatPoly(2) * s + RatPoly(6));
    CHECK(sq.entry(5, 0) == RatPoly(8) * (s * s - RatPoly(4) * s + RatPoly(3)));
    CHECK(sq.entry(5, 1) == RatPoly(8) * s * s * s - RatPoly(14) * s * s - RatPoly(20) * s + RatPoly(26));
    CHECK(sq.entry(5, 2) == RatPoly(-2) * (s * s * s + RatPoly(2) * s * s - RatPoly(3)));
    CHECK(sq.entry(5, 3) == RatPoly(-6) * s * s - RatPoly(2) * s + RatPoly(8));
    // setting s = 1 recovers the identity block
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(sq.entry(i, j).eval(Rational(1)) == (i == j ? Rational(1) : Rational(0)));
}

TEST_CASE("the (a,b) closed-form involution") {
    RatPair r32 = general_moment_involution(Rational(3), Rational(2), N);
    RatMatrix want32 = matrix_from_rows({{1},
                                         {4, -1},
                                         {18, -9, 1},
                                         {86, -63, 14, -1},
                                         {426, -403, 133, -19, 1},
                                         {2162, -2469, 1070, -228, 24, -1},
                                         {11166, -14769, 7857, -2212, 348, -29, 1}});
    CHECK(r32.to_matrix(7) == want32);
    CHECK(involution_check(r32, 16).holds);

    RatPair r12 = general_moment_involution(Rational(1), Rational(2), N);
    CHECK(r12.g() == RatSeries::one(N));
    RatSeries s = sqrt1(RatSeries::from_coeffs({1, -2, -7}, N));
    RatSeries f12 = divide_coeff(s + RatSeries::from_coeffs({-1, -3}, N), Rational(4));
    CHECK(r12.f() == f12);
    RatMatrix want12 = matrix_from_rows({{1},
                                         {0, -1},
                                         {0, -1, 1},
                                         {0, -1, 2, -1},
                                         {0, -3, 3, -3, 1},
                                         {0, -7, 8, -6, 4, -1},
                                         {0, -21, 21, -16, 10, -5, 1}});
    CHECK(r12.to_matrix(7) == want12);

    // a=2, b=1 collapses to the squared-Catalan involution
    RatPair r21 = general_moment_involution(Rational(2), Rational(1), N);
    CHECK(r21.g() == gk_involution(2, 2, N).g());
    CHECK(r21.f() == gk_involution(2, 2, N).f());

    CHECK_THROWS_AS(general_moment_involution(Rational(1), Rational(0), N), DegenerateParameters);
}

TEST_CASE("dual route: closed form vs moment coefficient array") {
    const std::pair<long, long> cases[] = {{3, 2}, {1, 2}, {2, 1}, {2, 2}, {4, 3}};
    for (auto [a, b] : cases) {
        RatPair closed = general_moment_involution(Rational(a), Rational(b), N);
        RatMatrix arr = moment_coefficient_array(general_moment_family(Rational(a), Rational(b), N), 16);
        CHECK(arr == closed.to_matrix(16));
        CHECK(involution_check(closed, 16).holds);
    }
}

TEST_CASE("the (a,b) moment continued fraction and Hankel transform") {
    for (auto [a, b] : {std::pair<long, long>{3, 2}, std::pair<long, long>{1, 2}}) {
        auto fam = general_moment_family(Rational(a), Rational(b), N);
        Series<RatPoly> mom = rinv(fam).g();
        JFraction<RatPoly> j = series_to_jfraction(mom, 6);
        RatPoly u = RatPoly::indeterminate();
        CHECK(j.alpha(0) == RatPoly(2 * a - 2) - u);
        CHECK(j.beta(1) == RatPoly(a - 1) - u);
        for (int k = 1; k <= 4; ++k) {
            CHECK(j.alpha(k) == RatPoly(a));
            CHECK(j.beta(k + 1) == RatPoly(b));
        }
        for (int n = 0; n <= 5; ++n) {
            RatPoly want = int_pow(-(u - RatPoly(a - 1)), n);
            for (long t = 0; t < n * (n - 1) / 2; ++t) want = want * RatPoly(b);
            CHECK(heilermann(j, n) == want);
        }
    }
}

TEST_CASE("factorization theorem examples") {
    RatPair base(rational_gf<Rational>({1}, {1, 2, 1}, N), rational_gf<Rational>({0, 1}, {1, 2, 1}, N));
    RatPair inv = factorization_involution(base);
    RatMatrix want = matrix_from_rows({{1},
                                       {-4, -1},
                                       {16, 8, 1},
                                       {-68, -48, -12, -1},
                                       {304, 264, 96, 16, 1},
                                       {-1412, -1408, -652, -160, -20, -1},
                                       {6752, 7432, 4080, 1296, 240, 24, 1}});
    CHECK(inv.to_matrix(7) == want);
    CHECK(involution_check(inv, 16).holds);

    RatPair base2(rational_gf<Rational>({1, 1, 1}, {1, 2, 1}, N), rational_gf<Rational>({0, 1}, {1, 2, 1}, N));
    RatPair inv2 = factorization_involution(base2);
    RatMatrix want2 = matrix_from_rows({{1},
                                        {-2, -1},
                                        {6, 6, 1},
                                        {-16, -30, -10, -1},
                                        {42, 140, 70, 14, 1},
                                        {-110, -642, -424, -126, -18, -1}});
    CHECK(inv2.to_matrix(6) == want2);
    CHECK(involution_check(inv2, 16).holds);
}

TEST_CASE("property: factorization output is always an involution") {
    std::mt19937 rng(kSeed + 40);
    for (int t = 0; t < 10; ++t) {
        RatPair r = rand_pair(rng, 14);
        CHECK(involution_check(factorization_involution(r), 12).holds);
    }
}

TEST_CASE("the RNA involution") {
    RatPair rna = rna_involution(N);
    RatMatrix want = matrix_from_rows({{1},
                                       {1, -1},
                                       {1, -2, 1},
                                       {2, -3, 3, -1},
                                       {4, -6, 6, -4, 1},
                                       {8, -13, 13, -10, 5, -1},
                                       {17, -28, 30, -24, 15, -6, 1}});
    CHECK(rna.to_matrix(7) == want);
    CHECK(involution_check(rna, 16).holds);

    // same thing via the factorization route from (1/(1-x/2+x^2), .)
    std::vector<Rational> den = {Rational(1), Rational(-1, 2), Rational(1)};
    RatPair base(rational_gf<Rational>({Rational(1)}, den, N),
                 rational_gf<Rational>({Rational(0), Rational(1)}, den, N));
    RatPair byfact = factorization_involution(base);
    CHECK(byfact.g() == rna.g());
    CHECK(byfact.f() == rna.f());

    // the two factor matrices, with their rational entries
    RatMatrix left = base.to_matrix(6);
    CHECK(left.entry(1, 0) == Rational(1, 2));
    CHECK(left.entry(2, 0) == Rational(-3, 4));
    CHECK(left.entry(3, 0) == Rational(-7, 8));
    CHECK(left.entry(4, 0) == Rational(5, 16));
    CHECK(left.entry(5, 0) == Rational(33, 32));
    CHECK(left.entry(5, 1) == Rational(5, 16));
    CHECK(left.entry(5, 2) == Rational(-19, 4));

    RatPair conj(RatSeries::one(N), -RatSeries::x(N));
    RatPair right = rmul(conj, rinv(base));
    RatMatrix rm = right.to_matrix(6);
    CHECK(rm.entry(1, 0) == Rational(1, 2));
    CHECK(rm.entry(2, 0) == Rational(5, 4));
    CHECK(rm.entry(3, 0) == Rational(13, 8));
    CHECK(rm.entry(4, 0) == Rational(57, 16));
    CHECK(rm.entry(5, 0) == Rational(201, 32));
    CHECK(rm.entry(5, 1) == Rational(-165, 16));
    CHECK(rm.entry(5, 2) == Rational(35, 4));
    CHECK(left * rm == rna.to_matrix(6));
}

TEST_CASE("associated-subgroup involutions") {
    RatPair c21 = associated_involution(Rational(2), Rational(1), N);
    CHECK(series_prefix_eq(c21.f(), {0, -1, 4, -16, 68, -304, 1412}));
    CHECK(involution_check(c21, 16).holds);

    auto rows = row_sums(c21.to_matrix(7));
    CHECK(prefix_eq(rows, {1, -1, 5, -25, 129, -681, 3653}));

    RatPair triv = associated_involution(Rational(0), Rational(0), N);
    CHECK(triv.f() == -RatSeries::x(N));

    // f-part agrees with the factorization involution of (1/(1+ax+bx^2), .)
    for (auto [a, b] : {std::pair<long, long>{2, 1}, {1, 2}, {3, 2}}) {
        std::vector<Rational> den = {Rational(1), Rational(a), Rational(b)};
        RatPair base(rational_gf<Rational>({Rational(1)}, den, N),
                     rational_gf<Rational>({Rational(0), Rational(1)}, den, N));
        RatPair fact = factorization_involution(base);
        RatPair assoc = associated_involution(Rational(a), Rational(b), N);
        CHECK(fact.f() == assoc.f());
        CHECK(involution_check(assoc, 16).holds);
    }
}

TEST_CASE("k-theorem involutions") {
    RatPair k2 = gk_involution(2, 1, N);
    RatSeries c = catalan_series<Rational>(N);
    CHECK(k2.g() == c);
    CHECK(k2.f() == -shift_up(series_pow(c, 3), 1));

    RatPair k33 = gk_involution(3, 3, N);
    RatMatrix want = matrix_from_rows({{1},
                                       {3, -1},
                                       {12, -8, 1},
                                       {55, -52, 13, -1},
                                       {273, -320, 117, -18, 1},
                                       {1428, -1938, 910, -207, 23, -1}});
    CHECK(k33.to_matrix(6) == want);

    RatPair k30 = gk_involution(3, 0, N);
    RatSeries t = ternary_series<Rational>(N);
    CHECK(k30.g() == RatSeries::one(N));
    CHECK(k30.f() == -shift_up(series_pow(t, 5), 1));

    for (int k = 2; k <= 4; ++k)
        for (int m = 0; m <= k; ++m) {
            RatPair invo = gk_involution(k, m, N);
            CHECK(involution_check(invo, 16).holds);
            CHECK(moment_coefficient_array(gk_moment_family(k, m, N), 16) == invo.to_matrix(16));
        }
}

TEST_CASE("ternary moment polynomials and their Hankel transform") {
    auto fam = gk_moment_family(3, 3, N);
    auto mu = moment_polys(fam, 19);
    RatPoly u = RatPoly::indeterminate();

    // values at u = 0 are the shifted ternary numbers; at u = 1 the
    // INVERT(1) transform of the 4231/42513-avoiders
    std::vector<long> at0 = {1, 3, 12, 55, 273, 1428};
    std::vector<long> at1 = {1, 2, 5, 15, 53, 215};
    for (size_t i = 0; i < at0.size(); ++i) {
        CHECK(mu[i].eval(Rational(0)) == Rational(at0[i]));
        CHECK(mu[i].eval(Rational(1)) == Rational(at1[i]));
    }

    auto h = hankel_transform(mu, 4);
    CHECK(h[0] == RatPoly(1));
    CHECK(h[1] == RatPoly(std::vector<Rational>{3, -2}));
    CHECK(h[2] == RatPoly(std::vector<Rational>{26, -34, 11}));
    CHECK(h[3] == RatPoly(std::vector<Rational>{646, -1254, 804, -170}));
    CHECK(h[4] == RatPoly(std::vector<Rational>{45885, -117990, 112860, -47538, 7429}));

    std::vector<long> lead = {1, 2, 11, 170, 7429};
    std::vector<long> y1 = {1, 1, 3, 26, 646};
    std::vector<long> y0 = {1, 3, 26, 646, 45885};
    for (int n = 0; n <= 4; ++n) {
        CHECK(abs_value(h[n].coeff(n)) == Rational(lead[n]));
        CHECK(h[n].eval(Rational(1)) == Rational(y1[n]));
        CHECK(h[n].eval(Rational(0)) == Rational(y0[n]));
    }
}

TEST_CASE("row-sum sequences of the (a,b) involutions") {
    RatPair r32 = general_moment_involution(Rational(3), Rational(2), N);
    RatMatrix m32 = r32.to_matrix(16);
    CHECK(prefix_eq(row_sums(m32), {1, 3, 10, 36, 138, 558, 2362, 10398, 47326}));
    CHECK(prefix_eq(abs_row_sums(m32), {1, 5, 28, 164, 982, 5954, 36382, 223466, 1377538}));

    RatPair r12 = general_moment_involution(Rational(1), Rational(2), N);
    RatMatrix m12 = r12.to_matrix(16);
    auto rs = row_sums(m12);
    auto ars = abs_row_sums(m12);
    CHECK(prefix_eq(rs, {1, -1, 0, 0, -2, -2, -10, -26, -86}));
    CHECK(prefix_eq(ars, {1, 1, 2, 4, 10, 26, 74, 218, 670}));

    auto hrs = hankel_transform(rs, 6);
    auto hars = hankel_transform(ars, 6);
    for (int n = 0; n <= 6; ++n) {
        Rational p2 = int_pow(Rational(2), n * (n - 1) / 2);
        CHECK(hrs[n] == ((n % 2) ? -p2 : p2));
        CHECK(hars[n] == p2);
    }

    // their continued fractions, peeled back from the sequences
    JFraction<Rational> j1 = series_to_jfraction(RatSeries::from_coeffs(row_sums(m32), 15), 4);
    CHECK(j1.alpha(0) == Rational(3));
    CHECK(j1.beta(1) == Rational(1));
    CHECK(j1.alpha(1) == Rational(3));
    CHECK(j1.beta(2) == Rational(2));
    JFraction<Rational> j2 = series_to_jfraction(RatSeries::from_coeffs(abs_row_sums(m32), 15), 4);
    CHECK(j2.alpha(0) == Rational(5));
    CHECK(j2.beta(1) == Rational(3));
    JFraction<Rational> j3 = series_to_jfraction(RatSeries::from_coeffs(rs, 15), 4);
    CHECK(j3.alpha(0) == Rational(-1));
    CHECK(j3.beta(1) == Rational(-1));
    CHECK(j3.alpha(1) == Rational(1));
    CHECK(j3.beta(2) == Rational(2));
    JFraction<Rational> j4 = series_to_jfraction(RatSeries::from_coeffs(ars, 15), 4);
    CHECK(j4.alpha(0) == Rational(1));
    CHECK(j4.beta(1) == Rational(1));
    CHECK(j4.alpha(1) == Rational(1));
    CHECK(j4.beta(2) == Rational(2));
}

TEST_CASE("the corollary row-sum Hankel identity") {
    RatPair c21 = associated_involution(Rational(2), Rational(1), N);
    auto rows = row_sums(c21.to_matrix(16));
    auto h = hankel_transform(rows, 6);
    RatSeries ref = rational_gf<Rational>({1}, {1, -2, 2}, 8);
    for (int n = 0; n <= 6; ++n)
        CHECK(h[n] == int_pow(Rational(2), (n + 1) * n / 2) * ref[n]);
}
