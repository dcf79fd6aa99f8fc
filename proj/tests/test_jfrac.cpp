#include <random>

#include "doctest.h"
#include "riocalc/jfrac.hpp"
#include "testutil.hpp"

using namespace riocalc;
using namespace riocalc::testutil;

namespace {
const int N = kDefaultOrder;
using JP = JFraction<Poly<Rational>>;
using PS = Series<RatPoly>;
}  // namespace

TEST_CASE("expansion of constant-coefficient fractions") {
    // all alpha = 2, beta = 1: the Catalan-square moment function
    JFraction<Rational> j1(Rational(1), {}, {}, JTail<Rational>{Rational(2), Rational(1)});
    RatSeries c = catalan_series<Rational>(N);
    CHECK(jfraction_to_series(j1, N) == c * c);

    // head 4/2, tail 3/2
    JFraction<Rational> j2(Rational(1), {Rational(4)}, {Rational(2)},
                           JTail<Rational>{Rational(3), Rational(2)});
    CHECK(series_prefix_eq(jfraction_to_series(j2, N), {1, 4, 18, 86, 426, 2162}));

    // all alpha = 0, beta = 1: aerated Catalan numbers c(x^2)
    JFraction<Rational> j3(Rational(1), {}, {}, JTail<Rational>{Rational(0), Rational(1)});
    RatSeries aer = jfraction_to_series(j3, N);
    CHECK(series_prefix_eq(aer, {1, 0, 1, 0, 2, 0, 5, 0, 14}));
    CHECK(aer == compose(c, shift_up(RatSeries::x(N), 1)));
}

TEST_CASE("stored zero betas are rejected") {
    CHECK_THROWS_AS(JFraction<Rational>(Rational(1), {Rational(1)}, {Rational(0)}), ZeroBeta);
    CHECK_THROWS_AS(JFraction<Rational>(Rational(1), {}, {},
                                        JTail<Rational>{Rational(1), Rational(0)}),
                    ZeroBeta);
}

TEST_CASE("peeling a series back to its continued fraction") {
    RatSeries geo = rational_gf<Rational>({1}, {1, -1}, N);
    CHECK_THROWS_AS(series_to_jfraction(geo, 2), HankelDegenerate);
    try {
        series_to_jfraction(geo, 2);
    } catch (const HankelDegenerate& e) {
        CHECK(e.level == 1);
    }

    RatSeries c = catalan_series<Rational>(N);
    JFraction<Rational> j = series_to_jfraction(c * c, 3);
    CHECK(j.mu0() == Rational(1));
    CHECK(j.alpha(0) == Rational(2));
    CHECK(j.alpha(1) == Rational(2));
    CHECK(j.beta(1) == Rational(1));
    CHECK(j.beta(2) == Rational(1));
}

TEST_CASE("peeling works over polynomial coefficients") {
    RatPoly u = RatPoly::indeterminate();
    PS num = PS::from_coeffs({RatPoly(1), u, u}, N);
    PS den = PS::from_coeffs({RatPoly(1), RatPoly(2), RatPoly(1)}, N);
    RiordanPair<RatPoly> fam(div(num, den), div(PS::x(N), den));
    // moment generating function of the (1+x)^2 family
    RiordanPair<RatPoly> inv = rinv(fam);
    JP j = series_to_jfraction(inv.g(), 4);
    CHECK(j.alpha(0) == RatPoly(2) - u);
    CHECK(j.beta(1) == RatPoly(1) - u);
    CHECK(j.alpha(1) == RatPoly(2));
    CHECK(j.beta(2) == RatPoly(1));
    CHECK(j.alpha(2) == RatPoly(2));
    CHECK(j.beta(3) == RatPoly(1));
}

TEST_CASE("property: peel then expand round-trips") {
    std::mt19937 rng(kSeed + 20);
    std::uniform_int_distribution<int> alpha(-3, 3), beta(1, 4), sign(0, 1);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> as, bs;
        int depth = 2 + t % 5;
        for (int i = 0; i < depth; ++i) {
            as.emplace_back(alpha(rng));
            bs.emplace_back(sign(rng) ? beta(rng) : -beta(rng));
        }
        JFraction<Rational> j(Rational(1 + (t % 3)), as, bs);
        RatSeries g = jfraction_to_series(j, 2 * depth);
        JFraction<Rational> back = series_to_jfraction(g, depth);
        CHECK(back.mu0() == j.mu0());
        for (int i = 0; i < depth; ++i) CHECK(back.alpha(i) == j.alpha(i));
        for (int i = 1; i <= depth; ++i) CHECK(back.beta(i) == j.beta(i));
        // and the recovered fraction reproduces the series
        CHECK(jfraction_to_series(back, 2 * depth) == g);
    }
}

TEST_CASE("Heilermann's formula") {
    JFraction<Rational> ones(Rational(1), {}, {}, JTail<Rational>{Rational(0), Rational(1)});
    for (int n = 0; n <= 8; ++n) CHECK(heilermann(ones, n) == Rational(1));

    // beta_1 = 1 - y, all later betas 1: h_n = (1-y)^n
    RatPoly u = RatPoly::indeterminate();
    JP jy(RatPoly(1), {-u}, {RatPoly(1) - u}, JTail<RatPoly>{RatPoly(0), RatPoly(1)});
    for (int n = 0; n <= 5; ++n) CHECK(heilermann(jy, n) == int_pow(RatPoly(1) - u, n));

    // head beta (2 - y) with constant tail beta b = 2:
    // h_n = (-1)^n (y - 2)^n 2^C(n,2)
    JP j7(RatPoly(1), {RatPoly(4) - u}, {RatPoly(2) - u},
          JTail<RatPoly>{RatPoly(3), RatPoly(2)});
    for (int n = 0; n <= 5; ++n) {
        RatPoly want = int_pow(-(u - RatPoly(2)), n);
        for (long k = 0; k < n * (n - 1) / 2; ++k) want = want * RatPoly(2);
        CHECK(heilermann(j7, n) == want);
    }

    // betas past the stored data are unavailable without a tail
    JFraction<Rational> fin(Rational(1), {Rational(1), Rational(1)}, {Rational(1)});
    CHECK(heilermann(fin, 1) == Rational(1));
    CHECK_THROWS_AS(heilermann(fin, 2), NotEnoughTerms);
}

TEST_CASE("Favard coefficient arrays") {
    RecurrencePair<Rational> r01({}, {}, JTail<Rational>{Rational(0), Rational(1)});
    RatMatrix m = favard_array(r01, 4);
    CHECK(m == matrix_from_rows({{1}, {0, 1}, {-1, 0, 1}, {0, -2, 0, 1}}));
    RatPair u_pair(rational_gf<Rational>({1}, {1, 0, 1}, N), rational_gf<Rational>({0, 1}, {1, 0, 1}, N));
    CHECK(favard_array(r01, 10) == u_pair.to_matrix(10));

    RecurrencePair<Rational> r21({}, {}, JTail<Rational>{Rational(2), Rational(1)});
    RatPair p21(rational_gf<Rational>({1}, {1, 2, 1}, N), rational_gf<Rational>({0, 1}, {1, 2, 1}, N));
    CHECK(favard_array(r21, 10) == p21.to_matrix(10));

    RecurrencePair<Rational> r32({}, {}, JTail<Rational>{Rational(3), Rational(2)});
    RatPair p32(rational_gf<Rational>({1}, {1, 3, 2}, N), rational_gf<Rational>({0, 1}, {1, 3, 2}, N));
    CHECK(favard_array(r32, 10) == p32.to_matrix(10));
}

TEST_CASE("duality between the recurrence and the moment matrix") {
    // data gamma=1, delta=2, then alpha=3, beta=1
    Rational gamma(1), delta(2), alpha(3), beta(1);
    RecurrencePair<Rational> rec({gamma}, {delta}, JTail<Rational>{alpha, beta});
    RatMatrix arr = favard_array(rec, 9);

    std::vector<Rational> num = {Rational(1), alpha - gamma, beta - delta};
    std::vector<Rational> den = {Rational(1), alpha, beta};
    RatPair closed(rational_gf<Rational>(num, den, N), rational_gf<Rational>({0, 1}, den, N));
    CHECK(arr == closed.to_matrix(9));

    // the inverse array's first column carries the moments
    RatMatrix inv = matrix_inverse(arr);
    JFraction<Rational> j(Rational(1), {gamma}, {delta}, JTail<Rational>{alpha, beta});
    RatSeries mom = jfraction_to_series(j, 8);
    for (int n = 0; n <= 8; ++n) CHECK(inv.entry(n, 0) == mom[n]);
}
