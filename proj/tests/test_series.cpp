#include <random>

#include "doctest.h"
#include "riocalc/series.hpp"
#include "testutil.hpp"

using namespace riocalc;
using namespace riocalc::testutil;

namespace {
const int N = kDefaultOrder;

RatSeries geom(int order) {  // 1/(1-x)
    return rational_gf<Rational>({1}, {1, -1}, order);
}
}  // namespace

TEST_CASE("ring operations") {
    RatSeries one_minus_x = RatSeries::from_coeffs({1, -1}, N);
    CHECK(one_minus_x * geom(N) == RatSeries::one(N));

    RatSeries alt = div(RatSeries::one(N), RatSeries::from_coeffs({1, 0, 1}, N));
    CHECK(series_prefix_eq(alt, {1, 0, -1, 0, 1, 0, -1, 0, 1}));

    RatSeries c = catalan_series<Rational>(N);
    CHECK(series_prefix_eq(c * c, {1, 2, 5, 14, 42, 132, 429}));

    CHECK_THROWS_AS(div(RatSeries::one(N), RatSeries::x(N)), NonUnitConstantTerm);
}

TEST_CASE("binary operations truncate to the smaller order") {
    RatSeries a = geom(10), b = geom(20);
    CHECK((a + b).order() == 10);
    CHECK((a * b).order() == 10);
    CHECK(div(b, a).order() == 10);
}

TEST_CASE("composition") {
    RatSeries c = catalan_series<Rational>(N);
    CHECK(compose(c, RatSeries::x(N)) == c);

    // 1/(1-x) at x/(1-x) collapses to (1-x)/(1-2x)
    RatSeries r = compose(geom(N), rational_gf<Rational>({0, 1}, {1, -1}, N));
    CHECK(r == rational_gf<Rational>({1, -1}, {1, -2}, N));
    CHECK(series_prefix_eq(r, {1, 1, 2, 4, 8, 16, 32, 64, 128}));

    // c(x(1-x)) = 1/(1-x)
    RatSeries inner = RatSeries::from_coeffs({0, 1, -1}, N);
    CHECK(compose(c, inner) == geom(N));

    CHECK_THROWS_AS(compose(c, RatSeries::one(N)), NonzeroConstantInner);
}

TEST_CASE("reversion") {
    CHECK(revert(RatSeries::x(N)) == RatSeries::x(N));

    RatSeries xc = shift_up(catalan_series<Rational>(N), 1);
    CHECK(revert(RatSeries::from_coeffs({0, 1, -1}, N)) == xc);

    RatSeries c = catalan_series<Rational>(N);
    RatSeries xc2 = shift_up(c * c, 1);
    CHECK(revert(rational_gf<Rational>({0, 1}, {1, 2, 1}, N)) == xc2);

    CHECK_THROWS_AS(revert(RatSeries::one(N)), NotRevertible);
    CHECK_THROWS_AS(revert(shift_up(RatSeries::x(N), 1)), NotRevertible);
}

TEST_CASE("reversion handles f'(0) = -1") {
    CHECK(revert(-RatSeries::x(N)) == -RatSeries::x(N));
    // -x c(x)^3 is its own compositional inverse
    RatSeries c = catalan_series<Rational>(N);
    RatSeries f = -shift_up(c * c * c, 1);
    CHECK(revert(f) == f);
}

TEST_CASE("square root") {
    CHECK(sqrt1(RatSeries::one(N)) == RatSeries::one(N));
    RatSeries onepx = RatSeries::from_coeffs({1, 1}, N);
    CHECK(sqrt1(onepx * onepx) == onepx);

    RatSeries c = catalan_series<Rational>(N);
    CHECK(series_prefix_eq(c, {1, 1, 2, 5, 14, 42}));

    CHECK_THROWS_AS(sqrt1(RatSeries::from_coeffs({2}, N)), BadConstantTerm);
}

TEST_CASE("algebraic equation g = 1 + x g^k") {
    CHECK(solve_gk<Rational>(1, N) == geom(N));
    CHECK(series_prefix_eq(solve_gk<Rational>(3, N), {1, 1, 3, 12, 55, 273, 1428}));
    CHECK(solve_gk<Rational>(2, N) == catalan_series<Rational>(N));

    for (int k = 1; k <= 5; ++k) {
        RatSeries g = solve_gk<Rational>(k, 16);
        RatSeries residue = g - RatSeries::one(16) - shift_up(series_pow(g, k), 1);
        CHECK(residue.is_zero_series());
    }
}

TEST_CASE("coefficient extraction respects the truncation order") {
    RatSeries x = RatSeries::x(N);
    CHECK(x.coeff(1) == Rational(1));
    CHECK(catalan_series<Rational>(N).coeff(6) == Rational(132));
    CHECK_THROWS_AS(x.coeff(N + 1), TruncationExceeded);
}

TEST_CASE("shift-down demands exact zeros") {
    RatSeries c = catalan_series<Rational>(N + 1);
    RatSeries s = RatSeries::one(N + 1) - sqrt1(RatSeries::from_coeffs({1, -4}, N + 1));
    CHECK(divide_coeff(shift_down(s, 1), Rational(2)) == c.truncated(N));
    CHECK_THROWS_AS(shift_down(RatSeries::one(N), 1), NonzeroLowOrderTerm);
    CHECK(div_shifted(shift_up(RatSeries::one(N), 2), shift_up(RatSeries::one(N), 2)) ==
          RatSeries::one(N - 2));
}

TEST_CASE("property: revert round trip") {
    std::mt19937 rng(kSeed + 2);
    for (int i = 0; i < 30; ++i) {
        RatSeries f = rand_revertible(rng, 14);
        RatSeries fbar = revert(f);
        CHECK(compose(f, fbar) == RatSeries::x(14));
        CHECK(compose(fbar, f) == RatSeries::x(14));
    }
}

TEST_CASE("property: sqrt1 squares back") {
    std::mt19937 rng(kSeed + 3);
    for (int i = 0; i < 30; ++i) {
        RatSeries a = rand_series(rng, 14, true);
        RatSeries s = sqrt1(a);
        CHECK(s * s == a);
        CHECK(s[0] == Rational(1));
    }
}

TEST_CASE("property: division inverts multiplication") {
    std::mt19937 rng(kSeed + 4);
    for (int i = 0; i < 30; ++i) {
        RatSeries a = rand_series(rng, 14, true);
        CHECK(a * div(RatSeries::one(14), a) == RatSeries::one(14));
    }
}

TEST_CASE("series over polynomial coefficients") {
    using PS = Series<RatPoly>;
    RatPoly u = RatPoly::indeterminate();
    // (1 + yx + yx^2) / (1 + x)
    PS num = PS::from_coeffs({RatPoly(1), u, u}, 12);
    PS den = PS::from_coeffs({RatPoly(1), RatPoly(1)}, 12);
    PS g = div(num, den);
    CHECK(g[0] == RatPoly(1));
    CHECK(g[1] == u - RatPoly(1));
    CHECK(g[2] == RatPoly(1));       // y - (y - 1) - ... alternates
    CHECK(g[3] == RatPoly(-1));
    CHECK(g * den == num.truncated(12));
}
