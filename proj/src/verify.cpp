#include "riocalc/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "riocalc/almost.hpp"
#include "riocalc/bfile.hpp"
#include "riocalc/families.hpp"
#include "riocalc/jfrac.hpp"
#include "riocalc/transforms.hpp"

#include "json.hpp"

namespace riocalc {

namespace {

constexpr int N = kDefaultOrder;
constexpr unsigned kSeed = 74111210;  // pinned: all randomized checks reproduce

using PS = Series<RatPoly>;

struct Ctx {
    std::string fixture_dir;
    std::vector<CheckResult> out;

    void check(const std::string& id, int criterion, bool pass, const std::string& detail = "") {
        out.push_back({id, criterion, pass, pass ? "" : detail});
    }

    /// Runs `fn` and converts an escaped exception into a failed check.
    template <typename F>
    void guarded(const std::string& id, int criterion, F&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(id, criterion, false, std::string("exception: ") + e.what());
        }
    }
};

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), Rational(rows[i][j]));
    return m;
}

std::string mismatch(const RatMatrix& got, const RatMatrix& want) {
    for (int i = 0; i < want.size(); ++i)
        for (int j = 0; j <= i; ++j)
            if (!(got.entry(i, j) == want.entry(i, j)))
                return "(" + std::to_string(i) + "," + std::to_string(j) + ") got " +
                       got.entry(i, j).str() + " expected " + want.entry(i, j).str();
    return "";
}

void golden(Ctx& c, const std::string& id, const RatMatrix& got,
            const std::vector<std::vector<long>>& rows) {
    RatMatrix want = from_rows(rows);
    c.check(id, 1, got == want, mismatch(got, want));
}

bool seq_match(const std::vector<Rational>& got, const std::vector<long>& want, std::string* why) {
    if (got.size() < want.size()) {
        *why = "too few terms";
        return false;
    }
    for (size_t i = 0; i < want.size(); ++i)
        if (!(got[i] == Rational(want[i]))) {
            *why = "term " + std::to_string(i) + " got " + got[i].str() + " expected " +
                   std::to_string(want[i]);
            return false;
        }
    return true;
}

void seq_check(Ctx& c, const std::string& id, int crit, const std::vector<Rational>& got,
               const std::vector<long>& want) {
    std::string why;
    bool ok = seq_match(got, want, &why);
    c.check(id, crit, ok, why);
}

RatPair pascal_pair(int n = N) {
    return RatPair(rational_gf<Rational>({1}, {1, -1}, n), rational_gf<Rational>({0, 1}, {1, -1}, n));
}
RatPair signed_pascal(int n = N) {
    return RatPair(rational_gf<Rational>({1}, {1, -1}, n), rational_gf<Rational>({0, -1}, {1, -1}, n));
}
RatPair simple_pair(std::vector<long> den, int n = N) {
    std::vector<Rational> d;
    for (long v : den) d.emplace_back(v);
    return RatPair(rational_gf<Rational>({Rational(1)}, d, n),
                   rational_gf<Rational>({Rational(0), Rational(1)}, d, n));
}

RatPair rand_pair(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> d(-3, 3);
    RatSeries g(order), f(order);
    g.at(0) = Rational(1);
    for (int i = 1; i <= order; ++i) g.at(i) = Rational(d(rng));
    f.at(1) = Rational(1);
    for (int i = 2; i <= order; ++i) f.at(i) = Rational(d(rng));
    return RatPair(g, f);
}

/// Independent determinant for the acceptance cross-check: permutation
/// expansion, no elimination at all.
template <Coefficient C>
C det_perm(const std::vector<std::vector<C>>& m) {
    size_t n = m.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    C acc(0);
    do {
        size_t inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        C term(1);
        for (size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
        acc = inv % 2 ? acc - term : acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// ---------------------------------------------------------------- criterion 1

void golden_matrices(Ctx& c) {
    RatSeries cat = catalan_series<Rational>(N);

    golden(c, "c01.golden.a106566", RatPair(RatSeries::one(N), shift_up(cat, 1)).to_matrix(7),
           {{1},
            {0, 1},
            {0, 1, 1},
            {0, 2, 2, 1},
            {0, 5, 5, 3, 1},
            {0, 14, 14, 9, 4, 1},
            {0, 42, 42, 28, 14, 5, 1}});

    golden(c, "c01.golden.catalan-involution-m1", gk_involution(2, 1, N).to_matrix(7),
           {{1},
            {1, -1},
            {2, -4, 1},
            {5, -14, 7, -1},
            {14, -48, 35, -10, 1},
            {42, -165, 154, -65, 13, -1},
            {132, -572, 637, -350, 104, -16, 1}});

    golden(c, "c01.golden.catalan-involution-m2", gk_involution(2, 2, N).to_matrix(7),
           {{1},
            {2, -1},
            {5, -5, 1},
            {14, -20, 8, -1},
            {42, -75, 44, -11, 1},
            {132, -275, 208, -77, 14, -1},
            {429, -1001, 910, -440, 119, -17, 1}});

    golden(c, "c01.golden.signed-pascal", signed_pascal().to_matrix(7),
           {{1},
            {1, -1},
            {1, -2, 1},
            {1, -3, 3, -1},
            {1, -4, 6, -4, 1},
            {1, -5, 10, -10, 5, -1},
            {1, -6, 15, -20, 15, -6, 1}});

    golden(c, "c01.golden.chebyshev-u-array",
           gen_cheb_array(Rational(0), Rational(1), Rational(0), Rational(0), 7),
           {{1},
            {0, 1},
            {-1, 0, 1},
            {0, -2, 0, 1},
            {1, 0, -3, 0, 1},
            {0, 3, 0, -4, 0, 1},
            {-1, 0, 6, 0, -5, 0, 1}});

    // Hankel coefficient array of the first-family moments, and its reversal
    c.guarded("c01.golden.hankel-coefficient-array", 1, [&] {
        auto mu = moment_polys(chebyshev_moment_family(1, N), 12);
        auto h = hankel_transform(mu, 5);
        RatMatrix arr(6);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) arr.set(n, k, h[n].coeff(k));
        RatMatrix want = from_rows({{1},
                                    {1, -2},
                                    {1, -4, 3},
                                    {1, -6, 10, -4},
                                    {1, -8, 21, -20, 5},
                                    {1, -10, 36, -56, 35, -6}});
        c.check("c01.golden.hankel-coefficient-array", 1, arr == want, mismatch(arr, want));

        RatMatrix rev = arr.reversed_rows();
        RatMatrix square = simple_pair({1, 2, 1}).to_matrix(6);
        c.check("c01.golden.hankel-coefficient-array-reversal", 1, rev == square,
                mismatch(rev, square));
    });

    golden(c, "c01.golden.general-3-2",
           general_moment_involution(Rational(3), Rational(2), N).to_matrix(7),
           {{1},
            {4, -1},
            {18, -9, 1},
            {86, -63, 14, -1},
            {426, -403, 133, -19, 1},
            {2162, -2469, 1070, -228, 24, -1},
            {11166, -14769, 7857, -2212, 348, -29, 1}});

    golden(c, "c01.golden.general-1-2",
           general_moment_involution(Rational(1), Rational(2), N).to_matrix(7),
           {{1},
            {0, -1},
            {0, -1, 1},
            {0, -1, 2, -1},
            {0, -3, 3, -3, 1},
            {0, -7, 8, -6, 4, -1},
            {0, -21, 21, -16, 10, -5, 1}});

    golden(c, "c01.golden.inverse-square-array", simple_pair({1, 2, 1}).to_matrix(7),
           {{1},
            {-2, 1},
            {3, -4, 1},
            {-4, 10, -6, 1},
            {5, -20, 21, -8, 1},
            {-6, 35, -56, 36, -10, 1},
            {7, -56, 126, -120, 55, -12, 1}});

    golden(c, "c01.golden.squared-catalan-bell", rinv(simple_pair({1, 2, 1})).to_matrix(7),
           {{1},
            {2, 1},
            {5, 4, 1},
            {14, 14, 6, 1},
            {42, 48, 27, 8, 1},
            {132, 165, 110, 44, 10, 1},
            {429, 572, 429, 208, 65, 12, 1}});

    c.guarded("c01.golden.production-tridiagonal", 1, [&] {
        auto p = production_matrix(rinv(simple_pair({1, 2, 1})), 7);
        bool ok = true;
        std::string why;
        for (int i = 0; i < 7 && ok; ++i)
            for (int j = 0; j < 7; ++j) {
                Rational want(0);
                if (i == j) want = Rational(2);
                if (j == i + 1 || j + 1 == i) want = Rational(1);
                if (!(p.entry(i, j) == want)) {
                    ok = false;
                    why = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        c.check("c01.golden.production-tridiagonal", 1, ok, why);
    });

    c.guarded("c01.golden.production-four-diagonal", 1, [&] {
        auto p = production_matrix(rinv(simple_pair({1, 3, 3, 1})), 7);
        std::vector<std::vector<long>> want = {
            {3, 1, 0, 0, 0, 0, 0}, {3, 3, 1, 0, 0, 0, 0}, {1, 3, 3, 1, 0, 0, 0},
            {0, 1, 3, 3, 1, 0, 0}, {0, 0, 1, 3, 3, 1, 0}, {0, 0, 0, 1, 3, 3, 1},
            {0, 0, 0, 0, 1, 3, 3}};
        bool ok = true;
        std::string why;
        for (int i = 0; i < 7 && ok; ++i)
            for (int j = 0; j < 7; ++j)
                if (!(p.entry(i, j) == Rational(want[i][j]))) {
                    ok = false;
                    why = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        c.check("c01.golden.production-four-diagonal", 1, ok, why);
    });

    golden(c, "c01.golden.factorization-square",
           factorization_involution(simple_pair({1, 2, 1})).to_matrix(7),
           {{1},
            {-4, -1},
            {16, 8, 1},
            {-68, -48, -12, -1},
            {304, 264, 96, 16, 1},
            {-1412, -1408, -652, -160, -20, -1},
            {6752, 7432, 4080, 1296, 240, 24, 1}});

    RatPair hexbase(rational_gf<Rational>({1, 1, 1}, {1, 2, 1}, N),
                    rational_gf<Rational>({0, 1}, {1, 2, 1}, N));
    golden(c, "c01.golden.factorization-hex", factorization_involution(hexbase).to_matrix(6),
           {{1},
            {-2, -1},
            {6, 6, 1},
            {-16, -30, -10, -1},
            {42, 140, 70, 14, 1},
            {-110, -642, -424, -126, -18, -1}});

    golden(c, "c01.golden.factorization-hex-left", hexbase.to_matrix(6),
           {{1},
            {-1, 1},
            {2, -3, 1},
            {-3, 7, -5, 1},
            {4, -14, 16, -7, 1},
            {-5, 25, -41, 29, -9, 1}});
    RatPair conj(RatSeries::one(N), -RatSeries::x(N));
    golden(c, "c01.golden.factorization-hex-right", rmul(conj, rinv(hexbase)).to_matrix(6),
           {{1},
            {-1, -1},
            {1, 3, 1},
            {-1, -8, -5, -1},
            {1, 22, 19, 7, 1},
            {-1, -64, -67, -34, -9, -1}});

    golden(c, "c01.golden.corollary-2-1",
           associated_involution(Rational(2), Rational(1), N).to_matrix(7),
           {{1},
            {0, -1},
            {0, 4, 1},
            {0, -16, -8, -1},
            {0, 68, 48, 12, 1},
            {0, -304, -264, -96, -16, -1},
            {0, 1412, 1408, 652, 160, 20, 1}});

    golden(c, "c01.golden.rna", rna_involution(N).to_matrix(7),
           {{1},
            {1, -1},
            {1, -2, 1},
            {2, -3, 3, -1},
            {4, -6, 6, -4, 1},
            {8, -13, 13, -10, 5, -1},
            {17, -28, 30, -24, 15, -6, 1}});

    // the two factor matrices of the RNA product, rational entries and all
    c.guarded("c01.golden.rna-factors", 1, [&] {
        std::vector<Rational> den = {Rational(1), Rational(-1, 2), Rational(1)};
        RatPair base(rational_gf<Rational>({Rational(1)}, den, N),
                     rational_gf<Rational>({Rational(0), Rational(1)}, den, N));
        RatMatrix left = base.to_matrix(6);
        RatMatrix right = rmul(conj, rinv(base)).to_matrix(6);
        auto q = [](long n, long d) { return Rational(n, d); };
        std::vector<std::vector<Rational>> lw = {
            {q(1, 1)},
            {q(1, 2), q(1, 1)},
            {q(-3, 4), q(1, 1), q(1, 1)},
            {q(-7, 8), q(-5, 4), q(3, 2), q(1, 1)},
            {q(5, 16), q(-5, 2), q(-3, 2), q(2, 1), q(1, 1)},
            {q(33, 32), q(5, 16), q(-19, 4), q(-3, 2), q(5, 2), q(1, 1)}};
        std::vector<std::vector<Rational>> rw = {
            {q(1, 1)},
            {q(1, 2), q(-1, 1)},
            {q(5, 4), q(-1, 1), q(1, 1)},
            {q(13, 8), q(-11, 4), q(3, 2), q(-1, 1)},
            {q(57, 16), q(-9, 2), q(9, 2), q(-2, 1), q(1, 1)},
            {q(201, 32), q(-165, 16), q(35, 4), q(-13, 2), q(5, 2), q(-1, 1)}};
        bool ok = true;
        std::string why;
        for (int i = 0; i < 6 && ok; ++i)
            for (int j = 0; j <= i; ++j) {
                if (!(left.entry(i, j) == lw[i][j]) || !(right.entry(i, j) == rw[i][j])) {
                    ok = false;
                    why = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        RatMatrix prod = left * right;
        RatMatrix rna6 = rna_involution(N).to_matrix(6);
        if (ok && !(prod == rna6)) {
            ok = false;
            why = "product differs from the RNA matrix";
        }
        c.check("c01.golden.rna-factors", 1, ok, why);
    });

    golden(c, "c01.golden.ternary-involution", gk_involution(3, 3, N).to_matrix(6),
           {{1},
            {3, -1},
            {12, -8, 1},
            {55, -52, 13, -1},
            {273, -320, 117, -18, 1},
            {1428, -1938, 910, -207, 23, -1}});

    // the parameterized source array behind it: displayed moment polynomials
    // and the Hankel coefficient array
    c.guarded("c01.golden.ternary-moments", 1, [&] {
        auto mu = moment_polys(gk_moment_family(3, 3, N), 6);
        std::vector<RatPoly> want = {
            RatPoly(1),
            RatPoly(std::vector<Rational>{3, -1}),
            RatPoly(std::vector<Rational>{12, -8, 1}),
            RatPoly(std::vector<Rational>{55, -52, 13, -1}),
            RatPoly(std::vector<Rational>{273, -320, 117, -18, 1}),
            RatPoly(std::vector<Rational>{1428, -1938, 910, -207, 23, -1})};
        bool ok = true;
        std::string why;
        for (size_t i = 0; i < want.size(); ++i)
            if (!(mu[i] == want[i])) {
                ok = false;
                why = "mu_" + std::to_string(i);
                break;
            }
        c.check("c01.golden.ternary-moments", 1, ok, why);
    });

    c.guarded("c01.golden.ternary-hankel-array", 1, [&] {
        auto mu = moment_polys(gk_moment_family(3, 3, 28), 12);
        auto h = hankel_transform(mu, 5);
        std::vector<std::vector<long>> want = {
            {1},
            {3, -2},
            {26, -34, 11},
            {646, -1254, 804, -170},
            {45885, -117990, 112860, -47538, 7429},
            {9304650, -29774880, 37838910, -23849850, 7447515, -920460}};
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 5; ++n)
            for (size_t k = 0; k < want[n].size(); ++k)
                if (!(h[n].coeff(static_cast<int>(k)) == Rational(want[n][k]))) {
                    ok = false;
                    why = "h_" + std::to_string(n);
                    break;
                }
        c.check("c01.golden.ternary-hankel-array", 1, ok, why);
    });

    golden(c, "c01.golden.chebyshev-t-array", chebyshev_T_array(N).to_matrix(7),
           {{1},
            {0, 1},
            {-1, 0, 2},
            {0, -3, 0, 4},
            {1, 0, -8, 0, 8},
            {0, 5, 0, -20, 0, 16},
            {-1, 0, 18, 0, -48, 0, 32}});

    c.guarded("c01.golden.parameterized-t-array", 1, [&] {
        auto m = parameterized_T_array(N).to_matrix(7);
        RatPoly u = RatPoly::indeterminate();
        auto P = [&](std::vector<Rational> v) { return RatPoly(std::move(v)); };
        std::vector<std::vector<RatPoly>> want = {
            {P({1})},
            {u, P({1})},
            {u - P({1}), u, P({1})},
            {-u, u - P({2}), u, P({1})},
            {P({1}) - u, P({0, -2}), u - P({3}), u, P({1})},
            {u, P({3, -2}), P({0, -3}), u - P({4}), u, P({1})},
            {u - P({1}), P({0, 3}), P({6, -3}), P({0, -4}), u - P({5}), u, P({1})}};
        bool ok = true;
        std::string why;
        for (int i = 0; i < 7 && ok; ++i)
            for (int j = 0; j <= i; ++j)
                if (!(m.entry(i, j) == want[i][j])) {
                    ok = false;
                    why = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        c.check("c01.golden.parameterized-t-array", 1, ok, why);
    });

    c.guarded("c01.golden.parameterized-t-inverse", 1, [&] {
        auto inv = matrix_inverse(parameterized_T_array(N).to_matrix(5));
        RatPoly u = RatPoly::indeterminate();
        auto P = [&](std::vector<Rational> v) { return RatPoly(std::move(v)); };
        std::vector<std::vector<RatPoly>> want = {
            {P({1})},
            {-u, P({1})},
            {u * u - u + P({1}), -u, P({1})},
            {-u * (u * u - P({2}) * u + P({2})), u * u - u + P({2}), -u, P({1})},
            {P({2, -3, 4, -3, 1}), -u * (u * u - P({2}) * u + P({3})), u * u - u + P({3}), -u,
             P({1})}};
        bool ok = true;
        std::string why;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j <= i; ++j)
                if (!(inv.entry(i, j) == want[i][j])) {
                    ok = false;
                    why = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        c.check("c01.golden.parameterized-t-inverse", 1, ok, why);
    });

    c.guarded("c01.golden.first-kind-coefficient-array", 1, [&] {
        RatSeries cx2 = compose(cat, shift_up(RatSeries::x(N), 1));
        RatPair pair(cx2, RatSeries::one(N) - RatSeries::from_coeffs({1, 1}, N) * cx2);
        RatMatrix got = pair.to_matrix(8);
        RatMatrix want = from_rows({{1},
                                    {0, -1},
                                    {1, -1, 1},
                                    {0, -2, 2, -1},
                                    {2, -3, 4, -3, 1},
                                    {0, -5, 8, -7, 4, -1},
                                    {5, -9, 14, -16, 11, -5, 1},
                                    {0, -14, 28, -32, 28, -16, 6, -1}});
        c.check("c01.golden.first-kind-coefficient-array", 1, got == want, mismatch(got, want));

        // pipeline route: inverted parameterized array gives the same thing
        FirstKindMoments fk = first_kind_moment_pipeline(8, N);
        c.check("c01.golden.first-kind-pipeline-array", 1, fk.coeff_array == want,
                mismatch(fk.coeff_array, want));
    });
}

// ---------------------------------------------------------------- criteria 2+3

void involution_suite(Ctx& c) {
    std::vector<std::pair<std::string, RatPair>> named;
    named.emplace_back("negation", RatPair(RatSeries::one(N), -RatSeries::x(N)));
    named.emplace_back("signed-pascal", signed_pascal());
    named.emplace_back("catalan-m1", gk_involution(2, 1, N));
    named.emplace_back("catalan-m2", gk_involution(2, 2, N));
    for (auto [a, b] : {std::pair<long, long>{3, 2}, {1, 2}, {2, 1}, {2, 2}, {4, 3}})
        named.emplace_back("general-" + std::to_string(a) + "-" + std::to_string(b),
                           general_moment_involution(Rational(a), Rational(b), N));
    for (auto [a, b] : {std::pair<long, long>{2, 1}, {1, 2}, {3, 2}})
        named.emplace_back("corollary-" + std::to_string(a) + "-" + std::to_string(b),
                           associated_involution(Rational(a), Rational(b), N));
    named.emplace_back("rna", rna_involution(N));
    for (int k = 2; k <= 4; ++k)
        for (int m = 0; m <= k; ++m)
            named.emplace_back("k" + std::to_string(k) + "-m" + std::to_string(m),
                               gk_involution(k, m, N));

    for (auto& [name, pair] : named) {
        c.guarded("c02.involution." + name, 2, [&] {
            auto rep = involution_check(pair, 16);
            std::string why;
            if (!rep.holds && rep.witness)
                why = "witness (" + std::to_string(rep.witness->row) + "," +
                      std::to_string(rep.witness->col) + ") = " + rep.witness->got.str();
            c.check("c02.involution." + name, 2, rep.holds, why);
        });
        c.guarded("c03.power." + name, 3, [&] {
            bool all = true;
            std::string why;
            for (long m : {-2, -1, 0, 1, 2, 3}) {
                RatPair powd(series_pow(pair.g(), m), pair.f());
                if (!involution_check(powd, 16).holds) {
                    all = false;
                    why = "fails at exponent " + std::to_string(m);
                    break;
                }
            }
            c.check("c03.power." + name, 3, all, why);
        });
    }

    c.guarded("c02.involution.factorization-random", 2, [&] {
        std::mt19937 rng(kSeed);
        bool all = true;
        std::string why;
        for (int t = 0; t < 10 && all; ++t) {
            RatPair r = factorization_involution(rand_pair(rng, 16));
            if (!involution_check(r, 16).holds) {
                all = false;
                why = "random pair " + std::to_string(t);
            }
            for (long m : {-2, -1, 0, 1, 2, 3}) {
                RatPair powd(series_pow(r.g(), m), r.f());
                if (!involution_check(powd, 16).holds) {
                    all = false;
                    why = "power " + std::to_string(m) + " of random pair " + std::to_string(t);
                    break;
                }
            }
        }
        c.check("c02.involution.factorization-random", 2, all, why);
    });
}

// ---------------------------------------------------------------- criterion 4

void hankel_numbers(Ctx& c) {
    c.guarded("c04.hankel.catalan", 4, [&] {
        RatSeries cat = catalan_series<Rational>(16);
        std::vector<Rational> terms(cat.coeffs().begin(), cat.coeffs().end());
        auto h = hankel_transform(terms, 6);
        std::vector<Rational> shifted(terms.begin() + 1, terms.end());
        auto hs = hankel_transform(shifted, 6);
        bool ok = true;
        for (int n = 0; n <= 6; ++n)
            ok = ok && h[n] == Rational(1) && hs[n] == Rational(1);
        c.check("c04.hankel.catalan", 4, ok);
    });

    c.guarded("c04.hankel.diagonal-sums", 4, [&] {
        RatSeries cat = catalan_series<Rational>(30);
        RatSeries xc3 = shift_up(cat * cat * cat, 1);
        auto d1 = diagonal_sums(RatPair(cat, xc3).to_matrix(30));
        auto d2 = diagonal_sums(RatPair(cat * cat, xc3).to_matrix(30));
        auto h1 = hankel_transform(d1, 6);
        std::vector<Rational> d1s(d1.begin() + 1, d1.end());
        auto h1s = hankel_transform(d1s, 6);
        auto h2 = hankel_transform(d2, 6);
        std::vector<long> fib = {0, 1};
        while (fib.size() < 16) fib.push_back(fib.back() + fib[fib.size() - 2]);
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 6 && ok; ++n) {
            Rational p2 = int_pow(Rational(2), n);
            if (!(h1[n] == p2)) why = "h1";
            if (!(h1s[n] == p2 * Rational(1 - n))) why = "h1 shifted";
            if (!(h2[n] == Rational(fib[2 * n + 1]))) why = "h2";
            ok = why.empty();
        }
        c.check("c04.hankel.diagonal-sums", 4, ok, why);
    });

    c.guarded("c04.hankel.ternary", 4, [&] {
        RatSeries t = ternary_series<Rational>(10);
        std::vector<Rational> terms(t.coeffs().begin(), t.coeffs().end());
        seq_check(c, "c04.hankel.ternary", 4, hankel_transform(terms, 4), {1, 2, 11, 170, 7429});
    });

    c.guarded("c04.hankel.row-sums", 4, [&] {
        RatMatrix m12 = general_moment_involution(Rational(1), Rational(2), N).to_matrix(16);
        auto rs = row_sums(m12);
        auto ars = abs_row_sums(m12);
        auto hr = hankel_transform(rs, 6);
        auto har = hankel_transform(ars, 6);
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 6 && ok; ++n) {
            Rational p2 = int_pow(Rational(2), n * (n - 1) / 2);
            if (!(hr[n] == ((n % 2) ? -p2 : p2))) {
                ok = false;
                why = "signed row sums at " + std::to_string(n);
            }
            if (!(har[n] == p2)) {
                ok = false;
                why = "absolute row sums at " + std::to_string(n);
            }
        }
        c.check("c04.hankel.row-sums", 4, ok, why);
    });

    c.guarded("c04.hankel.corollary-row-sums", 4, [&] {
        auto rows = row_sums(associated_involution(Rational(2), Rational(1), N).to_matrix(16));
        auto h = hankel_transform(rows, 6);
        RatSeries ref = rational_gf<Rational>({1}, {1, -2, 2}, 8);
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 6 && ok; ++n)
            if (!(h[n] == int_pow(Rational(2), (n + 1) * n / 2) * ref[n])) {
                ok = false;
                why = "n = " + std::to_string(n);
            }
        c.check("c04.hankel.corollary-row-sums", 4, ok, why);
    });

    c.guarded("c04.hankel.somos", 4, [&] {
        RatSeries sq = sqrt1(RatSeries::from_coeffs({1, -4}, N));
        RatSeries den = scale(RatSeries::from_coeffs({2, -2, 1}, N), Rational(2));
        RatSeries g1 = div(sq + RatSeries::from_coeffs({3, -2}, N), den);
        std::vector<Rational> s1(g1.coeffs().begin(), g1.coeffs().begin() + 16);
        std::vector<Rational> s2 = {Rational(1)};
        s2.insert(s2.end(), g1.coeffs().begin(), g1.coeffs().begin() + 15);
        auto h1 = hankel_transform(s1, 7);
        auto h2 = hankel_transform(s2, 7);
        bool ok = true;
        for (int n = 0; n <= 7; ++n) {
            Rational want = (n % 2) ? Rational(-1) : Rational(1);
            ok = ok && h1[n] == want && h2[n] == want;
        }
        c.check("c04.hankel.somos", 4, ok);
    });
}

// ---------------------------------------------------------------- criterion 5

void polynomial_hankels(Ctx& c) {
    RatPoly u = RatPoly::indeterminate();

    c.guarded("c05.polyhankel.second-family", 5, [&] {
        auto mu = moment_polys(chebyshev_moment_family(2, N), 12);
        auto h = hankel_transform(mu, 5);
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 5 && ok; ++n)
            if (!(h[n] == int_pow(RatPoly(1) - u, n))) {
                ok = false;
                why = "n = " + std::to_string(n);
            }
        c.check("c05.polyhankel.second-family", 5, ok, why);
    });

    c.guarded("c05.polyhankel.first-family-term", 5, [&] {
        auto mu = moment_polys(chebyshev_moment_family(1, N), 12);
        auto h = hankel_transform(mu, 5);
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 5 && ok; ++n)
            for (int k = 0; k <= n; ++k) {
                Rational want = binomial(2 * n + 1 - k, 2 * n + 1 - 2 * k);
                if (k % 2) want = -want;
                if (!(h[n].coeff(k) == want)) {
                    ok = false;
                    why = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    break;
                }
            }
        c.check("c05.polyhankel.first-family-term", 5, ok, why);
    });

    for (auto [a, b] : {std::pair<long, long>{3, 2}, {1, 2}}) {
        std::string id = "c05.polyhankel.general-" + std::to_string(a) + "-" + std::to_string(b);
        c.guarded(id, 5, [&, a, b] {
            auto mu = moment_polys(general_moment_family(Rational(a), Rational(b), N), 10);
            auto h = hankel_transform(mu, 4);
            bool ok = true;
            std::string why;
            for (int n = 0; n <= 4 && ok; ++n) {
                RatPoly want = int_pow(-(u - RatPoly(a - 1)), n);
                for (long t = 0; t < n * (n - 1) / 2; ++t) want = want * RatPoly(b);
                if (!(h[n] == want)) {
                    ok = false;
                    why = "n = " + std::to_string(n);
                }
            }
            c.check(id, 5, ok, why);
        });
    }

    c.guarded("c05.polyhankel.ternary", 5, [&] {
        auto mu = moment_polys(gk_moment_family(3, 3, N), 10);
        auto h = hankel_transform(mu, 4);
        std::vector<RatPoly> want = {
            RatPoly(1), RatPoly(std::vector<Rational>{3, -2}),
            RatPoly(std::vector<Rational>{26, -34, 11}),
            RatPoly(std::vector<Rational>{646, -1254, 804, -170}),
            RatPoly(std::vector<Rational>{45885, -117990, 112860, -47538, 7429})};
        bool ok = true;
        std::string why;
        for (int n = 0; n <= 4 && ok; ++n)
            if (!(h[n] == want[n])) {
                ok = false;
                why = "n = " + std::to_string(n);
            }
        c.check("c05.polyhankel.ternary", 5, ok, why);
    });

    c.guarded("c05.polyhankel.first-kind", 5, [&] {
        FirstKindMoments fk = first_kind_moment_pipeline(13, N + 2);
        bool ok = true;
        std::string why;
        for (size_t n = 0; n < fk.hankel.size() && ok; ++n)
            if (!(fk.hankel[n] == int_pow(RatPoly(1) - u, static_cast<long>(n)))) {
                ok = false;
                why = "n = " + std::to_string(n);
            }
        c.check("c05.polyhankel.first-kind", 5, ok, why);
    });
}

// ---------------------------------------------------------------- criterion 6

void continued_fractions(Ctx& c) {
    RatPoly u = RatPoly::indeterminate();

    // every displayed continued fraction: expand with the periodic tail,
    // peel back, compare coefficients; then Heilermann vs determinants
    struct RatCF {
        std::string name;
        JFraction<Rational> j;
    };
    std::vector<RatCF> rational_cfs;
    rational_cfs.push_back({"catalan-squared",
                            JFraction<Rational>(Rational(1), {}, {},
                                                JTail<Rational>{Rational(2), Rational(1)})});
    rational_cfs.push_back({"schroeder-3color",
                            JFraction<Rational>(Rational(1), {Rational(4)}, {Rational(2)},
                                                JTail<Rational>{Rational(3), Rational(2)})});
    rational_cfs.push_back({"rowsum-3-2",
                            JFraction<Rational>(Rational(1), {Rational(3)}, {Rational(1)},
                                                JTail<Rational>{Rational(3), Rational(2)})});
    rational_cfs.push_back({"absrowsum-3-2",
                            JFraction<Rational>(Rational(1), {Rational(5)}, {Rational(3)},
                                                JTail<Rational>{Rational(3), Rational(2)})});
    rational_cfs.push_back({"rowsum-1-2",
                            JFraction<Rational>(Rational(1), {Rational(-1)}, {Rational(-1)},
                                                JTail<Rational>{Rational(1), Rational(2)})});
    rational_cfs.push_back({"absrowsum-1-2",
                            JFraction<Rational>(Rational(1), {Rational(1)}, {Rational(1)},
                                                JTail<Rational>{Rational(1), Rational(2)})});

    for (auto& [name, j] : rational_cfs) {
        c.guarded("c06.cf.round-trip." + name, 6, [&] {
            RatSeries g = jfraction_to_series(j, 16);
            JFraction<Rational> back = series_to_jfraction(g, 8);
            bool ok = back.mu0() == j.mu0();
            for (int k = 0; k < 8; ++k) ok = ok && back.alpha(k) == j.alpha(k);
            for (int k = 1; k <= 8; ++k) ok = ok && back.beta(k) == j.beta(k);
            ok = ok && jfraction_to_series(back, 16) == g;
            c.check("c06.cf.round-trip." + name, 6, ok);
        });
    }

    // the four displayed row-sum fractions really generate the row sums
    c.guarded("c06.cf.row-sum-values", 6, [&] {
        RatMatrix m32 = general_moment_involution(Rational(3), Rational(2), N).to_matrix(16);
        RatMatrix m12 = general_moment_involution(Rational(1), Rational(2), N).to_matrix(16);
        auto exp_rs = [&](const JFraction<Rational>& j) { return jfraction_to_series(j, 15); };
        bool ok = exp_rs(rational_cfs[2].j) == RatSeries::from_coeffs(row_sums(m32), 15);
        ok = ok && exp_rs(rational_cfs[3].j) == RatSeries::from_coeffs(abs_row_sums(m32), 15);
        ok = ok && exp_rs(rational_cfs[4].j) == RatSeries::from_coeffs(row_sums(m12), 15);
        ok = ok && exp_rs(rational_cfs[5].j) == RatSeries::from_coeffs(abs_row_sums(m12), 15);
        ok = ok && exp_rs(rational_cfs[1].j) ==
                       RatSeries::from_coeffs(
                           [&] {
                               std::vector<Rational> col;
                               RatMatrix g32 = m32;
                               for (int i = 0; i < 16; ++i) col.push_back(g32.entry(i, 0));
                               return col;
                           }(),
                           15);
        c.check("c06.cf.row-sum-values", 6, ok);
    });

    // parameterized fractions over the polynomial ring
    c.guarded("c06.cf.second-family", 6, [&] {
        PS mom = rinv(chebyshev_moment_family(2, N)).g();
        JFraction<RatPoly> want(RatPoly(1), {RatPoly(2) - u}, {RatPoly(1) - u},
                                JTail<RatPoly>{RatPoly(2), RatPoly(1)});
        bool ok = jfraction_to_series(want, N) == mom;
        JFraction<RatPoly> back = series_to_jfraction(mom, 6);
        ok = ok && back.alpha(0) == RatPoly(2) - u && back.beta(1) == RatPoly(1) - u;
        for (int k = 1; k < 6; ++k) ok = ok && back.alpha(k) == RatPoly(2) && back.beta(k + 1) == RatPoly(1);
        c.check("c06.cf.second-family", 6, ok);
    });

    for (auto [a, b] : {std::pair<long, long>{3, 2}, {1, 2}}) {
        std::string id = "c06.cf.general-" + std::to_string(a) + "-" + std::to_string(b);
        c.guarded(id, 6, [&, a, b] {
            PS mom = rinv(general_moment_family(Rational(a), Rational(b), N)).g();
            JFraction<RatPoly> want(RatPoly(1), {RatPoly(2 * a - 2) - u}, {RatPoly(a - 1) - u},
                                    JTail<RatPoly>{RatPoly(a), RatPoly(b)});
            bool ok = jfraction_to_series(want, N) == mom;
            JFraction<RatPoly> back = series_to_jfraction(mom, 6);
            ok = ok && back.alpha(0) == want.alpha(0) && back.beta(1) == want.beta(1);
            for (int k = 1; k < 6; ++k)
                ok = ok && back.alpha(k) == RatPoly(a) && back.beta(k + 1) == RatPoly(b);
            c.check(id, 6, ok);
        });
    }

    c.guarded("c06.cf.first-kind", 6, [&] {
        FirstKindMoments fk = first_kind_moment_pipeline(13, N + 2);
        JFraction<RatPoly> want(RatPoly(1), {-u}, {RatPoly(1) - u},
                                JTail<RatPoly>{RatPoly(0), RatPoly(1)});
        Series<RatPoly> mom = Series<RatPoly>::from_coeffs(fk.moments, 12);
        bool ok = jfraction_to_series(want, 12) == mom;
        ok = ok && fk.jf.alpha(0) == -u && fk.jf.beta(1) == RatPoly(1) - u;
        for (int k = 1; k < 5; ++k)
            ok = ok && fk.jf.alpha(k) == RatPoly(0) && fk.jf.beta(k + 1) == RatPoly(1);
        c.check("c06.cf.first-kind", 6, ok);
    });

    // Heilermann vs the determinant route on the nondegenerate sequences
    c.guarded("c06.cf.heilermann-vs-determinant", 6, [&] {
        bool ok = true;
        std::string why;
        auto check_seq = [&](const std::string& what, const std::vector<Rational>& terms, int depth) {
            if (!ok) return;
            JFraction<Rational> j = series_to_jfraction(
                RatSeries::from_coeffs(terms, static_cast<int>(terms.size()) - 1), depth);
            auto h = hankel_transform(terms, depth);
            for (int n = 0; n <= depth; ++n)
                if (!(heilermann(j, n) == h[n])) {
                    ok = false;
                    why = what + " at n = " + std::to_string(n);
                    return;
                }
        };
        RatSeries cat = catalan_series<Rational>(30);
        check_seq("catalan", std::vector<Rational>(cat.coeffs().begin(), cat.coeffs().end()), 6);
        RatSeries xc3 = shift_up(cat * cat * cat, 1);
        check_seq("diag-sums-1", diagonal_sums(RatPair(cat, xc3).to_matrix(30)), 6);
        check_seq("diag-sums-2", diagonal_sums(RatPair(cat * cat, xc3).to_matrix(30)), 6);
        RatSeries t = ternary_series<Rational>(12);
        check_seq("ternary", std::vector<Rational>(t.coeffs().begin(), t.coeffs().end()), 4);
        RatMatrix m32 = general_moment_involution(Rational(3), Rational(2), N).to_matrix(16);
        RatMatrix m12 = general_moment_involution(Rational(1), Rational(2), N).to_matrix(16);
        check_seq("rowsum-3-2", row_sums(m32), 6);
        check_seq("absrowsum-3-2", abs_row_sums(m32), 6);
        check_seq("absrowsum-1-2", abs_row_sums(m12), 6);
        // ternary moments specialize to nondegenerate rational sequences
        auto mu = moment_polys(gk_moment_family(3, 3, N), 13);
        for (long y : {2L, 3L}) {
            std::vector<Rational> at;
            for (auto& p : mu) at.push_back(p.eval(Rational(y)));
            check_seq("ternary-moments-y" + std::to_string(y), at, 5);
        }
        c.check("c06.cf.heilermann-vs-determinant", 6, ok, why);
    });

    c.guarded("c06.cf.heilermann-vs-determinant-poly", 6, [&] {
        bool ok = true;
        std::string why;
        auto check_polyseq = [&](const std::string& what, const std::vector<RatPoly>& mu, int depth) {
            if (!ok) return;
            JFraction<RatPoly> j = series_to_jfraction(
                Series<RatPoly>::from_coeffs(mu, static_cast<int>(mu.size()) - 1), depth);
            auto h = hankel_transform(mu, depth);
            for (int n = 0; n <= depth; ++n)
                if (!(heilermann(j, n) == h[n])) {
                    ok = false;
                    why = what + " at n = " + std::to_string(n);
                    return;
                }
        };
        // only families whose continued-fraction coefficients stay inside
        // the polynomial ring can be peeled symbolically
        check_polyseq("second-family", moment_polys(chebyshev_moment_family(2, N), 13), 5);
        check_polyseq("general-3-2", moment_polys(general_moment_family(Rational(3), Rational(2), N), 11), 4);
        check_polyseq("general-1-2", moment_polys(general_moment_family(Rational(1), Rational(2), N), 11), 4);
        c.check("c06.cf.heilermann-vs-determinant-poly", 6, ok, why);
    });
}

// ---------------------------------------------------------------- criterion 7

void dual_routes(Ctx& c) {
    for (int m = 1; m <= 2; ++m) {
        std::string id = "c07.dual.chebyshev-m" + std::to_string(m);
        c.guarded(id, 7, [&, m] {
            RatMatrix arr = moment_coefficient_array(chebyshev_moment_family(m, N), 16);
            RatMatrix closed = gk_involution(2, m, N).to_matrix(16);
            c.check(id, 7, arr == closed, mismatch(arr, closed));
        });
    }
    for (auto [a, b] : {std::pair<long, long>{3, 2}, {1, 2}, {2, 1}, {2, 2}, {4, 3}}) {
        std::string id = "c07.dual.general-" + std::to_string(a) + "-" + std::to_string(b);
        c.guarded(id, 7, [&, a, b] {
            RatMatrix arr =
                moment_coefficient_array(general_moment_family(Rational(a), Rational(b), N), 16);
            RatMatrix closed = general_moment_involution(Rational(a), Rational(b), N).to_matrix(16);
            c.check(id, 7, arr == closed, mismatch(arr, closed));
        });
    }
    for (int k = 2; k <= 4; ++k)
        for (int m = 0; m <= k; ++m) {
            std::string id = "c07.dual.k" + std::to_string(k) + "-m" + std::to_string(m);
            c.guarded(id, 7, [&, k, m] {
                RatMatrix arr = moment_coefficient_array(gk_moment_family(k, m, N), 16);
                RatMatrix closed = gk_involution(k, m, N).to_matrix(16);
                c.check(id, 7, arr == closed, mismatch(arr, closed));
            });
        }
}

// ---------------------------------------------------------------- criterion 8

void production_matrices(Ctx& c) {
    c.guarded("c08.prodmat.random", 8, [&] {
        std::mt19937 rng(kSeed + 1);
        bool ok = true;
        std::string why;
        for (int t = 0; t < 10 && ok; ++t) {
            RatPair r = rand_pair(rng, 14);
            if (!(production_matrix_series(r, 6) == production_matrix_matrix(r, 6))) {
                ok = false;
                why = "random pair " + std::to_string(t);
            }
        }
        c.check("c08.prodmat.random", 8, ok, why);
    });

    c.guarded("c08.prodmat.displays", 8, [&] {
        // both displayed production matrices, re-derived through both routes
        auto p2 = production_matrix(rinv(simple_pair({1, 2, 1})), 8);
        auto p3 = production_matrix(rinv(simple_pair({1, 3, 3, 1})), 8);
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i)
            for (int j = 0; j < 8; ++j) {
                Rational w2(0);
                if (i == j) w2 = Rational(2);
                if (j == i + 1 || j + 1 == i) w2 = Rational(1);
                Rational w3(0);
                if (j == i + 1) w3 = Rational(1);
                if (j == i) w3 = Rational(3);
                if (j + 1 == i) w3 = Rational(3);
                if (j + 2 == i) w3 = Rational(1);
                if (i == 0 && j == 0) w3 = Rational(3);
                if (!(p2.entry(i, j) == w2) || !(p3.entry(i, j) == w3)) {
                    ok = false;
                    break;
                }
            }
        c.check("c08.prodmat.displays", 8, ok);
    });

    c.guarded("c08.prodmat.tridiagonal-template", 8, [&] {
        bool ok = true;
        std::string why;
        for (auto [gamma, delta, alpha, beta] :
             {std::array<long, 4>{1, 2, 3, 1}, std::array<long, 4>{2, 1, 2, 1},
              std::array<long, 4>{0, 3, 1, 2}}) {
            std::vector<Rational> num = {Rational(1), Rational(alpha - gamma), Rational(beta - delta)};
            std::vector<Rational> den = {Rational(1), Rational(alpha), Rational(beta)};
            RatPair coeff_array(rational_gf<Rational>(num, den, N),
                                rational_gf<Rational>({Rational(0), Rational(1)}, den, N));
            auto p = production_matrix(rinv(coeff_array), 7);
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) {
                    Rational want(0);
                    if (j == i + 1) want = Rational(1);
                    else if (i == 0 && j == 0) want = Rational(gamma);
                    else if (i == 1 && j == 0) want = Rational(delta);
                    else if (i == j && i >= 1) want = Rational(alpha);
                    else if (j + 1 == i && j >= 1) want = Rational(beta);
                    if (!(p.entry(i, j) == want)) {
                        ok = false;
                        why = "(" + std::to_string(i) + "," + std::to_string(j) + ") for gamma=" +
                              std::to_string(gamma);
                    }
                }
        }
        c.check("c08.prodmat.tridiagonal-template", 8, ok, why);
    });
}

// ---------------------------------------------------------------- criterion 9

void oeis_checks(Ctx& c) {
    auto load = [&](const std::string& a) { return oeis_load(a, c.fixture_dir, false); };

    auto check_vs_fixture = [&](const std::string& id, const std::string& anum,
                                const std::vector<Rational>& got, size_t fixture_offset,
                                size_t terms) {
        c.guarded(id, 9, [&] {
            BFile bf = load(anum);
            auto vals = bf.values();
            bool ok = vals.size() >= fixture_offset + terms && got.size() >= terms;
            std::string why = ok ? "" : "not enough terms";
            for (size_t i = 0; ok && i < terms; ++i)
                if (!(got[i] == vals[fixture_offset + i])) {
                    ok = false;
                    why = "term " + std::to_string(i) + " got " + got[i].str() + " fixture " +
                          vals[fixture_offset + i].str();
                }
            c.check(id, 9, ok, why);
        });
    };

    RatSeries cat = catalan_series<Rational>(30);
    check_vs_fixture("c09.oeis.a000108.catalan", "A000108",
                     std::vector<Rational>(cat.coeffs().begin(), cat.coeffs().end()), 0, 12);

    RatSeries xc3 = shift_up(cat * cat * cat, 1);
    check_vs_fixture("c09.oeis.a081696.diag-sums", "A081696",
                     diagonal_sums(RatPair(cat, xc3).to_matrix(24)), 0, 12);
    check_vs_fixture("c09.oeis.a109262.diag-sums", "A109262",
                     diagonal_sums(RatPair(cat * cat, xc3).to_matrix(24)), 0, 12);

    // unsigned column of the second Catalan involution, against the triangle
    // fixture's row-start positions
    c.guarded("c09.oeis.a107842.column", 9, [&] {
        BFile bf = load("A107842");
        auto vals = bf.values();
        RatMatrix m = gk_involution(2, 2, N).to_matrix(10);
        bool ok = true;
        std::string why;
        for (int n = 0; n < 10 && ok; ++n) {
            size_t pos = static_cast<size_t>(n) * (n + 1) / 2;
            if (pos >= vals.size() || !(abs_value(m.entry(n, 0)) == vals[pos])) {
                ok = false;
                why = "row " + std::to_string(n);
            }
        }
        c.check("c09.oeis.a107842.column", 9, ok, why);
    });

    check_vs_fixture("c09.oeis.a225887.moments", "A225887",
                     [&] {
                         RatMatrix m =
                             general_moment_involution(Rational(3), Rational(2), N).to_matrix(16);
                         std::vector<Rational> col;
                         for (int i = 0; i < 16; ++i) col.push_back(m.entry(i, 0));
                         return col;
                     }(),
                     0, 12);

    // A006319(n+1): the unsigned f-part coefficients of the corollary pair
    check_vs_fixture("c09.oeis.a006319.corollary-f", "A006319",
                     [&] {
                         RatSeries f = associated_involution(Rational(2), Rational(1), N).f();
                         std::vector<Rational> out;
                         for (int i = 1; i <= N; ++i) out.push_back(abs_value(f[i]));
                         return out;
                     }(),
                     0, 12);

    RatSeries tern = ternary_series<Rational>(22);
    check_vs_fixture("c09.oeis.a001764.ternary", "A001764",
                     std::vector<Rational>(tern.coeffs().begin(), tern.coeffs().end()), 0, 12);

    // Hankel of the ternary moment values at y = 1
    c.guarded("c09.oeis.a005156.hankel-at-1", 9, [&] {
        auto mu = moment_polys(gk_moment_family(3, 3, N), 19);
        std::vector<Rational> at1;
        for (auto& p : mu) at1.push_back(p.eval(Rational(1)));
        auto h = hankel_transform(at1, 9);
        BFile bf = load("A005156");
        auto vals = bf.values();
        bool ok = vals.size() >= 10;
        for (int n = 0; ok && n <= 9; ++n)
            if (!(h[n] == vals[n])) ok = false;
        c.check("c09.oeis.a005156.hankel-at-1", 9, ok);
    });

    // Hankel transform of the ternary numbers themselves = A051255(n+1)
    check_vs_fixture("c09.oeis.a051255.ternary-hankel", "A051255",
                     hankel_transform(std::vector<Rational>(tern.coeffs().begin(),
                                                            tern.coeffs().end()),
                                      10),
                     1, 11);

    // A035929 from the appendix f-part generating function
    check_vs_fixture("c09.oeis.a035929.gf", "A035929",
                     [&] {
                         RatSeries g2 =
                             div(RatSeries::x(N),
                                 RatSeries::one(N) -
                                     RatSeries::from_coeffs({0, 1, -1}, N) * cat.truncated(N));
                         std::vector<Rational> out(g2.coeffs().begin() + 1, g2.coeffs().end());
                         return out;
                     }(),
                     0, 12);

    check_vs_fixture("c09.oeis.a182486.somos", "A182486",
                     [&] {
                         RatSeries sq = sqrt1(RatSeries::from_coeffs({1, -4}, N));
                         RatSeries den = scale(RatSeries::from_coeffs({2, -2, 1}, N), Rational(2));
                         RatSeries g1 = div(sq + RatSeries::from_coeffs({3, -2}, N), den);
                         std::vector<Rational> out = {Rational(1)};
                         out.insert(out.end(), g1.coeffs().begin(), g1.coeffs().end());
                         return out;
                     }(),
                     0, 12);

    // INVERT(1) of the A098746 fixture reproduces the printed moment values
    c.guarded("c09.oeis.a098746.invert", 9, [&] {
        BFile bf = load("A098746");
        auto vals = bf.values();
        auto inv = invert_transform(std::vector<Rational>(vals.begin(), vals.begin() + 12));
        std::string why;
        bool ok = seq_match(inv, {1, 2, 5, 15, 53, 215, 971, 4745, 24540, 132235, 734572}, &why);
        // and those are exactly the ternary moment values at y = 1
        auto mu = moment_polys(gk_moment_family(3, 3, N), 12);
        for (size_t i = 0; ok && i < mu.size(); ++i)
            if (!(mu[i].eval(Rational(1)) == inv[i])) {
                ok = false;
                why = "moment mismatch at " + std::to_string(i);
            }
        c.check("c09.oeis.a098746.invert", 9, ok, why);
    });

    // Pascal diagonal sums against the Fibonacci fixture, shifted by one
    check_vs_fixture("c09.oeis.a000045.pascal-diagonals", "A000045",
                     diagonal_sums(pascal_pair().to_matrix(16)), 1, 14);
}

// --------------------------------------------------------------- criterion 10

void property_suites(Ctx& c) {
    c.guarded("c10.property.revert-round-trip", 10, [&] {
        std::mt19937 rng(kSeed + 2);
        std::uniform_int_distribution<int> d(-4, 4);
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            RatSeries f(14);
            f.at(1) = Rational(1);
            for (int i = 2; i <= 14; ++i) f.at(i) = Rational(d(rng));
            RatSeries fbar = revert(f);
            ok = compose(f, fbar) == RatSeries::x(14) && compose(fbar, f) == RatSeries::x(14);
        }
        c.check("c10.property.revert-round-trip", 10, ok);
    });

    c.guarded("c10.property.sqrt1-square", 10, [&] {
        std::mt19937 rng(kSeed + 3);
        std::uniform_int_distribution<int> d(-4, 4);
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            RatSeries a(14);
            a.at(0) = Rational(1);
            for (int i = 1; i <= 14; ++i) a.at(i) = Rational(d(rng));
            RatSeries s = sqrt1(a);
            ok = s * s == a;
        }
        c.check("c10.property.sqrt1-square", 10, ok);
    });

    c.guarded("c10.property.matrix-homomorphism", 10, [&] {
        std::mt19937 rng(kSeed + 4);
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            RatPair a = rand_pair(rng, 12), b = rand_pair(rng, 12);
            ok = rmul(a, b).to_matrix(13) == a.to_matrix(13) * b.to_matrix(13);
        }
        c.check("c10.property.matrix-homomorphism", 10, ok);
    });

    c.guarded("c10.property.hankel-binomial-invariance", 10, [&] {
        std::mt19937 rng(kSeed + 5);
        std::uniform_int_distribution<int> d(-3, 3);
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            std::vector<Rational> a;
            for (int i = 0; i < 11; ++i) a.emplace_back(d(rng));
            ok = hankel_transform(a, 5) == hankel_transform(binomial_transform(a), 5);
        }
        c.check("c10.property.hankel-binomial-invariance", 10, ok);
    });

    c.guarded("c10.property.bareiss-vs-cofactor", 10, [&] {
        std::mt19937 rng(kSeed + 6);
        std::uniform_int_distribution<int> d(-4, 4);
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            std::vector<Rational> a;
            for (int i = 0; i < 7; ++i) a.emplace_back(Rational(d(rng), 1 + t % 3));
            auto got = hankel_transform(a, 3);
            for (int n = 0; n <= 3 && ok; ++n) {
                std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) m[i][j] = a[i + j];
                ok = got[n] == det_perm(m);
            }
        }
        for (int t = 0; t < 8 && ok; ++t) {
            std::vector<RatPoly> a;
            for (int i = 0; i < 7; ++i)
                a.push_back(RatPoly(std::vector<Rational>{Rational(d(rng)), Rational(d(rng))}));
            auto got = hankel_transform(a, 3);
            for (int n = 0; n <= 3 && ok; ++n) {
                std::vector<std::vector<RatPoly>> m(n + 1, std::vector<RatPoly>(n + 1));
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) m[i][j] = a[i + j];
                ok = got[n] == det_perm(m);
            }
        }
        c.check("c10.property.bareiss-vs-cofactor", 10, ok);
    });

    c.guarded("c10.property.factorization-involution", 10, [&] {
        std::mt19937 rng(kSeed + 7);
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t)
            ok = involution_check(factorization_involution(rand_pair(rng, 14)), 14).holds;
        c.check("c10.property.factorization-involution", 10, ok);
    });
}

}  // namespace

VerifyReport run_verification_suite(const std::string& fixture_dir) {
    Ctx ctx;
    ctx.fixture_dir = fixture_dir.empty() ? default_fixture_dir() : fixture_dir;

    golden_matrices(ctx);
    involution_suite(ctx);
    hankel_numbers(ctx);
    polynomial_hankels(ctx);
    continued_fractions(ctx);
    dual_routes(ctx);
    production_matrices(ctx);
    oeis_checks(ctx);
    property_suites(ctx);

    std::sort(ctx.out.begin(), ctx.out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    VerifyReport rep;
    rep.checks = std::move(ctx.out);
    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CheckResult& r) { return r.pass; });
    return rep;
}

std::string render_report(const VerifyReport& report, bool json) {
    if (json) {
        nlohmann::json j;
        j["checks"] = nlohmann::json::array();
        for (const auto& r : report.checks) {
            nlohmann::json e;
            e["id"] = r.id;
            e["criterion"] = r.criterion;
            e["pass"] = r.pass;
            if (!r.pass) e["detail"] = r.detail;
            j["checks"].push_back(e);
        }
        j["all_pass"] = report.all_pass;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    size_t passed = 0;
    for (const auto& r : report.checks) {
        if (r.pass) {
            ++passed;
            out << "PASS " << r.id << "\n";
        } else {
            out << "FAIL " << r.id << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

}  // namespace riocalc
