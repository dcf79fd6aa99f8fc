#pragma once

#include <random>
#include <vector>

#include "riocalc/riordan.hpp"
#include "riocalc/series.hpp"

namespace riocalc::testutil {

// all randomized suites share pinned seeds so failures reproduce
constexpr unsigned kSeed = 20240811;

inline Rational rand_rational(std::mt19937& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng), den(rng));
}

inline Rational rand_int_coeff(std::mt19937& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Rational(d(rng));
}

inline RatSeries rand_series(std::mt19937& rng, int order, bool unit_constant) {
    RatSeries s(order);
    for (int i = 0; i <= order; ++i) s.at(i) = rand_int_coeff(rng);
    if (unit_constant) s.at(0) = Rational(1);
    return s;
}

/// Random f with f(0)=0, f'(0)=1 and small integer coefficients.
inline RatSeries rand_revertible(std::mt19937& rng, int order) {
    RatSeries f = rand_series(rng, order, false);
    f.at(0) = Rational(0);
    f.at(1) = Rational(1);
    return f;
}

/// Random valid pair with g(0) = 1 and f'(0) = 1.
inline RatPair rand_pair(std::mt19937& rng, int order) {
    return RatPair(rand_series(rng, order, true), rand_revertible(rng, order));
}

inline std::vector<Rational> rat_vec(const std::vector<long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

/// Builds an n x n lower-triangular matrix from explicit rows.
inline RatMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), Rational(rows[i][j]));
    return m;
}

inline bool prefix_eq(const std::vector<Rational>& got, const std::vector<long>& want) {
    if (got.size() < want.size()) return false;
    for (size_t i = 0; i < want.size(); ++i)
        if (!(got[i] == Rational(want[i]))) return false;
    return true;
}

inline bool series_prefix_eq(const RatSeries& got, const std::vector<long>& want) {
    if (got.order() + 1 < static_cast<int>(want.size())) return false;
    for (size_t i = 0; i < want.size(); ++i)
        if (!(got[static_cast<int>(i)] == Rational(want[i]))) return false;
    return true;
}

}  // namespace riocalc::testutil
