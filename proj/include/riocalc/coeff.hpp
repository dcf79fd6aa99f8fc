#pragma once

#include <concepts>
#include <string>

#include "riocalc/rational.hpp"

namespace riocalc {

/// The shared coefficient abstraction: an exact commutative ring with unit
/// detection and exact division.  Modeled by Rational and by Poly<C> for any
/// coefficient C, so nested instances (polynomials over polynomials) work.
template <typename C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b) {
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a * b } -> std::same_as<C>;
    { -a } -> std::same_as<C>;
    { exact_div(a, b) } -> std::same_as<C>;
    { is_zero(a) } -> std::same_as<bool>;
    { is_unit(a) } -> std::same_as<bool>;
    { to_text(a) } -> std::same_as<std::string>;
    C(long{});
};

template <Coefficient C>
C inv_unit(const C& a) {
    return exact_div(C(1), a);
}

template <Coefficient C>
C int_pow(C base, long e) {
    if (e < 0) {
        base = inv_unit(base);
        e = -e;
    }
    C r(1);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Whether C carries a sign (needed by absolute-value row sums).
template <typename C>
concept SignedCoefficient = Coefficient<C> && requires(const C& a) {
    { signum(a) } -> std::same_as<int>;
    { abs_value(a) } -> std::same_as<C>;
};

static_assert(Coefficient<Rational>);
static_assert(SignedCoefficient<Rational>);

}  // namespace riocalc
