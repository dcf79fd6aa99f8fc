#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "riocalc/errors.hpp"

namespace riocalc {

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p", "-p" or "p/q" (whitespace not allowed).
    static Rational from_string(std::string_view text) {
        if (text.empty()) throw Error("empty rational literal");
        std::string s(text);
        for (size_t i = 0; i < s.size(); ++i) {
            char ch = s[i];
            bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
            if (!ok) throw Error("bad rational literal: " + s);
        }
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
        if (q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        return Rational(std::move(q), already_canonical{});
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw DivisionByZero();
        return Rational(mpq_class(a.v_ / b.v_), already_canonical{});
    }
    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// Canonical rendering: "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    int signum() const { return sgn(v_); }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a == Rational(0); }
inline bool is_unit(const Rational& a) { return !is_zero(a); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline std::string to_text(const Rational& a) { return a.str(); }
inline int signum(const Rational& a) { return a.signum(); }
inline Rational abs_value(const Rational& a) { return a.signum() < 0 ? -a : a; }

inline void assign_from_rational(Rational& dst, const Rational& src) { dst = src; }

/// Exact binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace riocalc
