#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riocalc/coeff.hpp"
#include "riocalc/errors.hpp"

namespace riocalc {

/// Dense univariate polynomial in the indeterminate u over an exact
/// coefficient ring.  Normalized: no trailing zero coefficients, the zero
/// polynomial is the empty list.
template <Coefficient C>
class Poly {
public:
    Poly() = default;
    Poly(long n) {  // NOLINT: implicit constant polynomial
        if (n != 0) c_.push_back(C(n));
    }
    explicit Poly(C constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }

    /// The polynomial u.
    static Poly indeterminate() { return Poly(std::vector<C>{C(0), C(1)}); }

    /// degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }

    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return C(0);
        return c_[i];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const C& v : c_) r.push_back(-v);
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Horner evaluation at a ring element.
    C eval(const C& x) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string str(const std::string& var = "u") const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            std::string term = term_str(c_[i], i, var);
            if (out.empty()) {
                out = term;
            } else if (term.size() > 0 && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    static std::string term_str(const C& v, size_t i, const std::string& var) {
        std::string cs = to_text(v);
        bool needs_parens = cs.find_first_of("+- ") != std::string::npos && !(cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos);
        if (i == 0) return needs_parens ? "(" + cs + ")" : cs;
        std::string pow = (i == 1) ? var : var + "^" + std::to_string(i);
        if (cs == "1") return pow;
        if (cs == "-1") return "-" + pow;
        if (needs_parens) cs = "(" + cs + ")";
        return cs + "*" + pow;
    }

    std::vector<C> c_;
};

template <Coefficient C>
bool is_zero(const Poly<C>& p) {
    return p.zero();
}

/// Units are the nonzero constants whose coefficient is itself a unit.
template <Coefficient C>
bool is_unit(const Poly<C>& p) {
    return p.degree() == 0 && is_unit(p.coeff(0));
}

template <Coefficient C>
std::string to_text(const Poly<C>& p) {
    return p.str();
}

/// Exact division in the polynomial ring; throws unless q divides p.
template <Coefficient C>
Poly<C> exact_div(const Poly<C>& p, const Poly<C>& q) {
    if (q.zero()) throw DivisionByZero();
    if (p.zero()) return Poly<C>();
    int dp = p.degree(), dq = q.degree();
    if (dp < dq) throw InexactDivision();
    std::vector<C> rem;
    rem.reserve(dp + 1);
    for (int i = 0; i <= dp; ++i) rem.push_back(p.coeff(i));
    const C lead = q.coeff(dq);
    std::vector<C> quot(dp - dq + 1, C(0));
    for (int i = dp - dq; i >= 0; --i) {
        C qi = exact_div(rem[i + dq], lead);
        quot[i] = qi;
        if (is_zero(qi)) continue;
        for (int j = 0; j <= dq; ++j) rem[i + j] = rem[i + j] - qi * q.coeff(j);
    }
    for (const C& r : rem)
        if (!is_zero(r)) throw InexactDivision();
    return Poly<C>(std::move(quot));
}

template <Coefficient C>
void assign_from_rational(Poly<C>& dst, const Rational& src) {
    C inner(0);
    assign_from_rational(inner, src);
    dst = Poly<C>(std::move(inner));
}

/// Embeds a rational scalar into any coefficient ring in the tower.
template <Coefficient C>
C coeff_from_rational(const Rational& q) {
    C v(0);
    assign_from_rational(v, q);
    return v;
}

using RatPoly = Poly<Rational>;

}  // namespace riocalc
