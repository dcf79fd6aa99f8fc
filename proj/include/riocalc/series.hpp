#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "riocalc/coeff.hpp"
#include "riocalc/errors.hpp"

namespace riocalc {

constexpr int kDefaultOrder = 24;

/// Truncated formal power series: coefficients of x^0 .. x^N for an explicit
/// truncation order N.  Binary operations on mixed orders truncate to the
/// smaller order.
template <Coefficient C>
class Series {
public:
    explicit Series(int order) : c_(static_cast<size_t>(order) + 1, C(0)) {}

    static Series zero(int order) { return Series(order); }
    static Series one(int order) { return constant(C(1), order); }
    static Series x(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = C(1);
        return s;
    }
    static Series constant(C v, int order) {
        Series s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    /// Series with the given low-order coefficients, zero-padded to `order`.
    static Series from_coeffs(std::vector<C> coeffs, int order) {
        Series s(order);
        for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i)
            s.c_[i] = std::move(coeffs[i]);
        return s;
    }
    template <typename T>
    static Series from_ints(const std::vector<T>& coeffs, int order) {
        Series s(order);
        for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i)
            s.c_[i] = C(static_cast<long>(coeffs[i]));
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const C& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    C& at(int n) { return c_[static_cast<size_t>(n)]; }

    /// Coefficient extraction with truncation checking.
    const C& coeff(int n) const {
        if (n < 0 || n > order()) throw TruncationExceeded();
        return c_[static_cast<size_t>(n)];
    }

    Series truncated(int m) const {
        if (m >= order()) return *this;
        Series s(m);
        std::copy(c_.begin(), c_.begin() + m + 1, s.c_.begin());
        return s;
    }

    bool is_zero_series() const {
        for (const C& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; j + i <= n; ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    Series operator-() const {
        Series r(order());
        for (int i = 0; i <= order(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    std::string str() const {
        std::string out;
        for (int i = 0; i <= order(); ++i) {
            if (i) out += ", ";
            out += to_text(c_[i]);
        }
        return out;
    }

    const std::vector<C>& coeffs() const { return c_; }

private:
    std::vector<C> c_;
};

template <Coefficient C>
Series<C> scale(const Series<C>& a, const C& v) {
    Series<C> r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.at(i) = a[i] * v;
    return r;
}

/// Coefficient-wise exact division by a ring element (not necessarily a unit).
template <Coefficient C>
Series<C> divide_coeff(const Series<C>& a, const C& v) {
    Series<C> r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.at(i) = exact_div(a[i], v);
    return r;
}

/// Quotient A/B where B(0) is a unit.
template <Coefficient C>
Series<C> div(const Series<C>& a, const Series<C>& b) {
    int n = std::min(a.order(), b.order());
    if (!is_unit(b[0])) throw NonUnitConstantTerm();
    Series<C> q(n);
    for (int i = 0; i <= n; ++i) {
        C acc = a[i];
        for (int j = 0; j < i; ++j) {
            if (!is_zero(q[j])) acc = acc - q[j] * b[i - j];
        }
        q.at(i) = exact_div(acc, b[0]);
    }
    return q;
}

/// Multiplication by x^k (drops the top k coefficients).
template <Coefficient C>
Series<C> shift_up(const Series<C>& a, int k) {
    Series<C> r(a.order());
    for (int i = a.order(); i >= k; --i) r.at(i) = a[i - k];
    return r;
}

/// Exact division by x^k; the k low-order coefficients must vanish.
template <Coefficient C>
Series<C> shift_down(const Series<C>& a, int k) {
    if (k > a.order()) throw TruncationExceeded();
    for (int i = 0; i < k; ++i)
        if (!is_zero(a[i])) throw NonzeroLowOrderTerm();
    Series<C> r(a.order() - k);
    for (int i = 0; i <= r.order(); ++i) r.at(i) = a[i + k];
    return r;
}

/// Division that factors x^k out of both operands when B(0) = 0.  Requires A
/// to vanish to at least the order of B's lowest nonzero coefficient.
template <Coefficient C>
Series<C> div_shifted(const Series<C>& a, const Series<C>& b) {
    int k = 0;
    while (k <= b.order() && is_zero(b[k])) ++k;
    if (k > b.order()) throw DivisionByZero();
    if (k == 0) return div(a, b);
    return div(shift_down(a, k), shift_down(b, k));
}

/// Composition A(B(x)); requires B(0) = 0.
template <Coefficient C>
Series<C> compose(const Series<C>& a, const Series<C>& b) {
    if (!is_zero(b[0])) throw NonzeroConstantInner();
    int n = std::min(a.order(), b.order());
    Series<C> r = Series<C>::constant(a[a.order()], n);
    for (int i = a.order() - 1; i >= 0; --i) {
        r = r * b;
        r.at(0) = r[0] + a[i];
    }
    return r;
}

template <Coefficient C>
Series<C> derivative(const Series<C>& a) {
    Series<C> r(a.order());
    for (int i = 1; i <= a.order(); ++i) r.at(i - 1) = a[i] * C(i);
    return r;
}

/// Compositional inverse by Newton iteration: the unique f_bar with
/// f(f_bar(x)) = x.  Requires f(0) = 0 and f'(0) a unit (not necessarily 1).
template <Coefficient C>
Series<C> revert(const Series<C>& f) {
    int n = f.order();
    if (n < 1 || !is_zero(f[0]) || !is_unit(f[1])) throw NotRevertible();
    Series<C> x = Series<C>::x(n);
    Series<C> g = scale(x, inv_unit(f[1]));
    Series<C> fp = derivative(f);
    for (int iter = 0; iter < 64; ++iter) {
        Series<C> err = compose(f, g) - x;
        if (err.is_zero_series()) return g;
        g = g - div(err, compose(fp, g));
    }
    throw Error("reversion did not converge");  // unreachable for valid input
}

/// Square root with constant term 1: S with S*S = A, S(0) = 1.
template <Coefficient C>
Series<C> sqrt1(const Series<C>& a) {
    if (!(a[0] == C(1))) throw BadConstantTerm();
    int n = a.order();
    Series<C> s = Series<C>::one(n);
    const C two(2);
    for (int k = 1; k <= n; ++k) {
        C acc = a[k];
        for (int i = 1; i < k; ++i) acc = acc - s[i] * s[k - i];
        s.at(k) = exact_div(acc, two);
    }
    return s;
}

template <Coefficient C>
Series<C> series_pow(const Series<C>& a, long e) {
    if (e < 0) return div(Series<C>::one(a.order()), series_pow(a, -e));
    Series<C> r = Series<C>::one(a.order());
    Series<C> base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Builds num(x)/den(x) from polynomial coefficient lists.
template <Coefficient C>
Series<C> rational_gf(const std::vector<C>& num, const std::vector<C>& den, int order) {
    return div(Series<C>::from_coeffs(num, order), Series<C>::from_coeffs(den, order));
}

/// The Catalan generating function c(x) = (1 - sqrt(1-4x)) / (2x),
/// satisfying c = 1 + x c^2.
template <Coefficient C>
Series<C> catalan_series(int order) {
    Series<C> inner = Series<C>::from_coeffs({C(1), C(-4)}, order + 1);
    Series<C> s = Series<C>::one(order + 1) - sqrt1(inner);
    return divide_coeff(shift_down(s, 1), C(2));
}

/// The unique series with g(0)=1 solving g = 1 + x g^k, computed as
/// 1 + Rev(x/(1+x)^k).
template <Coefficient C>
Series<C> solve_gk(int k, int order) {
    if (k < 1) throw Error("solve_gk requires k >= 1");
    Series<C> onepx = Series<C>::from_coeffs({C(1), C(1)}, order);
    Series<C> f = div(Series<C>::x(order), series_pow(onepx, k));
    Series<C> g = revert(f);
    g.at(0) = g[0] + C(1);
    return g;
}

/// The ternary-tree series t(x) = 1 + x t^3.
template <Coefficient C>
Series<C> ternary_series(int order) {
    return solve_gk<C>(3, order);
}

}  // namespace riocalc
