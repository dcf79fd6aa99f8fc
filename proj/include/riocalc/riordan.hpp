#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riocalc/poly.hpp"
#include "riocalc/series.hpp"

namespace riocalc {

/// Dense lower-triangular matrix over an exact coefficient ring.
template <Coefficient C>
class LowerTriMatrix {
public:
    explicit LowerTriMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, C(0)) {}

    static LowerTriMatrix identity(int n) {
        LowerTriMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, C(1));
        return m;
    }

    int size() const { return n_; }

    const C& entry(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, C v) {
        if (j > i && !is_zero(v)) throw Error("entry above the diagonal must be zero");
        e_[static_cast<size_t>(i) * n_ + j] = std::move(v);
    }

    friend LowerTriMatrix operator*(const LowerTriMatrix& a, const LowerTriMatrix& b) {
        if (a.n_ != b.n_) throw Error("matrix size mismatch");
        LowerTriMatrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j <= i; ++j) {
                C acc(0);
                for (int k = j; k <= i; ++k) acc = acc + a.entry(i, k) * b.entry(k, j);
                r.set(i, j, std::move(acc));
            }
        return r;
    }

    friend bool operator==(const LowerTriMatrix& a, const LowerTriMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    /// Row-reversed triangle: entry(n, k) of the result is entry(n, n-k).
    LowerTriMatrix reversed_rows() const {
        LowerTriMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= i; ++j) r.set(i, j, entry(i, i - j));
        return r;
    }

    /// One row per line, entries joined with " & ".
    std::string str() const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (j) out += " & ";
                out += to_text(entry(i, j));
            }
            out += "\n";
        }
        return out;
    }

private:
    int n_;
    std::vector<C> e_;
};

/// Exact inverse of a lower-triangular matrix by forward substitution.
template <Coefficient C>
LowerTriMatrix<C> matrix_inverse(const LowerTriMatrix<C>& m) {
    int n = m.size();
    for (int i = 0; i < n; ++i)
        if (!is_unit(m.entry(i, i))) throw SingularMatrix();
    LowerTriMatrix<C> x(n);
    for (int j = 0; j < n; ++j) {
        x.set(j, j, inv_unit(m.entry(j, j)));
        for (int i = j + 1; i < n; ++i) {
            C acc(0);
            for (int k = j; k < i; ++k) acc = acc + m.entry(i, k) * x.entry(k, j);
            x.set(i, j, exact_div(-acc, m.entry(i, i)));
        }
    }
    return x;
}

/// Lower-Hessenberg matrix (entries with column > row + 1 are zero).
template <Coefficient C>
class ProductionMatrix {
public:
    explicit ProductionMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, C(0)) {}

    int size() const { return n_; }
    const C& entry(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, C v) {
        if (j > i + 1 && !is_zero(v)) throw Error("entry beyond the superdiagonal must be zero");
        e_[static_cast<size_t>(i) * n_ + j] = std::move(v);
    }
    friend bool operator==(const ProductionMatrix& a, const ProductionMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    std::string str() const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (j) out += " & ";
                out += to_text(entry(i, j));
            }
            out += "\n";
        }
        return out;
    }

private:
    int n_;
    std::vector<C> e_;
};

/// A Riordan-group element (g, f): g(0) a unit, f(0) = 0, f'(0) a unit.
/// Both series share one truncation order.
template <Coefficient C>
class RiordanPair {
public:
    RiordanPair(Series<C> g, Series<C> f) : g_(std::move(g)), f_(std::move(f)) {
        if (g_.order() != f_.order()) {
            int n = std::min(g_.order(), f_.order());
            g_ = g_.truncated(n);
            f_ = f_.truncated(n);
        }
        if (!is_unit(g_[0])) throw InvalidPair("g(0) must be a unit");
        if (f_.order() < 1 || !is_zero(f_[0])) throw InvalidPair("f(0) must be 0");
        if (!is_unit(f_[1])) throw InvalidPair("f'(0) must be a unit");
    }

    static RiordanPair identity(int order) {
        return RiordanPair(Series<C>::one(order), Series<C>::x(order));
    }

    const Series<C>& g() const { return g_; }
    const Series<C>& f() const { return f_; }
    int order() const { return g_.order(); }

    /// t(n, k) = [x^n] g f^k
    C entry(int n, int k) const {
        if (n < 0 || k < 0 || k > n) return C(0);
        if (n > order()) throw TruncationExceeded();
        Series<C> col = g_;
        for (int i = 0; i < k; ++i) col = col * f_;
        return col[n];
    }

    /// n x n truncation of the matrix representation.
    LowerTriMatrix<C> to_matrix(int n) const {
        if (n - 1 > order()) throw TruncationExceeded();
        LowerTriMatrix<C> m(n);
        Series<C> col = g_;
        for (int k = 0; k < n; ++k) {
            if (k > 0) col = col * f_;
            for (int i = k; i < n; ++i) m.set(i, k, col[i]);
        }
        return m;
    }

private:
    Series<C> g_, f_;
};

/// Group law: (g, f) . (u, v) = (g * u(f), v(f)).
template <Coefficient C>
RiordanPair<C> rmul(const RiordanPair<C>& a, const RiordanPair<C>& b) {
    return RiordanPair<C>(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

/// Group inverse: (1/g(fbar), fbar) with fbar the compositional inverse of f.
template <Coefficient C>
RiordanPair<C> rinv(const RiordanPair<C>& a) {
    Series<C> fbar = revert(a.f());
    return RiordanPair<C>(div(Series<C>::one(a.order()), compose(a.g(), fbar)), fbar);
}

/// Action on a power series: (g, f) . h = g * h(f); equals the matrix
/// representation acting on h's coefficient column.
template <Coefficient C>
Series<C> apply(const RiordanPair<C>& r, const Series<C>& h) {
    return r.g() * compose(h, r.f());
}

template <Coefficient C>
struct InvolutionWitness {
    int row = 0, col = 0;
    C got{};
    C expected{};
};

template <Coefficient C>
struct InvolutionReport {
    bool holds = false;
    std::optional<InvolutionWitness<C>> witness;
};

/// Checks R * R = (1, x), both as series to order n-1 and as an n x n matrix
/// square; the two routes must agree.
template <Coefficient C>
InvolutionReport<C> involution_check(const RiordanPair<C>& r, int n) {
    RiordanPair<C> sq = rmul(r, r);
    bool series_ok = true;
    for (int i = 0; i <= std::min(n - 1, sq.order()) && series_ok; ++i) {
        if (!(sq.g()[i] == (i == 0 ? C(1) : C(0)))) series_ok = false;
        if (!(sq.f()[i] == (i == 1 ? C(1) : C(0)))) series_ok = false;
    }
    LowerTriMatrix<C> m = r.to_matrix(n);
    LowerTriMatrix<C> msq = m * m;
    LowerTriMatrix<C> id = LowerTriMatrix<C>::identity(n);
    InvolutionReport<C> rep;
    rep.holds = true;
    for (int i = 0; i < n && !rep.witness; ++i)
        for (int j = 0; j <= i; ++j) {
            if (!(msq.entry(i, j) == id.entry(i, j))) {
                rep.holds = false;
                rep.witness = InvolutionWitness<C>{i, j, msq.entry(i, j), id.entry(i, j)};
                break;
            }
        }
    if (series_ok != rep.holds) throw Error("involution routes disagree");
    return rep;
}

template <Coefficient C>
struct AZPair {
    Series<C> a, z;
};

/// A(x) = x / fbar,  Z(x) = (1/fbar)(1 - 1/g(fbar)); requires g(0) = 1 for Z
/// to be a power series.
template <Coefficient C>
AZPair<C> az_sequences(const RiordanPair<C>& r) {
    Series<C> fbar = revert(r.f());
    Series<C> a = div(Series<C>::one(fbar.order() - 1), shift_down(fbar, 1));
    Series<C> w = Series<C>::one(fbar.order()) - div(Series<C>::one(fbar.order()), compose(r.g(), fbar));
    Series<C> z = div(shift_down(w, 1), shift_down(fbar, 1));
    return {std::move(a), std::move(z)};
}

/// Production matrix via the A/Z generating functions: column 0 holds Z's
/// coefficients, column j >= 1 holds A shifted down by j - 1.
template <Coefficient C>
ProductionMatrix<C> production_matrix_series(const RiordanPair<C>& r, int n) {
    AZPair<C> az = az_sequences(r);
    if (az.a.order() < n - 1) throw TruncationExceeded();
    ProductionMatrix<C> p(n);
    for (int i = 0; i < n; ++i) {
        p.set(i, 0, az.z[i]);
        for (int j = 1; j <= std::min(i + 1, n - 1); ++j) p.set(i, j, az.a[i - j + 1]);
    }
    return p;
}

/// Production matrix as M^{-1} * (M with its first row removed).
template <Coefficient C>
ProductionMatrix<C> production_matrix_matrix(const RiordanPair<C>& r, int n) {
    LowerTriMatrix<C> m = r.to_matrix(n + 1);
    LowerTriMatrix<C> minv = matrix_inverse(m);
    ProductionMatrix<C> p(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= std::min(i + 1, n - 1); ++j) {
            C acc(0);
            for (int k = j > 0 ? j - 1 : 0; k <= i; ++k)
                acc = acc + minv.entry(i, k) * m.entry(k + 1, j);
            p.set(i, j, std::move(acc));
        }
    return p;
}

/// Computes the production matrix by both routes and insists they agree.
template <Coefficient C>
ProductionMatrix<C> production_matrix(const RiordanPair<C>& r, int n) {
    ProductionMatrix<C> by_series = production_matrix_series(r, n);
    ProductionMatrix<C> by_matrix = production_matrix_matrix(r, n);
    if (!(by_series == by_matrix)) throw Error("production matrix routes disagree");
    return by_matrix;
}

/// First column of the inverse of a parameter-carrying array: entry n is the
/// moment polynomial mu_n(u).  The f-part must be u-free.
template <Coefficient C>
std::vector<Poly<C>> moment_polys(const RiordanPair<Poly<C>>& family, int count) {
    for (int i = 0; i <= family.order(); ++i)
        if (family.f()[i].degree() > 0) throw Error("moment family requires a parameter-free f");
    if (count - 1 > family.order()) throw TruncationExceeded();
    RiordanPair<Poly<C>> inv = rinv(family);
    std::vector<Poly<C>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(inv.g()[i]);
    return out;
}

/// Coefficient array of the moment polynomials: row r, column k holds the
/// u^k coefficient of mu_r(u).
template <Coefficient C>
LowerTriMatrix<C> moment_coefficient_array(const RiordanPair<Poly<C>>& family, int n) {
    std::vector<Poly<C>> mu = moment_polys(family, n);
    LowerTriMatrix<C> m(n);
    for (int r = 0; r < n; ++r) {
        if (mu[r].degree() > r) throw Error("moment polynomial degree exceeds its row");
        for (int k = 0; k <= r; ++k) m.set(r, k, mu[r].coeff(k));
    }
    return m;
}

using RatSeries = Series<Rational>;
using RatPair = RiordanPair<Rational>;
using RatMatrix = LowerTriMatrix<Rational>;

}  // namespace riocalc
