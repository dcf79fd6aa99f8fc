#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "riocalc/riordan.hpp"
#include "riocalc/series.hpp"

namespace riocalc {

template <Coefficient C>
struct JTail {
    C alpha, beta;
};

/// Recurrence data alpha_0, alpha_1, ... and beta_1, beta_2, ... for monic
/// polynomials p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}, with an optional
/// eventually-periodic tail.  A missing tail means the data terminates (all
/// further coefficients are zero).
template <Coefficient C>
class RecurrencePair {
public:
    RecurrencePair() = default;
    RecurrencePair(std::vector<C> alphas, std::vector<C> betas,
                   std::optional<JTail<C>> tail = std::nullopt)
        : alphas_(std::move(alphas)), betas_(std::move(betas)), tail_(std::move(tail)) {
        for (const C& b : betas_)
            if (is_zero(b)) throw ZeroBeta();
        if (tail_ && is_zero(tail_->beta)) throw ZeroBeta();
    }

    const std::vector<C>& alphas() const { return alphas_; }
    const std::vector<C>& betas() const { return betas_; }
    const std::optional<JTail<C>>& tail() const { return tail_; }

    C alpha(int k) const {
        if (k < static_cast<int>(alphas_.size())) return alphas_[k];
        if (tail_) return tail_->alpha;
        return C(0);
    }
    /// beta(k) for k >= 1; zero past the stored data when there is no tail.
    C beta(int k) const {
        if (k >= 1 && k - 1 < static_cast<int>(betas_.size())) return betas_[k - 1];
        if (tail_) return tail_->beta;
        return C(0);
    }
    bool beta_known(int k) const {
        return tail_.has_value() || (k >= 1 && k - 1 < static_cast<int>(betas_.size()));
    }

private:
    std::vector<C> alphas_;
    std::vector<C> betas_;
    std::optional<JTail<C>> tail_;
};

/// A Jacobi continued fraction
///   mu0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - beta_2 x^2 / ...))
template <Coefficient C>
class JFraction {
public:
    JFraction(C mu0, std::vector<C> alphas, std::vector<C> betas,
              std::optional<JTail<C>> tail = std::nullopt)
        : mu0_(std::move(mu0)), rec_(std::move(alphas), std::move(betas), std::move(tail)) {}
    JFraction(C mu0, RecurrencePair<C> rec) : mu0_(std::move(mu0)), rec_(std::move(rec)) {}

    const C& mu0() const { return mu0_; }
    const RecurrencePair<C>& rec() const { return rec_; }
    C alpha(int k) const { return rec_.alpha(k); }
    C beta(int k) const { return rec_.beta(k); }

private:
    C mu0_;
    RecurrencePair<C> rec_;
};

/// Expands a J-fraction to its moment generating function, truncated at N.
template <Coefficient C>
Series<C> jfraction_to_series(const JFraction<C>& j, int order) {
    int levels = order / 2 + 1;
    Series<C> g = Series<C>::one(order);
    for (int k = levels - 1; k >= 0; --k) {
        Series<C> den = Series<C>::one(order);
        den.at(1) = -j.alpha(k);
        den = den - shift_up(scale(g, j.beta(k + 1)), 2);
        g = div(Series<C>::one(order), den);
    }
    return scale(g, j.mu0());
}

/// Recovers a J-fraction from a series by layer peeling:
///   r = 1 - mu0/g;  alpha_k = [x] r;  beta_{k+1} = [x^2](r - alpha_k x);
///   next g = (r - alpha_k x) / (beta_{k+1} x^2).
/// Extracts `depth` alphas and betas; requires order >= 2*depth.  A vanishing
/// beta signals a Hankel-degenerate moment sequence.
template <Coefficient C>
JFraction<C> series_to_jfraction(const Series<C>& a, int depth) {
    if (!is_unit(a[0])) throw NonUnitConstantTerm();
    if (a.order() < 2 * depth) throw TruncationExceeded();
    C mu0 = a[0];
    std::vector<C> alphas, betas;
    Series<C> g = a;
    for (int k = 0; k < depth; ++k) {
        // every level past the first is normalized to constant term 1
        Series<C> r = Series<C>::one(g.order()) - scale(div(Series<C>::one(g.order()), g), g[0]);
        alphas.push_back(r[1]);
        r.at(1) = C(0);
        C beta = r[2];
        if (is_zero(beta)) throw HankelDegenerate(k + 1);
        betas.push_back(beta);
        g = divide_coeff(shift_down(r, 2), beta);
    }
    return JFraction<C>(std::move(mu0), std::move(alphas), std::move(betas));
}

/// Heilermann's determinant formula: h_n = mu0^{n+1} prod_k beta_k^{n+1-k}.
template <Coefficient C>
C heilermann(const JFraction<C>& j, int n) {
    for (int k = 1; k <= n; ++k)
        if (!j.rec().beta_known(k)) throw NotEnoughTerms();
    C h = int_pow(j.mu0(), n + 1);
    for (int k = 1; k <= n; ++k) h = h * int_pow(j.beta(k), n + 1 - k);
    return h;
}

/// Coefficient rows of the monic orthogonal polynomials defined by the
/// three-term recurrence.
template <Coefficient C>
LowerTriMatrix<C> favard_array(const RecurrencePair<C>& rec, int n) {
    LowerTriMatrix<C> m(n);
    std::vector<C> prev, cur{C(1)};
    m.set(0, 0, C(1));
    for (int r = 1; r < n; ++r) {
        // p_r = (x - alpha_{r-1}) p_{r-1} - beta_{r-1} p_{r-2}
        std::vector<C> next(r + 1, C(0));
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] = next[i + 1] + cur[i];
            next[i] = next[i] - rec.alpha(r - 1) * cur[i];
        }
        if (r >= 2) {
            C b = rec.beta(r - 1);
            for (size_t i = 0; i < prev.size(); ++i) next[i] = next[i] - b * prev[i];
        }
        for (int k = 0; k <= r; ++k) m.set(r, k, next[k]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return m;
}

}  // namespace riocalc
