#pragma once

/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored lowest degree first and trimmed so that the
 * leading coefficient is nonzero; the zero polynomial has no coefficients
 * and degree -1.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detail/terms.hpp"
#include "rational.hpp"

namespace coreseq {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    UniPoly(int c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(Rational c, std::size_t e) {
        std::vector<Rational> v(e + 1);
        v[e] = std::move(c);
        return UniPoly(std::move(v));
    }
    static UniPoly x() { return monomial(1, 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::vector<Rational> const& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(Rational const& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly& operator+=(UniPoly const& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(UniPoly const& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(UniPoly const& o) { return *this = *this * o; }

    friend UniPoly operator+(UniPoly a, UniPoly const& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, UniPoly const& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend UniPoly operator*(UniPoly const& a, UniPoly const& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(UniPoly a, Rational const& s) {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }
    friend bool operator==(UniPoly const&, UniPoly const&) = default;

    /// Euclidean division; `divisor` must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(UniPoly const& divisor) const {
        if (divisor.is_zero()) throw invalid_argument("polynomial division by zero");
        std::vector<Rational> rem = c_;
        long dd = divisor.degree();
        long nd = degree();
        if (nd < dd) return {UniPoly(), *this};
        std::vector<Rational> q(static_cast<std::size_t>(nd - dd + 1));
        Rational lead_inv = 1 / divisor.leading();
        for (long k = nd - dd; k >= 0; --k) {
            Rational f = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
            q[static_cast<std::size_t>(k)] = f;
            if (f == 0) continue;
            for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (1 / leading());
    }

    /// Polynomial with coefficients reversed over `deg + 1` slots: t^deg p(1/t).
    UniPoly reversed(std::size_t deg) const {
        std::vector<Rational> r(deg + 1);
        for (std::size_t i = 0; i < c_.size() && i <= deg; ++i) r[deg - i] = c_[i];
        return UniPoly(std::move(r));
    }

    /// Truncation to degrees < n.
    UniPoly truncated(std::size_t n) const {
        std::vector<Rational> r(c_.begin(), c_.begin() + static_cast<long>(std::min(n, c_.size())));
        return UniPoly(std::move(r));
    }

    std::string to_string(std::string const& var = "t") const {
        detail::sum_writer w;
        for (std::size_t i = 0; i < c_.size(); ++i) w.add(c_[i], detail::power_string(var, static_cast<long>(i)));
        return w.str();
    }

    static UniPoly parse(std::string_view text, std::string const& var = "t") {
        UniPoly p;
        for (auto const& t : detail::parse_terms(text, {var}, false))
            p += monomial(t.coef, static_cast<std::size_t>(t.exps[0]));
        return p;
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Monic gcd (zero when both inputs are zero).
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Product of power series truncated to degrees < n.
inline UniPoly mul_trunc(UniPoly const& a, UniPoly const& b, std::size_t n) {
    std::vector<Rational> r(n);
    auto const& ac = a.coeffs();
    auto const& bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size() && i < n; ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size() && i + j < n; ++j) r[i + j] += ac[i] * bc[j];
    }
    return UniPoly(std::move(r));
}

/// First n power-series coefficients of num/den; den(0) must be nonzero.
inline std::vector<Rational> series_expand(UniPoly const& num, UniPoly const& den, std::size_t n) {
    if (den.coeff(0) == 0) throw invalid_argument("series_expand: denominator has zero constant term");
    std::vector<Rational> out(n);
    Rational inv0 = 1 / den.coeff(0);
    auto const& d = den.coeffs();
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = num.coeff(k);
        for (std::size_t i = 1; i < d.size() && i <= k; ++i) acc -= d[i] * out[k - i];
        out[k] = acc * inv0;
    }
    return out;
}

} // namespace coreseq
