#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in the syzygy symbol w (written Ω in the math).
 *
 * Text form: a signed sum of terms `c`, `c*w^e`, `w^e`, `w` with integer
 * (or p/q) coefficients and possibly negative exponents, e.g.
 * `2*w^-1 + w^3` or `3*w^3 - 3*w^-1`. Printing emits terms in increasing
 * exponent order, so parse(print(x)) == x.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "detail/terms.hpp"
#include "rational.hpp"

namespace coreseq {

class LaurentPoly {
public:
    using support_map = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(Rational c) {
        if (c != 0) s_.emplace(0, std::move(c));
    }
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(Rational c, long e) {
        LaurentPoly p;
        if (c != 0) p.s_.emplace(e, std::move(c));
        return p;
    }
    static LaurentPoly w() { return monomial(1, 1); }

    support_map const& terms() const { return s_; }
    bool is_zero() const { return s_.empty(); }
    std::size_t size() const { return s_.size(); }

    Rational coeff(long e) const {
        auto it = s_.find(e);
        return it == s_.end() ? Rational(0) : it->second;
    }
    std::optional<long> min_exp() const {
        if (s_.empty()) return std::nullopt;
        return s_.begin()->first;
    }
    std::optional<long> max_exp() const {
        if (s_.empty()) return std::nullopt;
        return s_.rbegin()->first;
    }

    /// Sum of coefficients (w = 1).
    Rational eval_one() const {
        Rational acc = 0;
        for (auto const& [e, c] : s_) acc += c;
        return acc;
    }

    /// Value at a nonzero rational point.
    Rational eval(Rational const& x) const {
        Rational acc = 0;
        for (auto const& [e, c] : s_) {
            Rational xe = e >= 0 ? pow(x, static_cast<unsigned long>(e)) : Rational(1 / pow(x, static_cast<unsigned long>(-e)));
            acc += c * xe;
        }
        return acc;
    }

    /// All coefficients are nonnegative integers (an element of N[w^±1]).
    bool is_natural() const {
        for (auto const& [e, c] : s_)
            if (c < 0 || !is_integer(c)) return false;
        return true;
    }
    bool has_negative_exponent() const { return !s_.empty() && s_.begin()->first < 0; }
    bool has_positive_exponent() const { return !s_.empty() && s_.rbegin()->first > 0; }

    LaurentPoly& operator+=(LaurentPoly const& o) {
        for (auto const& [e, c] : o.s_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(LaurentPoly const& o) {
        for (auto const& [e, c] : o.s_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(LaurentPoly const& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.s_) c = -c;
        return a;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
        LaurentPoly r;
        for (auto const& [ea, ca] : a.s_)
            for (auto const& [eb, cb] : b.s_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(LaurentPoly a, Rational const& k) {
        if (k == 0) return {};
        for (auto& [e, c] : a.s_) c *= k;
        return a;
    }
    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

    /// Multiplies by w^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (auto const& [e, c] : s_) r.s_.emplace_hint(r.s_.end(), e + k, c);
        return r;
    }

    std::string to_string(std::string const& var = "w") const {
        detail::sum_writer wr;
        for (auto const& [e, c] : s_) wr.add(c, detail::power_string(var, e));
        return wr.str();
    }

    static LaurentPoly parse(std::string_view text, std::string const& var = "w") {
        LaurentPoly p;
        for (auto const& t : detail::parse_terms(text, {var}, true)) p.add_term(t.exps[0], t.coef);
        return p;
    }

private:
    support_map s_;

    void add_term(long e, Rational const& c) {
        if (c == 0) return;
        auto [it, inserted] = s_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) s_.erase(it);
        }
    }
};

inline LaurentPoly laurent_parse(std::string_view text) { return LaurentPoly::parse(text); }
inline LaurentPoly laurent_mul(LaurentPoly const& a, LaurentPoly const& b) { return a * b; }
inline Rational laurent_eval_one(LaurentPoly const& a) { return a.eval_one(); }

inline LaurentPoly pow(LaurentPoly const& base, unsigned long e) {
    LaurentPoly r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

} // namespace coreseq
