#pragma once

/**
 * @file bipoly.hpp
 * @brief Sparse bivariate polynomials in t1, t2.
 */

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "detail/terms.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace coreseq {

class BiPoly {
public:
    using exponent = std::pair<long, long>;
    using support_map = std::map<exponent, Rational>;

    BiPoly() = default;
    BiPoly(Rational c) {
        if (c != 0) s_.emplace(exponent{0, 0}, std::move(c));
    }
    BiPoly(int c) : BiPoly(Rational(c)) {}

    static BiPoly monomial(Rational c, long i, long j) {
        BiPoly p;
        if (c != 0) p.s_.emplace(exponent{i, j}, std::move(c));
        return p;
    }
    static BiPoly t1() { return monomial(1, 1, 0); }
    static BiPoly t2() { return monomial(1, 0, 1); }

    /// Embeds a univariate polynomial along one axis (0 = t1, 1 = t2).
    static BiPoly from_axis(UniPoly const& u, int axis) {
        BiPoly p;
        for (std::size_t k = 0; k < u.coeffs().size(); ++k)
            p.add_term(axis == 0 ? exponent{long(k), 0} : exponent{0, long(k)}, u.coeffs()[k]);
        return p;
    }

    support_map const& terms() const { return s_; }
    bool is_zero() const { return s_.empty(); }

    Rational coeff(long i, long j) const {
        auto it = s_.find({i, j});
        return it == s_.end() ? Rational(0) : it->second;
    }
    long total_degree() const {
        long d = -1;
        for (auto const& [e, c] : s_) d = std::max(d, e.first + e.second);
        return d;
    }
    long degree_in(int axis) const {
        long d = -1;
        for (auto const& [e, c] : s_) d = std::max(d, axis == 0 ? e.first : e.second);
        return d;
    }

    /// Substitutes a value for one variable; the result is a polynomial in the other.
    UniPoly substitute(int axis, Rational const& value) const {
        UniPoly r;
        for (auto const& [e, c] : s_) {
            long keep = axis == 0 ? e.second : e.first;
            long gone = axis == 0 ? e.first : e.second;
            r += UniPoly::monomial(c * pow(value, static_cast<unsigned long>(gone)), static_cast<std::size_t>(keep));
        }
        return r;
    }

    Rational operator()(Rational const& x1, Rational const& x2) const {
        Rational acc = 0;
        for (auto const& [e, c] : s_)
            acc += c * pow(x1, static_cast<unsigned long>(e.first)) * pow(x2, static_cast<unsigned long>(e.second));
        return acc;
    }

    BiPoly& operator+=(BiPoly const& o) {
        for (auto const& [e, c] : o.s_) add_term(e, c);
        return *this;
    }
    BiPoly& operator-=(BiPoly const& o) {
        for (auto const& [e, c] : o.s_) add_term(e, -c);
        return *this;
    }
    BiPoly& operator*=(BiPoly const& o) { return *this = *this * o; }

    friend BiPoly operator+(BiPoly a, BiPoly const& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, BiPoly const& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) {
        for (auto& [e, c] : a.s_) c = -c;
        return a;
    }
    friend BiPoly operator*(BiPoly const& a, BiPoly const& b) {
        BiPoly r;
        for (auto const& [ea, ca] : a.s_)
            for (auto const& [eb, cb] : b.s_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    friend BiPoly operator*(BiPoly a, Rational const& k) {
        if (k == 0) return {};
        for (auto& [e, c] : a.s_) c *= k;
        return a;
    }
    friend bool operator==(BiPoly const&, BiPoly const&) = default;

    /// Terms ordered by total degree, then by descending t1 exponent.
    std::string to_string(std::string const& v1 = "t1", std::string const& v2 = "t2") const {
        std::map<std::pair<long, long>, std::pair<exponent, Rational>> order;
        for (auto const& [e, c] : s_) order.emplace(std::pair{e.first + e.second, -e.first}, std::pair{e, c});
        detail::sum_writer w;
        for (auto const& [k, ec] : order) {
            auto const& [e, c] = ec;
            std::string a = detail::power_string(v1, e.first);
            std::string b = detail::power_string(v2, e.second);
            w.add(c, a.empty() ? b : (b.empty() ? a : a + "*" + b));
        }
        return w.str();
    }

    static BiPoly parse(std::string_view text, std::string const& v1 = "t1", std::string const& v2 = "t2") {
        BiPoly p;
        for (auto const& t : detail::parse_terms(text, {v1, v2}, false)) p.add_term({t.exps[0], t.exps[1]}, t.coef);
        return p;
    }

private:
    support_map s_;

    void add_term(exponent e, Rational const& c) {
        if (c == 0) return;
        auto [it, inserted] = s_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) s_.erase(it);
        }
    }
};

} // namespace coreseq
