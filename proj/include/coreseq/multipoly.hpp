#pragma once

// Sparse polynomials in up to three variables x1, x2, x3 with nonnegative
// exponents; used for the multi-variable substitution sums.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "detail/terms.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace coreseq {

class MultiPoly {
public:
    static constexpr std::size_t max_vars = 3;
    using exponent = std::array<long, max_vars>;
    using support_map = std::map<exponent, Rational>;

    MultiPoly() = default;
    MultiPoly(Rational c) {
        if (c != 0) s_.emplace(exponent{0, 0, 0}, std::move(c));
    }
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly monomial(Rational c, exponent e) {
        MultiPoly p;
        if (c != 0) p.s_.emplace(e, std::move(c));
        return p;
    }
    static MultiPoly var(std::size_t i) {
        exponent e{0, 0, 0};
        e.at(i) = 1;
        return monomial(1, e);
    }

    support_map const& terms() const { return s_; }
    bool is_zero() const { return s_.empty(); }
    std::size_t size() const { return s_.size(); }

    long total_degree() const {
        long d = -1;
        for (auto const& [e, c] : s_) d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }

    MultiPoly& operator+=(MultiPoly const& o) {
        for (auto const& [e, c] : o.s_) add_term(e, c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, MultiPoly const& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a) {
        for (auto& [e, c] : a.s_) c = -c;
        return a;
    }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const& b) { return a += -b; }
    friend MultiPoly operator*(MultiPoly const& a, MultiPoly const& b) {
        MultiPoly r;
        for (auto const& [ea, ca] : a.s_)
            for (auto const& [eb, cb] : b.s_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    MultiPoly& operator*=(MultiPoly const& o) { return *this = *this * o; }
    friend bool operator==(MultiPoly const&, MultiPoly const&) = default;

    std::string to_string() const {
        detail::sum_writer w;
        for (auto const& [e, c] : s_) {
            std::string mono;
            for (std::size_t i = 0; i < max_vars; ++i) {
                std::string f = detail::power_string("x" + std::to_string(i + 1), e[i]);
                if (f.empty()) continue;
                mono += (mono.empty() ? "" : "*") + f;
            }
            w.add(c, mono);
        }
        return w.str();
    }

    static MultiPoly parse(std::string_view text) {
        MultiPoly p;
        for (auto const& t : detail::parse_terms(text, {"x1", "x2", "x3"}, false))
            p.add_term({t.exps[0], t.exps[1], t.exps[2]}, t.coef);
        return p;
    }

private:
    support_map s_;

    void add_term(exponent const& e, Rational const& c) {
        if (c == 0) return;
        auto [it, inserted] = s_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) s_.erase(it);
        }
    }
};

inline MultiPoly pow(MultiPoly const& base, unsigned long e) {
    MultiPoly r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

} // namespace coreseq
