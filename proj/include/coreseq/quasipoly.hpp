#pragma once

/**
 * @file quasipoly.hpp
 * @brief Quasipolynomials a_n = P_{n mod T}(n), valid from a start index.
 *
 * Text form: `quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]`.
 */

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfinite.hpp"
#include "error.hpp"
#include "unipoly.hpp"

namespace coreseq {

struct QuasiPoly {
    std::size_t period = 1;
    std::vector<UniPoly> polys{UniPoly()};
    std::size_t start = 0;

    QuasiPoly() = default;
    QuasiPoly(std::size_t t, std::vector<UniPoly> ps, std::size_t n0 = 0) : period(t), polys(std::move(ps)), start(n0) {
        if (period == 0) throw invalid_argument("quasiperiod must be at least 1");
        if (polys.size() != period)
            throw invalid_argument("quasipolynomial needs " + std::to_string(period) + " polynomials, got " +
                                   std::to_string(polys.size()));
    }

    long degree() const {
        long d = -1;
        for (auto const& p : polys) d = std::max(d, p.degree());
        return d;
    }

    /// P_{n mod T}(n) without the start check; callers that need values
    /// below the threshold ask for them explicitly.
    Rational extrapolate(long n) const {
        long t = static_cast<long>(period);
        return polys[static_cast<std::size_t>(((n % t) + t) % t)](Rational(n));
    }

    std::string to_string() const {
        std::string s = "quasipoly T=" + std::to_string(period) + " start=" + std::to_string(start) + " polys=[";
        for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? "; " : "") + polys[i].to_string("n");
        return s + "]";
    }

    static QuasiPoly parse(std::string_view text) {
        std::size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        auto expect = [&](std::string_view word) {
            skip();
            if (text.substr(i, word.size()) != word) throw parse_error("expected '" + std::string(word) + "'", i);
            i += word.size();
        };
        auto integer = [&]() {
            skip();
            std::size_t b = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (b == i) throw parse_error("expected a nonnegative integer", b);
            return static_cast<std::size_t>(std::stoull(std::string(text.substr(b, i - b))));
        };
        expect("quasipoly");
        expect("T");
        expect("=");
        std::size_t t = integer();
        expect("start");
        expect("=");
        std::size_t n0 = integer();
        expect("polys");
        expect("=");
        expect("[");
        std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) throw parse_error("missing ']'", text.size());
        std::vector<UniPoly> ps;
        std::size_t b = i;
        while (true) {
            std::size_t e = text.find(';', b);
            if (e == std::string_view::npos || e > close) e = close;
            try {
                ps.push_back(UniPoly::parse(text.substr(b, e - b), "n"));
            } catch (parse_error const& err) {
                throw parse_error(err.message, b + err.position);
            }
            if (e == close) break;
            b = e + 1;
        }
        i = close + 1;
        skip();
        if (i != text.size()) throw parse_error("trailing characters after quasipolynomial", i);
        if (t == 0) throw parse_error("quasiperiod must be at least 1", 0);
        if (ps.size() != t)
            throw parse_error("T=" + std::to_string(t) + " but " + std::to_string(ps.size()) + " polynomials given", close);
        return QuasiPoly(t, std::move(ps), n0);
    }

    friend bool operator==(QuasiPoly const&, QuasiPoly const&) = default;
};

inline Rational qp_eval(QuasiPoly const& q, std::size_t n) {
    if (n < q.start)
        throw invalid_argument("quasipolynomial evaluated at n=" + std::to_string(n) + " below its start " +
                               std::to_string(q.start));
    return q.extrapolate(static_cast<long>(n));
}

/// Recurrence with characteristic polynomial (x^T - 1)^(D+1). Without
/// `below_start` the values under the threshold are extrapolated from the
/// polynomials and the recurrence holds from index 0 on; with it, those
/// values are taken as given.
inline CFiniteSeq qp_to_cfinite(QuasiPoly const& q, std::optional<std::vector<Rational>> below_start = {}) {
    std::size_t t = q.period;
    std::size_t d1 = static_cast<std::size_t>(std::max(0L, q.degree()) + 1);
    UniPoly base = UniPoly::monomial(1, t) - UniPoly(1);
    UniPoly chi = 1;
    for (std::size_t k = 0; k < d1; ++k) chi = chi * base;
    std::size_t r = t * d1;
    std::size_t v = below_start ? q.start + r : r;
    if (below_start && below_start->size() != q.start)
        throw invalid_argument("explicit prefix must cover exactly the indices below start");
    std::vector<Rational> init;
    for (std::size_t n = 0; n < v; ++n)
        init.push_back(below_start && n < q.start ? (*below_start)[n] : q.extrapolate(static_cast<long>(n)));
    auto seq = CFiniteSeq::from_char_poly(chi, std::move(init), v);
    std::size_t window = q.start + 3 * t * (d1 + 1);
    auto x = seq.terms(window);
    for (std::size_t n = q.start; n < window; ++n)
        if (x[n] != q.extrapolate(static_cast<long>(n))) throw integrity_error("qp_to_cfinite: recurrence disagrees with quasipolynomial");
    return seq;
}

/// Polynomial through the points (x_i, y_i), distinct x_i.
inline UniPoly interpolate(std::vector<std::pair<Rational, Rational>> const& pts) {
    UniPoly out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        UniPoly basis = 1;
        Rational den = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(std::vector<Rational>{-pts[j].first, 1});
            den *= pts[i].first - pts[j].first;
        }
        out += basis * Rational(pts[i].second / den);
    }
    return out;
}

/// Smallest (T, d, n0) quasipolynomial matching values[k] at index
/// first_index + k for every index >= n0. Each residue class needs d + 2
/// samples at or beyond n0 so that every fit is checked by at least one
/// sample it was not interpolated from.
inline std::optional<QuasiPoly> qp_fit(std::vector<Rational> const& values, std::size_t first_index, std::size_t t_max,
                                       std::size_t d_max, std::size_t n0_max) {
    std::size_t last = first_index + values.size();
    for (std::size_t t = 1; t <= t_max; ++t)
        for (std::size_t d = 0; d <= d_max; ++d)
            for (std::size_t n0 = first_index; n0 <= std::max(n0_max, first_index); ++n0) {
                std::vector<UniPoly> ps(t);
                bool ok = true;
                for (std::size_t j = 0; j < t && ok; ++j) {
                    std::vector<std::pair<Rational, Rational>> pts;
                    for (std::size_t n = n0; n < last; ++n)
                        if (n % t == j) pts.emplace_back(Rational(static_cast<long>(n)), values[n - first_index]);
                    if (pts.size() < d + 2) {
                        ok = false;
                        break;
                    }
                    UniPoly p = interpolate(std::vector<std::pair<Rational, Rational>>(pts.begin(), pts.begin() + static_cast<long>(d + 1)));
                    for (std::size_t k = d + 1; k < pts.size() && ok; ++k) ok = p(pts[k].first) == pts[k].second;
                    ps[j] = std::move(p);
                }
                if (ok) return QuasiPoly(t, std::move(ps), n0);
            }
    return std::nullopt;
}

} // namespace coreseq
