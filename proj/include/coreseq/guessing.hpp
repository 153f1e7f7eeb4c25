#pragma once

/**
 * @file guessing.hpp
 * @brief Exact detection of linear recurrences, algebraic equations and
 *        polynomial-coefficient recurrences from finitely many terms.
 *
 * Every guesser sweeps candidate shapes in a fixed order and returns the
 * first one whose linear system has an exact solution over Q. A report
 * records which terms determined the relation (fit window) and which merely
 * confirmed it (verify window). Running out of candidates is a normal
 * outcome and yields status not_found.
 */

#include <optional>
#include <string>
#include <vector>

#include "detail/recurrence_fit.hpp"
#include "error.hpp"
#include "linsolve.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace coreseq {

enum class GuessKind { cfinite, algebraic, precursive };
enum class GuessStatus { found, not_found };

inline std::string to_string(GuessKind k) {
    switch (k) {
    case GuessKind::cfinite: return "cfinite";
    case GuessKind::algebraic: return "algebraic";
    case GuessKind::precursive: return "prec";
    }
    return "?";
}

inline GuessKind parse_guess_kind(std::string const& s) {
    if (s == "cfinite") return GuessKind::cfinite;
    if (s == "algebraic") return GuessKind::algebraic;
    if (s == "prec" || s == "precursive") return GuessKind::precursive;
    throw invalid_argument("unknown guess kind '" + s + "' (expected cfinite, algebraic or prec)");
}

/// Half-open index range [begin, end) into the term list.
struct IndexRange {
    std::size_t begin = 0, end = 0;
    bool empty() const { return begin >= end; }
    std::string to_string() const {
        if (empty()) return "none";
        return std::to_string(begin) + ".." + std::to_string(end - 1);
    }
    friend bool operator==(IndexRange const&, IndexRange const&) = default;
};

struct GuessReport {
    GuessKind kind = GuessKind::cfinite;
    GuessStatus status = GuessStatus::not_found;

    /// cfinite: x_n = sum c_i x_{n-i} whenever n - r >= offset.
    std::vector<Rational> rec;
    std::size_t offset = 0;

    /// algebraic: sum_k eq[k](t) y^k = 0, integer coefficients.
    std::vector<UniPoly> eq;

    /// precursive: sum_v prec[v](n) x[n-v] = 0 for n >= order.
    std::vector<UniPoly> prec;

    IndexRange fit_window, verify_window;

    bool found() const { return status == GuessStatus::found; }
    std::size_t order() const {
        return kind == GuessKind::cfinite ? rec.size() : (prec.empty() ? 0 : prec.size() - 1);
    }

    /// Canonical relation text, e.g. `x[n] = x[n-1] + 25*x[n-2] - 25*x[n-3]`.
    std::string relation() const {
        if (!found()) return "";
        switch (kind) {
        case GuessKind::cfinite: {
            detail::sum_writer w;
            for (std::size_t i = 0; i < rec.size(); ++i) w.add(rec[i], "x[n-" + std::to_string(i + 1) + "]");
            return "x[n] = " + w.str();
        }
        case GuessKind::algebraic: {
            std::string out;
            for (std::size_t k = eq.size(); k-- > 0;) {
                UniPoly const& c = eq[k];
                if (c.is_zero()) continue;
                std::string ypow = detail::power_string("y", static_cast<long>(k));
                bool neg = false;
                std::string body;
                std::size_t nonzero = 0;
                for (auto const& v : c.coeffs()) nonzero += v != 0;
                if (nonzero == 1) {
                    neg = c.leading() < 0;
                    UniPoly mag = neg ? -c : c;
                    std::string cs = mag.to_string("t");
                    body = ypow.empty() ? cs : (cs == "1" ? ypow : cs + "*" + ypow);
                } else {
                    body = "(" + c.to_string("t") + ")" + (ypow.empty() ? "" : "*" + ypow);
                }
                if (out.empty())
                    out = neg ? "-" + body : body;
                else
                    out += (neg ? " - " : " + ") + body;
            }
            return (out.empty() ? "0" : out) + " = 0";
        }
        case GuessKind::precursive: {
            std::string out;
            for (std::size_t v = 0; v < prec.size(); ++v) {
                if (prec[v].is_zero()) continue;
                if (!out.empty()) out += " + ";
                out += "(" + prec[v].to_string("n") + ")*x[n" + (v ? "-" + std::to_string(v) : "") + "]";
            }
            return out + " = 0";
        }
        }
        return "";
    }

    /// Machine-readable line: `#rec ...` or `#eq ...`, empty when not found.
    std::string data_line() const {
        if (!found()) return "";
        return (kind == GuessKind::algebraic ? "#eq " : "#rec ") + relation();
    }

    std::string summary() const {
        std::string s = "guess " + coreseq::to_string(kind) + ": " + (found() ? "found" : "not found within bounds");
        if (found()) {
            if (kind == GuessKind::cfinite)
                s += " (order " + std::to_string(rec.size()) + ", offset " + std::to_string(offset) + ")";
            s += "; fit " + fit_window.to_string() + ", verify " + verify_window.to_string();
        }
        return s;
    }
};

namespace detail {

/// Scales to primitive integer coefficients.
inline std::vector<Rational> primitive_integer(std::vector<Rational> v) {
    Integer l = 1, g = 0;
    for (auto const& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (auto& q : v) {
        q *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (g != 0)
        for (auto& q : v) q /= g;
    return v;
}

/// One nonzero kernel vector of the system, or nullopt. The modular rank
/// screen settles the (common) full-rank case without exact elimination.
inline std::optional<std::vector<Rational>> kernel_vector(RatRows const& rows, std::size_t cols) {
    if (auto rk = rank_mod_p(rows); rk && *rk == cols) return std::nullopt;
    auto basis = nullspace(rows, cols);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

inline std::vector<std::vector<Rational>> series_powers(std::vector<Rational> const& h, std::size_t max_pow) {
    std::size_t n = h.size();
    std::vector<std::vector<Rational>> pw(max_pow + 1);
    pw[0].assign(n, Rational(0));
    if (n) pw[0][0] = 1;
    for (std::size_t k = 1; k <= max_pow; ++k) {
        pw[k] = mul_trunc(UniPoly(pw[k - 1]), UniPoly(h), n).coeffs();
        pw[k].resize(n);
    }
    return pw;
}

} // namespace detail

/// Minimal order, then minimal offset, recurrence x_n = sum_{i<=r} c_i x_{n-i}
/// holding for every n with n - r >= offset.
inline GuessReport guess_cfinite(std::vector<Rational> const& terms, std::size_t max_order, std::size_t max_offset,
                                 std::size_t margin = 8) {
    std::size_t need = 2 * max_order + max_offset + margin;
    if (terms.size() < need)
        throw insufficient_terms("guess_cfinite needs at least " + std::to_string(need) + " terms, got " +
                                 std::to_string(terms.size()));
    GuessReport rep;
    rep.kind = GuessKind::cfinite;
    std::size_t len = terms.size();
    for (std::size_t r = 0; r <= max_order; ++r)
        for (std::size_t o = 0; o <= max_offset; ++o) {
            auto c = detail::fit_recurrence(terms, r, o + r, len);
            if (!c) continue;
            rep.status = GuessStatus::found;
            rep.rec = *c;
            rep.offset = o;
            rep.fit_window = {o, std::min(len, o + 2 * r)};
            rep.verify_window = {std::min(len, o + 2 * r), len};
            return rep;
        }
    return rep;
}

/// Minimal (deg_y, deg_t) polynomial E with E(t, H(t)) = O(t^N), where H is
/// the generating function of the N given terms.
inline GuessReport guess_algebraic(std::vector<Rational> const& terms, std::size_t deg_t, std::size_t deg_y,
                                   std::size_t margin = 8) {
    std::size_t need = (deg_t + 1) * (deg_y + 1) + margin;
    if (terms.size() < need)
        throw insufficient_terms("guess_algebraic needs at least " + std::to_string(need) + " terms, got " +
                                 std::to_string(terms.size()));
    GuessReport rep;
    rep.kind = GuessKind::algebraic;
    std::size_t n = terms.size();
    auto pw = detail::series_powers(terms, deg_y);
    auto system = [&](std::size_t dy, std::size_t dt) {
        RatRows rows(n, RatRow((dy + 1) * (dt + 1)));
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t k = 0; k <= dy; ++k)
                for (std::size_t j = 0; j <= dt && j <= m; ++j) rows[m][k * (dt + 1) + j] = pw[k][m - j];
        return rows;
    };
    {
        auto full = system(deg_y, deg_t);
        if (auto rk = rank_mod_p(full); rk && *rk == (deg_y + 1) * (deg_t + 1)) return rep;
    }
    for (std::size_t dy = 1; dy <= deg_y; ++dy)
        for (std::size_t dt = 0; dt <= deg_t; ++dt) {
            auto v = detail::kernel_vector(system(dy, dt), (dy + 1) * (dt + 1));
            if (!v) continue;
            auto z = detail::primitive_integer(*v);
            // sign: coefficient of the highest y-power at its lowest t-power is positive
            for (std::size_t k = dy + 1; k-- > 0;) {
                bool done = false;
                for (std::size_t j = 0; j <= dt; ++j)
                    if (z[k * (dt + 1) + j] != 0) {
                        if (z[k * (dt + 1) + j] < 0)
                            for (auto& q : z) q = -q;
                        done = true;
                        break;
                    }
                if (done) break;
            }
            rep.status = GuessStatus::found;
            rep.eq.clear();
            for (std::size_t k = 0; k <= dy; ++k)
                rep.eq.emplace_back(std::vector<Rational>(z.begin() + static_cast<long>(k * (dt + 1)),
                                                          z.begin() + static_cast<long>((k + 1) * (dt + 1))));
            std::size_t unknowns = (dy + 1) * (dt + 1);
            rep.fit_window = {0, std::min(n, unknowns)};
            rep.verify_window = {std::min(n, unknowns), n};
            return rep;
        }
    return rep;
}

/// Minimal (order, degree) relation sum_{v<=r} p_v(n) x_{n-v} = 0 for n >= r.
inline GuessReport guess_precursive(std::vector<Rational> const& terms, std::size_t max_order, std::size_t max_poldeg,
                                    std::size_t margin = 8) {
    std::size_t need = (max_order + 1) * (max_poldeg + 1) + margin;
    if (terms.size() < need)
        throw insufficient_terms("guess_precursive needs at least " + std::to_string(need) + " terms, got " +
                                 std::to_string(terms.size()));
    GuessReport rep;
    rep.kind = GuessKind::precursive;
    std::size_t len = terms.size();
    for (std::size_t r = 1; r <= max_order; ++r)
        for (std::size_t d = 0; d <= max_poldeg; ++d) {
            std::size_t cols = (r + 1) * (d + 1);
            RatRows rows;
            for (std::size_t n = r; n < len; ++n) {
                RatRow row(cols);
                Rational npow = 1;
                for (std::size_t j = 0; j <= d; ++j) {
                    for (std::size_t v = 0; v <= r; ++v) row[v * (d + 1) + j] = npow * terms[n - v];
                    npow *= static_cast<long>(n);
                }
                rows.push_back(std::move(row));
            }
            auto sol = detail::kernel_vector(rows, cols);
            if (!sol) continue;
            auto z = detail::primitive_integer(*sol);
            for (std::size_t v = 0; v <= r; ++v) {
                Rational lead = 0;
                for (std::size_t j = d + 1; j-- > 0;)
                    if (z[v * (d + 1) + j] != 0) {
                        lead = z[v * (d + 1) + j];
                        break;
                    }
                if (lead == 0) continue;
                if (lead < 0)
                    for (auto& q : z) q = -q;
                break;
            }
            rep.status = GuessStatus::found;
            rep.prec.clear();
            for (std::size_t v = 0; v <= r; ++v)
                rep.prec.emplace_back(std::vector<Rational>(z.begin() + static_cast<long>(v * (d + 1)),
                                                            z.begin() + static_cast<long>((v + 1) * (d + 1))));
            rep.fit_window = {0, std::min(len, r + cols)};
            rep.verify_window = {std::min(len, r + cols), len};
            return rep;
        }
    return rep;
}

/// True iff the report's relation holds at every index of `terms` where it can be checked.
inline bool verify_relation(std::vector<Rational> const& terms, GuessReport const& rep) {
    if (!rep.found()) return false;
    switch (rep.kind) {
    case GuessKind::cfinite:
        return detail::recurrence_holds(terms, rep.rec, rep.offset + rep.rec.size(), terms.size());
    case GuessKind::algebraic: {
        std::size_t n = terms.size();
        if (rep.eq.empty()) return false;
        auto pw = detail::series_powers(terms, rep.eq.size() - 1);
        std::vector<Rational> acc(n);
        bool nonzero = false;
        for (std::size_t k = 0; k < rep.eq.size(); ++k) {
            nonzero = nonzero || !rep.eq[k].is_zero();
            auto prod = mul_trunc(rep.eq[k], UniPoly(pw[k]), n);
            for (std::size_t m = 0; m < n; ++m) acc[m] += prod.coeff(m);
        }
        if (!nonzero) return false;
        for (auto const& v : acc)
            if (v != 0) return false;
        return true;
    }
    case GuessKind::precursive: {
        std::size_t r = rep.prec.size() - 1;
        for (std::size_t n = r; n < terms.size(); ++n) {
            Rational s = 0;
            for (std::size_t v = 0; v <= r; ++v) s += rep.prec[v](Rational(static_cast<long>(n))) * terms[n - v];
            if (s != 0) return false;
        }
        return true;
    }
    }
    return false;
}

/// Bounds for the guessers, with the defaults used by the command line.
struct GuessOptions {
    GuessKind kind = GuessKind::cfinite;
    std::size_t max_order = 8;
    std::size_t max_offset = 0;
    std::size_t deg_t = 4;
    std::size_t deg_y = 2;
    std::size_t max_poldeg = 3;
    std::size_t margin = 8;
};

inline GuessReport run_guess(std::vector<Rational> const& terms, GuessOptions const& o) {
    switch (o.kind) {
    case GuessKind::cfinite: return guess_cfinite(terms, o.max_order, o.max_offset, o.margin);
    case GuessKind::algebraic: return guess_algebraic(terms, o.deg_t, o.deg_y, o.margin);
    case GuessKind::precursive: return guess_precursive(terms, o.max_order, o.max_poldeg, o.margin);
    }
    return {};
}

} // namespace coreseq
