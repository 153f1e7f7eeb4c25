#pragma once

/**
 * @file linsolve.hpp
 * @brief Exact linear algebra over Q, with a modular rank screen.
 *
 * Systems here are small but can be badly overdetermined (guessing feeds
 * every available equation). A rank computation modulo the prime 2^61 - 1
 * decides most inconsistent systems without touching big rationals: if the
 * augmented matrix already has full column rank mod p, it has full column
 * rank over Q too, so no solution exists.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace coreseq {

using RatRow = std::vector<Rational>;
using RatRows = std::vector<RatRow>;

namespace detail {

inline constexpr std::uint64_t screen_prime = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t reduce_integer(Integer const& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

/// q mod p, or nullopt when p divides the denominator.
inline std::optional<std::uint64_t> reduce_rational(Rational const& q, std::uint64_t p) {
    std::uint64_t d = reduce_integer(q.get_den(), p);
    if (d == 0) return std::nullopt;
    return mulmod(reduce_integer(q.get_num(), p), powmod(d, p - 2, p), p);
}

} // namespace detail

/// Rank modulo 2^61 - 1 (a lower bound for the rank over Q); nullopt if some
/// denominator vanishes mod p.
inline std::optional<std::size_t> rank_mod_p(RatRows const& rows) {
    constexpr std::uint64_t p = detail::screen_prime;
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (auto const& r : rows) {
        std::vector<std::uint64_t> v;
        v.reserve(r.size());
        for (auto const& q : r) {
            auto x = detail::reduce_rational(q, p);
            if (!x) return std::nullopt;
            v.push_back(*x);
        }
        m.push_back(std::move(v));
    }
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        std::uint64_t inv = detail::powmod(m[rank][c], p - 2, p);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            std::uint64_t f = detail::mulmod(m[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + p - detail::mulmod(f, m[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatRows& m) {
    std::vector<std::size_t> pivots;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatRows m) { return rref(m).size(); }

/// Basis of {x : A x = 0}; each vector has a 1 in one free column.
inline RatRows nullspace(RatRows a, std::size_t cols) {
    auto piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    RatRows basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RatRow v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A solution of A x = b with free variables set to 0, or nullopt.
inline std::optional<RatRow> solve(RatRows const& a, RatRow const& b, std::size_t cols) {
    RatRows m;
    m.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        RatRow r = a[i];
        r.resize(cols);
        r.push_back(b[i]);
        m.push_back(std::move(r));
    }
    if (auto rk = rank_mod_p(m); rk && *rk == cols + 1) return std::nullopt;
    auto piv = rref(m);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    RatRow x(cols);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
    return x;
}

} // namespace coreseq
