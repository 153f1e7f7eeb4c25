#pragma once

#include <optional>
#include <vector>

#include "../linsolve.hpp"

namespace coreseq::detail {

/// Residual x_n - sum_i c_i x_{n-i}; requires n >= c.size().
inline Rational recurrence_residual(std::vector<Rational> const& x, std::vector<Rational> const& c, std::size_t n) {
    Rational r = x[n];
    for (std::size_t i = 1; i <= c.size(); ++i)
        if (c[i - 1] != 0) r -= c[i - 1] * x[n - i];
    return r;
}

inline bool recurrence_holds(std::vector<Rational> const& x, std::vector<Rational> const& c, std::size_t from,
                             std::size_t to) {
    for (std::size_t n = std::max(from, c.size()); n < to && n < x.size(); ++n)
        if (recurrence_residual(x, c, n) != 0) return false;
    return true;
}

/// Coefficients c_1..c_r with x_n = sum c_i x_{n-i} for every n in [from, to),
/// or nullopt. from must be >= r.
inline std::optional<std::vector<Rational>> fit_recurrence(std::vector<Rational> const& x, std::size_t r,
                                                           std::size_t from, std::size_t to) {
    to = std::min(to, x.size());
    if (r == 0) {
        for (std::size_t n = from; n < to; ++n)
            if (x[n] != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    RatRows a;
    RatRow b;
    for (std::size_t n = from; n < to; ++n) {
        RatRow row(r);
        for (std::size_t i = 1; i <= r; ++i) row[i - 1] = x[n - i];
        a.push_back(std::move(row));
        b.push_back(x[n]);
    }
    auto sol = solve(a, b, r);
    if (!sol) return std::nullopt;
    return *sol;
}

} // namespace coreseq::detail
