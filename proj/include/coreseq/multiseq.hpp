#pragma once

/**
 * @file multiseq.hpp
 * @brief Bivariate sequences: rational generating functions P/Q in t1, t2,
 *        sequences with one linear recurrence per axis, termwise products,
 *        diagonals and specializations at 1.
 */

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipoly.hpp"
#include "cfinite.hpp"
#include "error.hpp"
#include "unipoly.hpp"

namespace coreseq {

using Block = std::vector<std::vector<Rational>>;

inline constexpr std::size_t default_block_cap = 256;

inline void check_block_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw budget_exceeded("block of size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
}

/// P(t1,t2) / Q(t1,t2) with Q(0,0) = 1. Not reduced: equality compares
/// cross products.
class RatBiSeries {
public:
    RatBiSeries() : num_(0), den_(1) {}
    RatBiSeries(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        Rational c = den_.coeff(0, 0);
        if (c == 0) throw invalid_argument("bivariate series denominator must have a nonzero constant term");
        if (c != 1) {
            Rational k = 1 / c;
            num_ = num_ * k;
            den_ = den_ * k;
        }
    }

    BiPoly const& numerator() const { return num_; }
    BiPoly const& denominator() const { return den_; }

    /// Coefficients a[m][n] for m < rows, n < cols by truncated division.
    Block expand(std::size_t rows, std::size_t cols) const {
        Block a(rows, std::vector<Rational>(cols));
        for (std::size_t m = 0; m < rows; ++m)
            for (std::size_t n = 0; n < cols; ++n) {
                Rational v = num_.coeff(long(m), long(n));
                for (auto const& [e, q] : den_.terms()) {
                    if (e.first == 0 && e.second == 0) continue;
                    if (std::size_t(e.first) > m || std::size_t(e.second) > n) continue;
                    v -= q * a[m - std::size_t(e.first)][n - std::size_t(e.second)];
                }
                a[m][n] = std::move(v);
            }
        return a;
    }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

    /// `(P) / (Q)` or a bare polynomial.
    static RatBiSeries parse(std::string_view text) {
        std::size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        auto group = [&]() -> std::pair<std::size_t, std::string_view> {
            skip();
            if (i >= text.size() || text[i] != '(') throw parse_error("expected '('", i);
            std::size_t close = text.find(')', i);
            if (close == std::string_view::npos) throw parse_error("missing ')'", text.size());
            std::size_t b = i + 1;
            i = close + 1;
            return {b, text.substr(b, close - b)};
        };
        auto poly = [](std::size_t at, std::string_view s) {
            try {
                return BiPoly::parse(s);
            } catch (parse_error const& e) {
                throw parse_error(e.message, at + e.position);
            }
        };
        skip();
        if (i >= text.size() || text[i] != '(') return RatBiSeries(poly(0, text), 1);
        auto [nb, ns] = group();
        BiPoly num = poly(nb, ns);
        skip();
        if (i == text.size()) return RatBiSeries(num, 1);
        if (text[i] != '/') throw parse_error("expected '/'", i);
        ++i;
        auto [db, ds] = group();
        BiPoly den = poly(db, ds);
        skip();
        if (i != text.size()) throw parse_error("trailing characters", i);
        if (den.coeff(0, 0) == 0) throw parse_error("denominator must have a nonzero constant term", db);
        return RatBiSeries(num, den);
    }

    friend bool operator==(RatBiSeries const& a, RatBiSeries const& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    BiPoly num_, den_;
};

inline Rational bi_coeff(RatBiSeries const& h, std::size_t m, std::size_t n) { return h.expand(m + 1, n + 1)[m][n]; }

/// A bivariate sequence with a linear recurrence along each axis:
/// a[m][n] = sum_i c1_i a[m-i][n] for m >= v1 and a[m][n] = sum_j c2_j a[m][n-j]
/// for n >= v2. The values with m < v1 and n < v2 determine everything.
class CFinite2Seq {
public:
    CFinite2Seq(std::vector<Rational> c1, std::size_t v1, std::vector<Rational> c2, std::size_t v2, Block block)
        : c1_(std::move(c1)), c2_(std::move(c2)), v1_(v1), v2_(v2) {
        if (v1_ < c1_.size() || v2_ < c2_.size()) throw invalid_argument("axis threshold below recurrence order");
        if (block.size() < v1_) throw invalid_argument("initial block has too few rows");
        for (auto const& row : block)
            if (row.size() < v2_) throw invalid_argument("initial block has too few columns");
        block_.assign(v1_, std::vector<Rational>(v2_));
        for (std::size_t m = 0; m < v1_; ++m)
            for (std::size_t n = 0; n < v2_; ++n) block_[m][n] = block[m][n];
        std::size_t cols = block.empty() ? 0 : block[0].size();
        auto full = expand(block.size(), cols);
        for (std::size_t m = 0; m < block.size(); ++m)
            for (std::size_t n = 0; n < block[m].size() && n < cols; ++n)
                if (full[m][n] != block[m][n])
                    throw integrity_error("axis recurrences disagree with the block at (" + std::to_string(m) + ", " +
                                          std::to_string(n) + ")");
    }

    /// Separable sequence a[m][n] = x_m * y_n.
    static CFinite2Seq outer(CFiniteSeq const& x, CFiniteSeq const& y) {
        auto xs = x.terms(x.valid_from()), ys = y.terms(y.valid_from());
        Block b(xs.size(), std::vector<Rational>(ys.size()));
        for (std::size_t m = 0; m < xs.size(); ++m)
            for (std::size_t n = 0; n < ys.size(); ++n) b[m][n] = xs[m] * ys[n];
        return {x.coeffs(), x.valid_from(), y.coeffs(), y.valid_from(), b};
    }

    std::vector<Rational> const& coeffs(int axis) const { return axis == 0 ? c1_ : c2_; }
    std::size_t threshold(int axis) const { return axis == 0 ? v1_ : v2_; }
    Block const& block() const { return block_; }

    Block expand(std::size_t rows, std::size_t cols) const {
        Block a(rows, std::vector<Rational>(cols));
        std::size_t r = std::min(rows, v1_);
        for (std::size_t m = 0; m < r; ++m)
            for (std::size_t n = 0; n < cols; ++n) {
                if (n < v2_) {
                    a[m][n] = block_[m][n];
                    continue;
                }
                Rational v = 0;
                for (std::size_t j = 1; j <= c2_.size(); ++j) v += c2_[j - 1] * a[m][n - j];
                a[m][n] = std::move(v);
            }
        for (std::size_t m = r; m < rows; ++m)
            for (std::size_t n = 0; n < cols; ++n) {
                Rational v = 0;
                for (std::size_t i = 1; i <= c1_.size(); ++i) v += c1_[i - 1] * a[m - i][n];
                a[m][n] = std::move(v);
            }
        return a;
    }

    Rational term(std::size_t m, std::size_t n) const { return expand(m + 1, n + 1)[m][n]; }

    /// Reversed characteristic polynomial 1 - sum c_i t^i of one axis.
    UniPoly reversed_char_poly(int axis) const {
        auto const& c = coeffs(axis);
        std::vector<Rational> q(c.size() + 1);
        q[0] = 1;
        for (std::size_t i = 0; i < c.size(); ++i) q[i + 1] = -c[i];
        return UniPoly(std::move(q));
    }

private:
    std::vector<Rational> c1_, c2_;
    std::size_t v1_, v2_;
    Block block_;
};

/// P / (Q1(t1) Q2(t2)) with Q_i the reversed axis characteristic polynomials.
inline RatBiSeries cf2_to_rational(CFinite2Seq const& a) {
    UniPoly q1 = a.reversed_char_poly(0), q2 = a.reversed_char_poly(1);
    std::size_t v1 = a.threshold(0), v2 = a.threshold(1);
    auto x = a.expand(v1, v2);
    BiPoly num;
    for (std::size_t m = 0; m < v1; ++m)
        for (std::size_t n = 0; n < v2; ++n) {
            Rational s = 0;
            for (std::size_t i = 0; i <= m && i < q1.coeffs().size(); ++i)
                for (std::size_t j = 0; j <= n && j < q2.coeffs().size(); ++j)
                    s += q1.coeff(i) * q2.coeff(j) * x[m - i][n - j];
            num += BiPoly::monomial(s, long(m), long(n));
        }
    RatBiSeries h(num, BiPoly::from_axis(q1, 0) * BiPoly::from_axis(q2, 1));
    std::size_t check = 20;
    if (h.expand(check, check) != a.expand(check, check))
        throw integrity_error("cf2_to_rational: expansion disagrees with the sequence");
    return h;
}

struct BiHadamardResult {
    Block block;
    std::optional<CFinite2Seq> certified;
};

namespace detail {

inline Block block_of(RatBiSeries const& h, std::size_t n) { return h.expand(n, n); }
inline Block block_of(CFinite2Seq const& a, std::size_t n) { return a.expand(n, n); }

inline Block termwise_product(Block a, Block const& b) {
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t n = 0; n < a[m].size(); ++n) a[m][n] *= b[m][n];
    return a;
}

inline CFiniteSeq axis_sequence(CFinite2Seq const& a, int axis) {
    // Any row or column; only the recurrence and threshold matter here.
    std::size_t v = a.threshold(axis);
    auto x = a.expand(axis == 0 ? v : 1, axis == 0 ? 1 : v);
    std::vector<Rational> init;
    for (std::size_t k = 0; k < v; ++k) init.push_back(axis == 0 ? x[k][0] : x[0][k]);
    return CFiniteSeq(a.coeffs(axis), init, v);
}

} // namespace detail

/// Termwise product on the N x N block. Both arguments may be rational
/// series or axis-recursive sequences.
template <class A, class B>
BiHadamardResult bi_hadamard(A const& a, B const& b, std::size_t n, std::size_t cap = default_block_cap) {
    check_block_cap(n, cap);
    return {detail::termwise_product(detail::block_of(a, n), detail::block_of(b, n)), std::nullopt};
}

/// Axis-recursive inputs additionally give a certified axis-recursive
/// product, built per axis from Kronecker products of companion matrices.
inline BiHadamardResult bi_hadamard(CFinite2Seq const& a, CFinite2Seq const& b, std::size_t n,
                                    std::size_t cap = default_block_cap) {
    check_block_cap(n, cap);
    BiHadamardResult res{detail::termwise_product(a.expand(n, n), b.expand(n, n)), std::nullopt};
    std::vector<Rational> c[2];
    std::size_t v[2];
    for (int axis = 0; axis < 2; ++axis) {
        auto sa = detail::axis_sequence(a, axis), sb = detail::axis_sequence(b, axis);
        auto ka = kronecker(sa.companion(), sb.companion());
        auto chi = UniPoly(faddeev_leverrier(ka));
        std::size_t r = sa.order() * sb.order();
        std::size_t start = std::max(sa.valid_from() - sa.order(), sb.valid_from() - sb.order());
        v[axis] = start + r;
        c[axis].resize(r);
        for (std::size_t i = 1; i <= r; ++i) c[axis][i - 1] = -chi.coeff(r - i);
    }
    auto blk = detail::termwise_product(a.expand(v[0], v[1]), b.expand(v[0], v[1]));
    CFinite2Seq prod(c[0], v[0], c[1], v[1], blk);
    if (prod.expand(n, n) != res.block) throw integrity_error("bi_hadamard: certified product disagrees with termwise values");
    res.certified = std::move(prod);
    return res;
}

/// h with the variable `axis` (0 = t1, 1 = t2) set to 1, as a reduced
/// univariate series in the remaining variable.
inline HilbertSeries substitute_one(RatBiSeries const& h, int axis) {
    UniPoly num = h.numerator().substitute(axis, 1);
    UniPoly den = h.denominator().substitute(axis, 1);
    if (den.is_zero()) throw singular_substitution("denominator vanishes identically at the substitution");
    if (!num.is_zero()) {
        UniPoly g = gcd(num, den);
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    } else {
        den = 1;
    }
    if (den.coeff(0) == 0)
        throw singular_substitution("substituted denominator " + den.to_string() +
                                    " has no constant term; rows are not finitely supported");
    return HilbertSeries(num, den);
}

/// c_m = sum_n a[m][n] b_n for m < rows, where row m of a is supported on
/// n <= support(m). Nonzero entries past the bound (within a checked margin)
/// raise integrity_error.
inline std::vector<Rational> matrix_product(RatBiSeries const& a, std::function<std::size_t(std::size_t)> const& support,
                                            CFiniteSeq const& b, std::size_t rows, std::size_t margin = 8) {
    std::size_t cols = 0;
    for (std::size_t m = 0; m < rows; ++m) cols = std::max(cols, support(m) + 1);
    cols += margin;
    auto blk = a.expand(rows, cols);
    auto bv = b.terms(cols);
    std::vector<Rational> out(rows);
    for (std::size_t m = 0; m < rows; ++m) {
        std::size_t bound = support(m);
        for (std::size_t n = 0; n < cols; ++n) {
            if (n > bound) {
                if (blk[m][n] != 0)
                    throw integrity_error("row " + std::to_string(m) + " has a nonzero entry at column " +
                                          std::to_string(n) + " beyond its declared support " + std::to_string(bound));
                continue;
            }
            out[m] += blk[m][n] * bv[n];
        }
    }
    return out;
}

inline std::vector<Rational> diagonal(RatBiSeries const& h, std::size_t n, std::size_t cap = default_block_cap) {
    check_block_cap(n, cap);
    auto blk = h.expand(n, n);
    std::vector<Rational> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = blk[k][k];
    return d;
}

/// Equation sum_k coeffs[k](t1, t2) y^k = 0 with the variable `axis` set to 1.
inline std::vector<UniPoly> algebraic_substitute_one(std::vector<BiPoly> const& coeffs, int axis) {
    std::vector<UniPoly> out;
    bool any = false;
    for (auto const& c : coeffs) {
        out.push_back(c.substitute(axis, 1));
        any = any || !out.back().is_zero();
    }
    if (!any) throw invalid_argument("all coefficients vanish after substitution; they share the factor (t - 1)");
    return out;
}

} // namespace coreseq
