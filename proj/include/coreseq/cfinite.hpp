#pragma once

/**
 * @file cfinite.hpp
 * @brief Eventually linearly recursive sequences and their generating functions.
 *
 * A CFiniteSeq stores x_0..x_{v-1} explicitly and extends them by
 * x_n = c_1 x_{n-1} + ... + c_r x_{n-r} for n >= v. Closure operations build
 * their recurrence from characteristic polynomials (products, Kronecker
 * products and powers of companion matrices) with an explicit validity
 * index, then pass the result through minimize().
 *
 * Text form: `rec: c1,c2,...; from: v; prefix: x0,x1,...`.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dense_matrix.hpp"
#include "detail/recurrence_fit.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace coreseq {

/// Reduced P/Q with Q(0) = 1.
struct HilbertSeries {
    UniPoly numerator;
    UniPoly denominator{1};

    HilbertSeries() = default;
    HilbertSeries(UniPoly num, UniPoly den) : numerator(std::move(num)), denominator(std::move(den)) { normalize(); }

    std::vector<Rational> expand(std::size_t n) const { return series_expand(numerator, denominator, n); }

    std::string to_string(std::string const& var = "t") const {
        return "(" + numerator.to_string(var) + ") / (" + denominator.to_string(var) + ")";
    }

    friend HilbertSeries operator+(HilbertSeries const& a, HilbertSeries const& b) {
        return {a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator};
    }
    friend bool operator==(HilbertSeries const&, HilbertSeries const&) = default;

private:
    void normalize() {
        if (denominator.coeff(0) == 0) throw invalid_argument("Hilbert series denominator must have a nonzero constant term");
        if (numerator.is_zero()) {
            denominator = 1;
            return;
        }
        UniPoly g = gcd(numerator, denominator);
        if (g.degree() > 0) {
            numerator = numerator.divmod(g).first;
            denominator = denominator.divmod(g).first;
        }
        Rational k = 1 / denominator.coeff(0);
        numerator = numerator * k;
        denominator = denominator * k;
    }
};

class CFiniteSeq {
public:
    /// The zero sequence.
    CFiniteSeq() = default;

    /// Recurrence coefficients c_1..c_r and leading terms. The recurrence is
    /// asserted from `valid_from` (default r); `initial` must reach that far,
    /// and any extra supplied terms are checked against the recurrence.
    CFiniteSeq(std::vector<Rational> coeffs, std::vector<Rational> initial, std::optional<std::size_t> valid_from = {})
        : c_(std::move(coeffs)) {
        v_ = valid_from.value_or(c_.size());
        if (v_ < c_.size()) throw invalid_argument("recurrence start index must be at least the order");
        if (initial.size() < v_)
            throw invalid_argument("need " + std::to_string(v_) + " initial terms, got " + std::to_string(initial.size()));
        if (!detail::recurrence_holds(initial, c_, v_, initial.size()))
            throw integrity_error("supplied terms contradict the recurrence");
        initial.resize(v_);
        x_ = std::move(initial);
    }

    static CFiniteSeq geometric(Rational ratio, Rational first = 1) { return {{std::move(ratio)}, {std::move(first)}}; }
    static CFiniteSeq constant(Rational value) { return geometric(1, std::move(value)); }

    /// Recurrence read off a monic characteristic polynomial of degree r.
    static CFiniteSeq from_char_poly(UniPoly const& chi, std::vector<Rational> initial, std::size_t valid_from) {
        std::size_t r = static_cast<std::size_t>(std::max(0L, chi.degree()));
        Rational lead = chi.leading();
        std::vector<Rational> c(r);
        for (std::size_t i = 1; i <= r; ++i) c[i - 1] = -chi.coeff(r - i) / lead;
        return {std::move(c), std::move(initial), valid_from};
    }

    std::size_t order() const { return c_.size(); }
    std::vector<Rational> const& coeffs() const { return c_; }
    std::size_t valid_from() const { return v_; }
    std::vector<Rational> const& prefix() const { return x_; }

    std::vector<Rational> terms(std::size_t count) const {
        std::vector<Rational> out(x_.begin(), x_.begin() + static_cast<long>(std::min(count, x_.size())));
        out.reserve(count);
        while (out.size() < count) {
            std::size_t n = out.size();
            Rational acc = 0;
            for (std::size_t i = 1; i <= c_.size(); ++i)
                if (c_[i - 1] != 0) acc += c_[i - 1] * out[n - i];
            out.push_back(std::move(acc));
        }
        return out;
    }

    Rational term(std::size_t n) const { return terms(n + 1)[n]; }

    /// x^r - c_1 x^{r-1} - ... - c_r.
    UniPoly char_poly() const {
        std::size_t r = c_.size();
        std::vector<Rational> v(r + 1);
        v[r] = 1;
        for (std::size_t i = 1; i <= r; ++i) v[r - i] = -c_[i - 1];
        return UniPoly(std::move(v));
    }

    /// Matrix advancing the window (x_n, ..., x_{n+r-1}) by one step.
    DenseMatrix<Rational> companion() const {
        std::size_t r = c_.size();
        DenseMatrix<Rational> m(r);
        for (std::size_t i = 0; i + 1 < r; ++i) m(i, i + 1) = 1;
        for (std::size_t j = 0; j < r; ++j) m(r - 1, j) = c_[r - 1 - j];
        return m;
    }

    std::string to_string() const {
        return "rec: " + join(c_, ",") + "; from: " + std::to_string(v_) + "; prefix: " + join(x_, ",");
    }

    static CFiniteSeq parse(std::string_view text) {
        std::optional<std::vector<Rational>> rec, prefix;
        std::optional<std::size_t> from;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(';', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view part = text.substr(start, end - start);
            std::size_t colon = part.find(':');
            std::string key;
            for (char ch : part.substr(0, colon))
                if (!std::isspace(static_cast<unsigned char>(ch))) key += ch;
            if (key.empty() && colon == std::string_view::npos) {
                start = end + 1;
                continue;
            }
            if (colon == std::string_view::npos) throw parse_error("expected 'key: value'", start);
            std::string_view value = part.substr(colon + 1);
            try {
                if (key == "rec")
                    rec = parse_rational_list(value);
                else if (key == "prefix")
                    prefix = parse_rational_list(value);
                else if (key == "from") {
                    Rational f = parse_rational(value);
                    if (!is_integer(f) || f < 0) throw parse_error("'from' must be a nonnegative integer", 0);
                    from = f.get_num().get_ui();
                } else
                    throw parse_error("unknown key '" + key + "'", 0);
            } catch (parse_error const& e) {
                throw parse_error(e.message, start + colon + 1 + e.position);
            }
            start = end + 1;
        }
        if (!rec) throw parse_error("missing 'rec:'", text.size());
        if (!prefix) throw parse_error("missing 'prefix:'", text.size());
        return {*rec, *prefix, from};
    }

    friend bool operator==(CFiniteSeq const&, CFiniteSeq const&) = default;

private:
    std::vector<Rational> c_;
    std::size_t v_ = 0;
    std::vector<Rational> x_;
};

/// Shortest recurrence (order first, then start index) describing the same
/// sequence. Exact: a candidate of order r is checked on a window long
/// enough that the residual, itself satisfying a's recurrence, must vanish
/// identically.
inline CFiniteSeq minimize(CFiniteSeq const& a) {
    std::size_t big_r = a.order(), big_v = a.valid_from();
    std::size_t end = big_v + 2 * big_r + 1;
    auto x = a.terms(end);
    for (std::size_t r = 0; r <= big_r; ++r) {
        std::size_t hi = std::max(r, big_v);
        auto c = detail::fit_recurrence(x, r, hi, end);
        if (!c) continue;
        std::size_t v = hi;
        while (v > r && detail::recurrence_residual(x, *c, v - 1) == 0) --v;
        return {*c, std::vector<Rational>(x.begin(), x.begin() + static_cast<long>(v)), v};
    }
    return a;
}

namespace detail {

inline std::size_t joint_start(CFiniteSeq const& a, CFiniteSeq const& b) {
    return std::max(a.valid_from() - a.order(), b.valid_from() - b.order());
}

template <class Naive>
CFiniteSeq build_checked(UniPoly const& chi, std::size_t valid_from, std::size_t check_to, Naive naive,
                         char const* what) {
    auto ref = naive(std::max(valid_from, check_to));
    auto out = CFiniteSeq::from_char_poly(chi, std::vector<Rational>(ref.begin(), ref.begin() + static_cast<long>(valid_from)),
                                          valid_from);
    if (out.terms(ref.size()) != ref) throw integrity_error(std::string(what) + ": constructed recurrence disagrees with termwise values");
    return minimize(out);
}

} // namespace detail

inline CFiniteSeq add(CFiniteSeq const& a, CFiniteSeq const& b) {
    UniPoly chi = a.char_poly() * b.char_poly();
    std::size_t big_r = static_cast<std::size_t>(chi.degree());
    std::size_t v = detail::joint_start(a, b) + big_r;
    return detail::build_checked(chi, v, v + 2 * big_r + 4, [&](std::size_t n) {
        auto x = a.terms(n), y = b.terms(n);
        for (std::size_t i = 0; i < n; ++i) x[i] += y[i];
        return x;
    }, "add");
}

inline CFiniteSeq scale(CFiniteSeq const& a, Rational const& k) {
    auto x = a.prefix();
    for (auto& v : x) v *= k;
    return minimize(CFiniteSeq(a.coeffs(), std::move(x), a.valid_from()));
}

inline CFiniteSeq hadamard(CFiniteSeq const& a, CFiniteSeq const& b) {
    UniPoly chi(faddeev_leverrier(kronecker(a.companion(), b.companion())));
    std::size_t big_r = a.order() * b.order();
    std::size_t v = detail::joint_start(a, b) + big_r;
    return detail::build_checked(chi, v, v + 4 * big_r, [&](std::size_t n) {
        auto x = a.terms(n), y = b.terms(n);
        for (std::size_t i = 0; i < n; ++i) x[i] *= y[i];
        return x;
    }, "hadamard");
}

inline CFiniteSeq partial_sums(CFiniteSeq const& a) {
    UniPoly chi = a.char_poly() * UniPoly::parse("t - 1");
    std::size_t v = std::max(a.valid_from(), a.order() + 1);
    return detail::build_checked(chi, v, v + 2 * a.order() + 4, [&](std::size_t n) {
        auto x = a.terms(n);
        for (std::size_t i = 1; i < n; ++i) x[i] += x[i - 1];
        return x;
    }, "partial_sums");
}

inline CFiniteSeq dilate(CFiniteSeq const& a, std::size_t d) {
    if (d == 0) throw invalid_argument("dilate: factor must be at least 1");
    UniPoly chi(faddeev_leverrier(matrix_power(a.companion(), d)));
    std::size_t r = a.order();
    std::size_t v = (a.valid_from() - r + d - 1) / d + r;
    return detail::build_checked(chi, v, v + 2 * r + 4, [&](std::size_t n) {
        auto x = a.terms(n == 0 ? 0 : (n - 1) * d + 1);
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = x[i * d];
        return out;
    }, "dilate");
}

inline CFiniteSeq shift(CFiniteSeq const& a, std::size_t k) {
    std::size_t v = std::max(a.valid_from() > k ? a.valid_from() - k : 0, a.order());
    auto x = a.terms(v + k);
    return CFiniteSeq(a.coeffs(), std::vector<Rational>(x.begin() + static_cast<long>(k), x.end()), v);
}

inline HilbertSeries hilbert_series(CFiniteSeq const& a) {
    std::vector<Rational> q(a.order() + 1);
    q[0] = 1;
    for (std::size_t i = 1; i <= a.order(); ++i) q[i] = -a.coeffs()[i - 1];
    UniPoly den(std::move(q));
    UniPoly num = mul_trunc(UniPoly(a.prefix()), den, a.valid_from());
    HilbertSeries h(num, den);
    std::size_t check = a.valid_from() + 2 * a.order();
    if (h.expand(check) != a.terms(check)) throw integrity_error("hilbert_series: expansion disagrees with the sequence");
    return h;
}

inline CFiniteSeq from_hilbert(HilbertSeries const& h) {
    UniPoly const& num = h.numerator;
    UniPoly const& den = h.denominator;
    if (den.coeff(0) == 0) throw invalid_argument("from_hilbert: denominator has zero constant term");
    std::size_t r = static_cast<std::size_t>(den.degree());
    std::vector<Rational> c(r);
    for (std::size_t i = 1; i <= r; ++i) c[i - 1] = -den.coeff(i) / den.coeff(0);
    std::size_t v = std::max<std::size_t>(static_cast<std::size_t>(num.degree() + 1), r);
    return minimize(CFiniteSeq(std::move(c), series_expand(num, den, v), v));
}

} // namespace coreseq
