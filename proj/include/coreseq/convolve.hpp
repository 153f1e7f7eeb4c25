#pragma once

/**
 * @file convolve.hpp
 * @brief The substitution operation P |> a: a sequence of polynomials P_n is
 *        turned into numbers by replacing each power x^k with a sequence term.
 *
 * Polynomial sequences are stored by their recurrence
 *   P_{n+T} = c_{T-1} P_{n+T-1} + ... + c_0 P_n   (n >= threshold)
 * together with P_0 .. P_{threshold+T-1}. Three flavours of substitution:
 *  - tri_plain: ordinary polynomials, x^k -> a_k
 *  - tri_laurent: Laurent polynomials, x^k -> a_k for k >= 0 and
 *    x^{-k-1} -> b_k
 *  - tri_multi: up to three variables, x1^i x2^j x3^l -> a(i, j, l)
 *
 * Generated terms are checked against a linear degree envelope derived from
 * the recurrence; leaving it means the recurrence arithmetic is broken.
 */

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cfinite.hpp"
#include "error.hpp"
#include "guessing.hpp"
#include "laurent.hpp"
#include "multipoly.hpp"

namespace coreseq {

template <class S>
concept SequenceSource = requires(S const& s, std::size_t n) {
    { s.terms(n) } -> std::convertible_to<std::vector<Rational>>;
};

/// A finite list of known terms; asking beyond it is a coverage error.
struct ExplicitSeq {
    std::vector<Rational> values;

    std::vector<Rational> terms(std::size_t n) const {
        if (n > values.size())
            throw coverage_error("sequence has only " + std::to_string(values.size()) + " known terms, " +
                                 std::to_string(n) + " needed");
        return std::vector<Rational>(values.begin(), values.begin() + static_cast<long>(n));
    }
};

/// Either a recurrence (`rec: ...; prefix: ...`) or a comma-separated list of terms.
struct SequenceArg {
    std::variant<CFiniteSeq, ExplicitSeq> value;

    std::vector<Rational> terms(std::size_t n) const {
        return std::visit([n](auto const& s) { return s.terms(n); }, value);
    }

    static SequenceArg parse(std::string_view text) {
        if (text.find(':') != std::string_view::npos) return {CFiniteSeq::parse(text)};
        return {ExplicitSeq{parse_rational_list(text)}};
    }
};

namespace detail {

inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

template <class Poly>
struct poly_traits;

template <>
struct poly_traits<LaurentPoly> {
    static std::optional<long> hi(LaurentPoly const& p) { return p.max_exp(); }
    static std::optional<long> lo(LaurentPoly const& p) { return p.min_exp(); }
    static LaurentPoly parse(std::string_view s) { return LaurentPoly::parse(s, "x"); }
    static std::string print(LaurentPoly const& p) { return p.to_string("x"); }
};

template <>
struct poly_traits<MultiPoly> {
    static std::optional<long> hi(MultiPoly const& p) {
        if (p.is_zero()) return std::nullopt;
        return p.total_degree();
    }
    static std::optional<long> lo(MultiPoly const& p) {
        if (p.is_zero()) return std::nullopt;
        return 0L;
    }
    static MultiPoly parse(std::string_view s) { return MultiPoly::parse(s); }
    static std::string print(MultiPoly const& p) { return p.to_string(); }
};

} // namespace detail

/// deg P_n <= slope * n + intercept (upper side) and the mirrored bound for
/// the lowest exponent.
struct DegreeEnvelope {
    long hi_slope = 0, hi_intercept = 0;
    long lo_slope = 0, lo_intercept = 0;
    bool any = false;

    bool admits(long n, std::optional<long> hi, std::optional<long> lo) const {
        if (!hi) return true;
        return *hi <= hi_slope * n + hi_intercept && *lo >= lo_slope * n + lo_intercept;
    }
};

template <class Poly>
class PolySeqRec {
    using traits = detail::poly_traits<Poly>;

public:
    /// coeffs = c_0 .. c_{T-1}; initial = P_0 .. P_{threshold+T-1}.
    PolySeqRec(std::vector<Poly> coeffs, std::vector<Poly> initial, std::size_t threshold = 0)
        : c_(std::move(coeffs)), p_(std::move(initial)), from_(threshold) {
        if (c_.empty()) throw invalid_argument("polynomial sequence recurrence needs order >= 1");
        if (p_.size() != from_ + c_.size())
            throw invalid_argument("need exactly " + std::to_string(from_ + c_.size()) + " initial polynomials, got " +
                                   std::to_string(p_.size()));
        build_envelope();
    }

    std::size_t order() const { return c_.size(); }
    std::size_t threshold() const { return from_; }
    std::vector<Poly> const& coeffs() const { return c_; }
    std::vector<Poly> const& initial() const { return p_; }
    DegreeEnvelope const& envelope() const { return env_; }

    /// P_0 .. P_{count-1}. `max_terms` bounds the size of each polynomial.
    std::vector<Poly> terms(std::size_t count, std::size_t max_terms = 0) const {
        std::vector<Poly> out(p_.begin(), p_.begin() + static_cast<long>(std::min(count, p_.size())));
        std::size_t t = c_.size();
        while (out.size() < count) {
            std::size_t n = out.size() - t;
            Poly next;
            for (std::size_t i = 0; i < t; ++i)
                if (!c_[i].is_zero() && !out[n + i].is_zero()) next += c_[i] * out[n + i];
            if (max_terms && next.size() > max_terms)
                throw budget_exceeded("polynomial P_" + std::to_string(out.size()) + " has " +
                                      std::to_string(next.size()) + " terms, over the cap " + std::to_string(max_terms));
            if (!env_.admits(long(out.size()), traits::hi(next), traits::lo(next)))
                throw integrity_error("P_" + std::to_string(out.size()) + " left its degree envelope");
            out.push_back(std::move(next));
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "order = " << c_.size() << "\nfrom = " << from_ << "\n";
        for (std::size_t i = 0; i < c_.size(); ++i) os << "c[" << i << "] = " << traits::print(c_[i]) << "\n";
        for (std::size_t i = 0; i < p_.size(); ++i) os << "P[" << i << "] = " << traits::print(p_[i]) << "\n";
        return os.str();
    }

    /// Line format: `order = T`, `from = N`, `c[i] = <poly>`, `P[j] = <poly>`;
    /// `#` starts a comment.
    static PolySeqRec parse(std::string_view text) {
        std::optional<std::size_t> order, from;
        std::map<std::size_t, Poly> cs, ps;
        std::size_t line_no = 0, pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            std::string_view line = text.substr(pos, nl - pos);
            pos = nl + 1;
            ++line_no;
            if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
            std::size_t eq = line.find('=');
            std::string key;
            for (char ch : line.substr(0, eq))
                if (!std::isspace(static_cast<unsigned char>(ch))) key += ch;
            if (key.empty() && eq == std::string_view::npos) continue;
            if (eq == std::string_view::npos) throw parse_error("expected 'key = value'", 0, line_no);
            std::string_view value = line.substr(eq + 1);
            auto index = [&](std::string const& k) -> std::size_t {
                if (k.size() < 4 || k[1] != '[' || k.back() != ']') throw parse_error("bad key '" + k + "'", 0, line_no);
                std::string digits = k.substr(2, k.size() - 3);
                if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                    throw parse_error("bad index in '" + k + "'", 0, line_no);
                return std::stoul(digits);
            };
            try {
                if (key == "order" || key == "from") {
                    Rational v = parse_rational(value);
                    if (!is_integer(v) || v < 0) throw parse_error("expected a nonnegative integer", 0);
                    (key == "order" ? order : from) = v.get_num().get_ui();
                } else if (!key.empty() && key[0] == 'c') {
                    cs[index(key)] = traits::parse(value);
                } else if (!key.empty() && key[0] == 'P') {
                    ps[index(key)] = traits::parse(value);
                } else {
                    throw parse_error("unknown key '" + key + "'", 0);
                }
            } catch (parse_error const& e) {
                if (e.line) throw;
                throw parse_error(e.message, eq + 1 + e.position, line_no);
            }
        }
        if (!order) throw parse_error("missing 'order'", 0, line_no);
        std::size_t f = from.value_or(0);
        std::vector<Poly> c(*order), p(f + *order);
        for (auto& [i, v] : cs) {
            if (i >= c.size()) throw parse_error("coefficient index " + std::to_string(i) + " out of range", 0);
            c[i] = v;
        }
        for (auto& [i, v] : ps) {
            if (i >= p.size()) throw parse_error("initial index " + std::to_string(i) + " out of range", 0);
            p[i] = v;
        }
        return PolySeqRec(std::move(c), std::move(p), f);
    }

private:
    std::vector<Poly> c_;
    std::vector<Poly> p_;
    std::size_t from_;
    DegreeEnvelope env_;

    void build_envelope() {
        long t = static_cast<long>(c_.size());
        bool first = true;
        for (long i = 0; i < t; ++i) {
            auto h = traits::hi(c_[static_cast<std::size_t>(i)]);
            if (!h) continue;
            long up = detail::ceil_div(*h, t - i);
            long down = detail::floor_div(*traits::lo(c_[static_cast<std::size_t>(i)]), t - i);
            if (first) {
                env_.hi_slope = up;
                env_.lo_slope = down;
                first = false;
            } else {
                env_.hi_slope = std::max(env_.hi_slope, up);
                env_.lo_slope = std::min(env_.lo_slope, down);
            }
        }
        first = true;
        for (std::size_t j = 0; j < p_.size(); ++j) {
            auto h = traits::hi(p_[j]);
            if (!h) continue;
            long up = *h - env_.hi_slope * long(j);
            long down = *traits::lo(p_[j]) - env_.lo_slope * long(j);
            if (first) {
                env_.hi_intercept = up;
                env_.lo_intercept = down;
                first = false;
            } else {
                env_.hi_intercept = std::max(env_.hi_intercept, up);
                env_.lo_intercept = std::min(env_.lo_intercept, down);
            }
        }
        env_.any = !first;
    }
};

using LaurentPolySeq = PolySeqRec<LaurentPoly>;
using MultiPolySeq = PolySeqRec<MultiPoly>;

template <class Poly>
Poly polyseq_term(PolySeqRec<Poly> const& ps, std::size_t n) {
    return ps.terms(n + 1)[n];
}

/// b_n = sum_k [x^k]P_n * a_k for n < N. Every P_n must be an ordinary polynomial.
template <SequenceSource A>
std::vector<Rational> tri_plain(LaurentPolySeq const& ps, A const& a, std::size_t n) {
    auto polys = ps.terms(n);
    long top = -1;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (auto lo = polys[i].min_exp(); lo && *lo < 0)
            throw invalid_argument("P_" + std::to_string(i) + " = " + polys[i].to_string("x") +
                                   " is not an ordinary polynomial; use tri_laurent");
        if (auto hi = polys[i].max_exp()) top = std::max(top, *hi);
    }
    auto av = a.terms(static_cast<std::size_t>(top + 1));
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto const& [e, c] : polys[i].terms()) out[i] += c * av[static_cast<std::size_t>(e)];
    return out;
}

/// c_n = sum_{k>=0} [x^k]P_n * a_k + sum_{k<0} [x^k]P_n * b_{-k-1}.
template <SequenceSource A, SequenceSource B>
std::vector<Rational> tri_laurent(LaurentPolySeq const& ps, A const& a, B const& b, std::size_t n) {
    auto polys = ps.terms(n);
    long top = -1, bottom = 0;
    for (auto const& p : polys) {
        if (auto hi = p.max_exp()) top = std::max(top, *hi);
        if (auto lo = p.min_exp()) bottom = std::min(bottom, *lo);
    }
    auto av = a.terms(static_cast<std::size_t>(top + 1));
    auto bv = b.terms(static_cast<std::size_t>(-bottom));
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto const& [e, c] : polys[i].terms())
            out[i] += c * (e >= 0 ? av[static_cast<std::size_t>(e)] : bv[static_cast<std::size_t>(-e - 1)]);
    return out;
}

using MultiSource = std::function<Rational(MultiPoly::exponent const&)>;

inline constexpr std::size_t default_multi_term_cap = 1u << 20;

/// sum over monomials of [x^e]P_n * a(e), for n < N.
inline std::vector<Rational> tri_multi(MultiPolySeq const& ps, MultiSource const& a, std::size_t n,
                                       std::size_t max_terms = default_multi_term_cap) {
    auto polys = ps.terms(n, max_terms);
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (polys[i].size() > max_terms) throw budget_exceeded("polynomial term cap exceeded");
        for (auto const& [e, c] : polys[i].terms()) {
            Rational v = a(e);
            if (v != 0) out[i] += c * v;
        }
    }
    return out;
}

template <SequenceSource A>
GuessReport tri_then_guess(LaurentPolySeq const& ps, A const& a, std::size_t n, GuessOptions const& opts) {
    return run_guess(tri_plain(ps, a, n), opts);
}

template <SequenceSource A, SequenceSource B>
GuessReport tri_then_guess(LaurentPolySeq const& ps, A const& a, B const& b, std::size_t n, GuessOptions const& opts) {
    return run_guess(tri_laurent(ps, a, b, n), opts);
}

inline GuessReport tri_then_guess(MultiPolySeq const& ps, MultiSource const& a, std::size_t n, GuessOptions const& opts) {
    return run_guess(tri_multi(ps, a, n), opts);
}

} // namespace coreseq
