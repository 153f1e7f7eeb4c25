#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals.
 *
 * GMP's mpq_class keeps every value in lowest terms with a positive
 * denominator, so nothing in the library ever rounds.
 */

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace coreseq {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(Rational const& q) { return q.get_den() == 1; }

inline std::string to_string(Integer const& z) { return z.get_str(); }

inline std::string to_string(Rational const& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses `[-+]digits[/digits]`. Surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](char const* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw parse_error(std::string("expected ") + what, i);
        return Integer(std::string(text.substr(start, i - start)));
    };
    Integer num = digits("integer literal");
    Integer den = 1;
    skip();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        den = digits("denominator");
        if (den == 0) throw parse_error("zero denominator", i - 1);
    }
    skip();
    if (i != text.size()) throw parse_error("unexpected character '" + std::string(1, text[i]) + "'", i);
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

/// Comma separated list of rationals; empty input gives an empty list.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    bool any = false;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) any = true;
    if (!any) return out;
    while (true) {
        std::size_t comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(parse_rational(piece));
        } catch (parse_error const& e) {
            throw parse_error("bad list entry '" + std::string(piece) + "'", start + e.position);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template<class Range>
std::string join(Range const& values, std::string_view sep = ",") {
    std::string s;
    bool first = true;
    for (auto const& v : values) {
        if (!first) s += sep;
        first = false;
        s += to_string(v);
    }
    return s;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational pow(Rational const& base, unsigned long e) {
    Rational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace coreseq
