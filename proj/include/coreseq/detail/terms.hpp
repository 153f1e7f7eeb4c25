#pragma once

// Shared tokenizer for the "sum of monomials" literal grammar used by the
// Laurent, univariate and bivariate polynomial parsers:
//
//   expr   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := digits ['/' digits] | var ['^' ['-'] digits]
//
// Whitespace is ignored between tokens.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "../error.hpp"
#include "../rational.hpp"

namespace coreseq::detail {

struct monomial_term {
    Rational coef;
    std::vector<long> exps;
};

class term_parser {
public:
    term_parser(std::string_view text, std::vector<std::string> vars, bool allow_negative_exponents)
        : text_(text), vars_(std::move(vars)), allow_neg_(allow_negative_exponents) {}

    std::vector<monomial_term> parse() {
        std::vector<monomial_term> out;
        skip();
        if (pos_ == text_.size()) throw parse_error("empty expression", pos_);
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        while (true) {
            auto t = term();
            if (neg) t.coef = -t.coef;
            out.push_back(std::move(t));
            skip();
            if (pos_ == text_.size()) break;
            char c = peek();
            if (c != '+' && c != '-') throw parse_error("expected '+' or '-' but found '" + std::string(1, c) + "'", pos_);
            neg = c == '-';
            ++pos_;
        }
        return out;
    }

private:
    std::string_view text_;
    std::vector<std::string> vars_;
    bool allow_neg_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Integer digits(char const* what) {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error(std::string("expected ") + what, start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    monomial_term term() {
        monomial_term t{Rational(1), std::vector<long>(vars_.size(), 0)};
        factor(t);
        while (true) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            factor(t);
        }
        return t;
    }

    void factor(monomial_term& t) {
        skip();
        if (pos_ == text_.size()) throw parse_error("unexpected end of input", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = digits("number");
            Integer den = 1;
            skip();
            if (peek() == '/') {
                ++pos_;
                std::size_t at = pos_;
                den = digits("denominator");
                if (den == 0) throw parse_error("zero denominator", at);
            }
            Rational q(num, den);
            q.canonicalize();
            t.coef *= q;
            return;
        }
        std::size_t best = vars_.size();
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            auto const& name = vars_[v];
            if (text_.substr(pos_, name.size()) == name && name.size() > best_len) {
                best = v;
                best_len = name.size();
            }
        }
        std::size_t start = pos_;
        if (best == vars_.size() ||
            (start + best_len < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[start + best_len])) || text_[start + best_len] == '_'))) {
            std::size_t end = start;
            while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
            if (end == start) throw parse_error("unexpected character '" + std::string(1, text_[start]) + "'", start);
            throw parse_error("unknown symbol '" + std::string(text_.substr(start, end - start)) + "'", start);
        }
        pos_ += best_len;
        long e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (peek() == '-') {
                if (!allow_neg_) throw parse_error("negative exponent not allowed here", pos_);
                neg = true;
                ++pos_;
            }
            std::size_t at = pos_;
            Integer z = digits("exponent");
            if (!z.fits_slong_p()) throw parse_error("exponent too large", at);
            e = z.get_si();
            if (neg) e = -e;
        }
        t.exps[best] += e;
    }
};

inline std::vector<monomial_term> parse_terms(std::string_view text, std::vector<std::string> vars,
                                              bool allow_negative_exponents) {
    return term_parser(text, std::move(vars), allow_negative_exponents).parse();
}

// Formats a signed sum of already-rendered monomials: "a - b + c", "0" when empty.
struct sum_writer {
    std::string out;
    void add(Rational const& coef, std::string const& monomial) {
        if (coef == 0) return;
        Rational mag = abs(coef);
        std::string body;
        if (monomial.empty())
            body = to_string(mag);
        else if (mag == 1)
            body = monomial;
        else
            body = to_string(mag) + "*" + monomial;
        if (out.empty())
            out = coef < 0 ? "-" + body : body;
        else
            out += (coef < 0 ? " - " : " + ") + body;
    }
    std::string str() const { return out.empty() ? "0" : out; }
};

inline std::string power_string(std::string const& var, long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace coreseq::detail
