#pragma once

/**
 * @file laurent_matrix.hpp
 * @brief Square matrices over the Laurent ring Q[w, w^-1].
 */

#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "laurent.hpp"
#include "unipoly.hpp"

namespace coreseq {

using LMatrix = DenseMatrix<LaurentPoly>;
using LRow = std::vector<LaurentPoly>;

/// Monic characteristic polynomial in x with Laurent coefficients, x^0 first.
struct LCharPoly {
    std::vector<LaurentPoly> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    /// Specializes w to 1.
    UniPoly at_one() const {
        std::vector<Rational> c;
        for (auto const& p : coeffs) c.push_back(p.eval_one());
        return UniPoly(std::move(c));
    }

    /// e.g. `x^3 - 5*w*x^2 + (7*w^2 - w^-2)*x + (3*w^-1 - 3*w^3)` (highest power first).
    std::string to_string() const {
        std::string out;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            LaurentPoly const& c = coeffs[k];
            if (c.is_zero()) continue;
            std::string mono = detail::power_string("x", static_cast<long>(k));
            bool neg = false;
            std::string body;
            if (c.size() == 1) {
                auto const& [e, q] = *c.terms().begin();
                neg = q < 0;
                LaurentPoly mag = LaurentPoly::monomial(neg ? Rational(-q) : q, e);
                std::string cs = mag.to_string();
                body = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
            } else {
                body = "(" + c.to_string() + ")" + (mono.empty() ? "" : "*" + mono);
            }
            if (out.empty())
                out = neg ? "-" + body : body;
            else
                out += (neg ? " - " : " + ") + body;
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(LCharPoly const&, LCharPoly const&) = default;
};

inline LMatrix mat_mul(LMatrix const& a, LMatrix const& b) {
    if (a.size() != b.size() || !a.square() || !b.square()) throw invalid_argument("mat_mul: size mismatch");
    return a * b;
}

inline LMatrix mat_pow(LMatrix const& a, unsigned long n) { return matrix_power(a, n); }

inline LRow row_advance(LRow const& v, LMatrix const& a) { return row_times(v, a); }

inline LCharPoly char_poly(LMatrix const& a) { return LCharPoly{faddeev_leverrier(a)}; }

inline bool cayley_hamilton_check(LMatrix const& a) {
    return matrix_polynomial(char_poly(a).coeffs, a).is_zero();
}

/// Entrywise specialization w = 1.
inline DenseMatrix<Rational> eval_one(LMatrix const& a) {
    return a.map([](LaurentPoly const& p) { return p.eval_one(); });
}

inline UniPoly char_poly(DenseMatrix<Rational> const& a) { return UniPoly(faddeev_leverrier(a)); }

} // namespace coreseq
