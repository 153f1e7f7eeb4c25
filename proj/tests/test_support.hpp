#pragma once

#include <random>
#include <vector>

#include <coreseq/bipoly.hpp>
#include <coreseq/laurent.hpp>
#include <coreseq/rational.hpp>
#include <coreseq/unipoly.hpp>

namespace testing_support {

using namespace coreseq;

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Integer random_integer(std::mt19937_64& rng, int lo, int hi) {
    return Integer(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int terms = 4, int span = 3) {
    std::uniform_int_distribution<int> e(-span, span);
    LaurentPoly p;
    for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(random_rational(rng), e(rng));
    return p;
}

/// Entry of N[w^±1] with at most `terms` monomials and small coefficients.
inline LaurentPoly random_natural_laurent(std::mt19937_64& rng, int terms = 3, int span = 2) {
    std::uniform_int_distribution<int> e(-span, span), c(0, 2), k(0, terms);
    LaurentPoly p;
    int n = k(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(c(rng), e(rng));
    return p;
}

inline UniPoly random_unipoly(std::mt19937_64& rng, int max_deg = 4) {
    std::vector<Rational> c(std::uniform_int_distribution<int>(0, max_deg)(rng) + 1);
    for (auto& v : c) v = random_rational(rng);
    return UniPoly(std::move(c));
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int terms = 4, int max_deg = 3) {
    std::uniform_int_distribution<int> e(0, max_deg);
    BiPoly p;
    for (int i = 0; i < terms; ++i) p += BiPoly::monomial(random_rational(rng), e(rng), e(rng));
    return p;
}

inline std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace testing_support

#include <coreseq/cfinite.hpp>

namespace testing_support {

/// Random recurrence of order 1..max_order with small rational data and a
/// random exception prefix of up to 2 extra terms.
inline coreseq::CFiniteSeq random_cfinite(std::mt19937_64& rng, int max_order = 4, int bound = 9) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, static_cast<std::size_t>(max_order))(rng);
    std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<coreseq::Rational> c(r), x(r + extra);
    for (auto& v : c) v = random_rational(rng, bound);
    if (c.back() == 0) c.back() = 1;
    for (auto& v : x) v = random_rational(rng, bound);
    return coreseq::CFiniteSeq(c, x, r + extra);
}

} // namespace testing_support
