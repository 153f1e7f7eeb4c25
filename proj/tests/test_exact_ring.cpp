#include <gtest/gtest.h>

#include <coreseq/bipoly.hpp>
#include <coreseq/laurent.hpp>
#include <coreseq/unipoly.hpp>

#include "test_support.hpp"

using namespace coreseq;
using namespace testing_support;

TEST(LaurentParse, SingleSymbol) {
    EXPECT_EQ(laurent_parse("w"), LaurentPoly::w());
}

TEST(LaurentParse, MixedExponents) {
    auto p = laurent_parse("2*w^-1 + w^3");
    EXPECT_EQ(p.coeff(-1), 2);
    EXPECT_EQ(p.coeff(3), 1);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.to_string(), "2*w^-1 + w^3");
}

TEST(LaurentParse, BinaryMinus) {
    auto p = laurent_parse("3*w^3 - 3*w^-1");
    EXPECT_EQ(p, LaurentPoly::monomial(3, 3) - LaurentPoly::monomial(3, -1));
    EXPECT_EQ(p.to_string(), "-3*w^-1 + 3*w^3");
    EXPECT_EQ(laurent_parse("0 - 3*w^-1"), LaurentPoly::monomial(-3, -1));
    EXPECT_EQ(laurent_parse("-w"), -LaurentPoly::w());
}

TEST(LaurentParse, WhitespaceAndCancellation) {
    EXPECT_TRUE(laurent_parse("  w -   w ").is_zero());
    EXPECT_EQ(laurent_parse("w*w^2*3"), LaurentPoly::monomial(3, 3));
}

TEST(LaurentParse, ErrorsCarryPosition) {
    try {
        laurent_parse("2*w + x");
        FAIL() << "expected parse_error";
    } catch (parse_error const& e) {
        EXPECT_EQ(e.position, 6u);
    }
    EXPECT_THROW(laurent_parse(""), parse_error);
    EXPECT_THROW(laurent_parse("w^"), parse_error);
    EXPECT_THROW(laurent_parse("2 +"), parse_error);
    EXPECT_THROW(laurent_parse("2 3"), parse_error);
    EXPECT_THROW(laurent_parse("wx"), parse_error);
}

TEST(LaurentMul, InversePair) {
    EXPECT_EQ(laurent_mul(LaurentPoly::w(), laurent_parse("w^-1")), LaurentPoly(1));
}

TEST(LaurentMul, BinomialSquare) {
    auto a = laurent_parse("w + w^-1");
    EXPECT_EQ(a * a, laurent_parse("w^2 + 2 + w^-2"));
}

// (w + w^-1)^n has coefficient C(n, k) at w^(n - 2k).  Splitting the support
// by exponent mod 4 separates the even-k and odd-k halves, which is the
// A_n / B_n split of the Z/3 x Z/3 example.
TEST(LaurentMul, IteratedPowerMatchesBinomialParityClasses) {
    auto a = laurent_parse("w + w^-1");
    LaurentPoly p = 1;
    for (unsigned long n = 1; n <= 12; ++n) {
        p *= a;
        LaurentPoly even, odd;
        for (unsigned long i = 0; 2 * i <= n; ++i)
            even += LaurentPoly::monomial(Rational(binomial(n, 2 * i)), long(n) - 4 * long(i));
        for (unsigned long i = 0; 2 * i + 1 <= n; ++i)
            odd += LaurentPoly::monomial(Rational(binomial(n, 2 * i + 1)), long(n) - 4 * long(i) - 2);
        EXPECT_EQ(p, even + odd) << "n=" << n;
        EXPECT_EQ(pow(a, n), p);
    }
}

TEST(LaurentEval, CoefficientSum) {
    EXPECT_EQ(laurent_eval_one(laurent_parse("w^3 + 2*w^-1")), 3);
    EXPECT_EQ(laurent_eval_one(LaurentPoly()), 0);
    EXPECT_EQ(laurent_eval_one(laurent_parse("3*w^3 - 3*w^-1")), 0);
}

TEST(LaurentQueries, SupportBounds) {
    auto p = laurent_parse("w^-2 + 5 + w^4");
    EXPECT_EQ(p.min_exp(), -2);
    EXPECT_EQ(p.max_exp(), 4);
    EXPECT_FALSE(LaurentPoly().min_exp().has_value());
    EXPECT_TRUE(p.is_natural());
    EXPECT_FALSE(laurent_parse("1/2*w").is_natural());
    EXPECT_EQ(p.eval(Rational(2)), Rational(1, 4) + 5 + 16);
}

TEST(LaurentProperties, RingAxiomsAndHomomorphism) {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b).eval_one(), a.eval_one() * b.eval_one());
        ASSERT_EQ(LaurentPoly::parse(a.to_string()), a);
        if (auto lo = (a * b).min_exp()) {
            ASSERT_GE(*lo, *a.min_exp() + *b.min_exp());
            ASSERT_LE(*(a * b).max_exp(), *a.max_exp() + *b.max_exp());
        }
    }
}

TEST(UniPoly, ArithmeticAndText) {
    auto p = UniPoly::parse("1 - t - t^2");
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.to_string(), "1 - t - t^2");
    EXPECT_EQ(p(Rational(2)), -5);
    auto [q, r] = UniPoly::parse("t^3 - 1").divmod(UniPoly::parse("t - 1"));
    EXPECT_EQ(q, UniPoly::parse("t^2 + t + 1"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(UniPoly::parse("t^2 - 1"), UniPoly::parse("2*t + 2")), UniPoly::parse("t + 1"));
    EXPECT_EQ(UniPoly::parse("3*n^2 + 1/2", "n").to_string("n"), "1/2 + 3*n^2");
    EXPECT_THROW(UniPoly::parse("t^-1"), parse_error);
}

TEST(UniPoly, SeriesExpansion) {
    auto fib = series_expand(UniPoly::parse("t"), UniPoly::parse("1 - t - t^2"), 11);
    EXPECT_EQ(fib[10], 55);
}

TEST(UniPolyProperties, RingAxioms) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto a = random_unipoly(rng), b = random_unipoly(rng), c = random_unipoly(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(UniPoly::parse(a.to_string()), a);
        if (!b.is_zero()) {
            auto [q, r] = a.divmod(b);
            ASSERT_EQ(q * b + r, a);
            ASSERT_LT(r.degree(), b.degree());
        }
    }
}

TEST(BiPoly, TextAndSubstitution) {
    auto q = BiPoly::parse("1 - t1 - t2");
    EXPECT_EQ(q.to_string(), "1 - t1 - t2");
    EXPECT_EQ(q.substitute(1, 1), UniPoly::parse("-t"));
    EXPECT_EQ(BiPoly::parse("t1*t2^2 + 3").to_string(), "3 + t1*t2^2");
    EXPECT_EQ(q(Rational(1), Rational(2)), -2);
    EXPECT_THROW(BiPoly::parse("t3"), parse_error);
}

TEST(BiPolyProperties, RingAxioms) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        auto a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(BiPoly::parse(a.to_string()), a);
    }
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational(" -6/4 "), Rational(-3, 2));
    EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(parse_rational_list("1, 2/3,-4"), (std::vector<Rational>{1, Rational(2, 3), -4}));
    EXPECT_THROW(parse_rational("1/0"), parse_error);
    EXPECT_THROW(parse_rational("x"), parse_error);
}
