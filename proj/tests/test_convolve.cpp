#include <gtest/gtest.h>

#include <coreseq/convolve.hpp>

#include "test_support.hpp"

using namespace coreseq;
using namespace testing_support;

namespace {

LaurentPoly lx(std::string const& s) { return LaurentPoly::parse(s, "x"); }

LaurentPolySeq powers_of(std::string const& c) { return LaurentPolySeq({lx(c)}, {LaurentPoly(1)}); }

ExplicitSeq delta0(std::size_t n) {
    std::vector<Rational> v(n);
    v[0] = 1;
    return {v};
}

ExplicitSeq zeros(std::size_t n) { return {std::vector<Rational>(n)}; }

MultiSource diagonal_delta(std::size_t vars) {
    return [vars](MultiPoly::exponent const& e) {
        for (std::size_t i = 1; i < vars; ++i)
            if (e[i] != e[0]) return Rational(0);
        return Rational(1);
    };
}

} // namespace

TEST(PolySeqTerm, Examples) {
    auto ps = powers_of("x^-1 + x");
    EXPECT_EQ(polyseq_term(ps, 4), pow(lx("x^-1 + x"), 4));
    EXPECT_EQ(polyseq_term(powers_of("x^2"), 3), lx("x^6"));
    MultiPolySeq m({pow(MultiPoly::parse("x1 + x2"), 2)}, {MultiPoly(1)});
    EXPECT_EQ(polyseq_term(m, 2), pow(MultiPoly::parse("x1 + x2"), 4));
}

TEST(PolySeqTerm, EnvelopeFromRecurrence) {
    // P_{n+2} = x P_{n+1} + x^3 P_n: degree 3n/2 + c at worst.
    LaurentPolySeq ps({lx("x^3"), lx("x")}, {LaurentPoly(1), lx("x")});
    EXPECT_EQ(ps.envelope().hi_slope, 2);
    auto t = ps.terms(30);
    for (std::size_t n = 0; n < 30; ++n) ASSERT_LE(*t[n].max_exp(), 2 * long(n) + ps.envelope().hi_intercept);
}

TEST(PolySeqText, RoundTripAndErrors) {
    auto ps = LaurentPolySeq::parse("# Example\norder = 1\nfrom = 0\nc[0] = x^-1 + x\nP[0] = 1\n");
    EXPECT_EQ(ps.order(), 1u);
    EXPECT_EQ(LaurentPolySeq::parse(ps.to_string()).terms(6), ps.terms(6));
    try {
        LaurentPolySeq::parse("order = 1\nc[0] = x + y\nP[0] = 1\n");
        FAIL();
    } catch (parse_error const& e) {
        EXPECT_EQ(e.line, 2u);
    }
    EXPECT_THROW(LaurentPolySeq::parse("order = 1\nc[3] = x\n"), parse_error);
    EXPECT_THROW(LaurentPolySeq::parse("c[0] = x\n"), parse_error);
    auto m = MultiPolySeq::parse("order = 1\nc[0] = x1^2 + 2*x1*x2 + x2^2\nP[0] = 1\n");
    EXPECT_EQ(polyseq_term(m, 1), pow(MultiPoly::parse("x1 + x2"), 2));
}

TEST(TriPlain, Examples) {
    auto fib = CFiniteSeq({1, 1}, {0, 1});
    EXPECT_EQ(tri_plain(powers_of("x"), fib, 12), fib.terms(12));
    auto r = tri_plain(powers_of("1 + x"), CFiniteSeq::constant(1), 10);
    for (unsigned long n = 0; n < 10; ++n) EXPECT_EQ(r[n], pow(Rational(2), n));
    auto bt = tri_plain(powers_of("1 + x"), fib, 30);
    auto g = guess_cfinite(bt, 4, 0);
    ASSERT_TRUE(g.found());
    EXPECT_EQ(g.rec, ints({3, -1}));
    EXPECT_THROW(tri_plain(powers_of("x^-1"), fib, 3), invalid_argument);
}

TEST(TriPlain, IsLinearInTheSequence) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        auto a = random_cfinite(rng, 3), b = random_cfinite(rng, 3);
        LaurentPolySeq ps({random_natural_laurent(rng, 3, 2).shifted(2), random_natural_laurent(rng, 3, 2).shifted(2)},
                          {LaurentPoly(1), lx("1 + x")});
        auto sa = tri_plain(ps, a, 20), sb = tri_plain(ps, b, 20), sab = tri_plain(ps, add(a, b), 20);
        for (std::size_t n = 0; n < 20; ++n) ASSERT_EQ(sab[n], sa[n] + sb[n]);
    }
}

TEST(TriLaurent, CentralBinomialsInterleaved) {
    auto c = tri_laurent(powers_of("x^-1 + x"), delta0(64), zeros(64), 9);
    EXPECT_EQ(c, ints({1, 0, 2, 0, 6, 0, 20, 0, 70}));
}

TEST(TriLaurent, SmallCases) {
    auto fib = CFiniteSeq({1, 1}, {0, 1});
    LaurentPolySeq shifted({lx("x")}, {lx("x^-1")});  // P_n = x^{n-1}
    auto v = tri_laurent(shifted, fib, zeros(4), 10);
    auto f = fib.terms(10);
    for (std::size_t n = 1; n < 10; ++n) EXPECT_EQ(v[n], f[n - 1]);
    auto ones = tri_laurent(powers_of("x^-1"), zeros(1), CFiniteSeq::constant(1), 10);
    for (std::size_t n = 1; n < 10; ++n) EXPECT_EQ(ones[n], 1);
}

TEST(TriMulti, MultinomialExamples) {
    MultiPolySeq two({pow(MultiPoly::parse("x1 + x2"), 2)}, {MultiPoly(1)});
    MultiPolySeq three({pow(MultiPoly::parse("x1 + x2 + x3"), 3)}, {MultiPoly(1)});
    auto cb = tri_multi(two, diagonal_delta(2), 13);
    auto mn = tri_multi(three, diagonal_delta(3), 13);
    auto sq = tri_multi(two, [](MultiPoly::exponent const& e) {
        return e[0] == e[1] ? Rational(binomial(2 * static_cast<unsigned long>(e[0]), static_cast<unsigned long>(e[0]))) : Rational(0);
    }, 13);
    for (unsigned long n = 0; n <= 12; ++n) {
        Rational c(binomial(2 * n, n));
        EXPECT_EQ(cb[n], c);
        EXPECT_EQ(sq[n], c * c);
        EXPECT_EQ(mn[n], Rational(factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n))));
    }
    EXPECT_THROW(tri_multi(three, diagonal_delta(3), 13, 50), budget_exceeded);
}

TEST(TriThenGuess, LaurentExampleIsAlgebraic) {
    auto r = tri_then_guess(powers_of("x^-1 + x"), delta0(128), zeros(128), 40, GuessOptions{GuessKind::algebraic, 8, 0, 4, 2, 3, 8});
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.relation(), "(1 - 4*t^2)*y^2 - 1 = 0");
}

TEST(TriThenGuess, MultinomialOnlyPRecursive) {
    MultiPolySeq three({pow(MultiPoly::parse("x1 + x2 + x3"), 3)}, {MultiPoly(1)});
    auto terms = tri_multi(three, diagonal_delta(3), 36);
    EXPECT_FALSE(guess_cfinite(terms, 8, 0).found());
    EXPECT_FALSE(guess_algebraic(terms, 4, 4).found());
    auto p = guess_precursive(terms, 2, 2);
    ASSERT_TRUE(p.found());
    EXPECT_TRUE(verify_relation(terms, p));
}

TEST(SequenceArg, ParsesBothForms) {
    EXPECT_EQ(SequenceArg::parse("rec: 2; prefix: 1").terms(4), ints({1, 2, 4, 8}));
    EXPECT_EQ(SequenceArg::parse("1,0,0").terms(2), ints({1, 0}));
    EXPECT_THROW(SequenceArg::parse("1,0,0").terms(5), coverage_error);
}
