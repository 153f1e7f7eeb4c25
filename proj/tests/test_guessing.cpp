#include <gtest/gtest.h>

#include <coreseq/guessing.hpp>

#include "test_support.hpp"

using namespace coreseq;
using namespace testing_support;

namespace {

std::vector<Rational> central_binomials(std::size_t n) {
    std::vector<Rational> v;
    for (unsigned long k = 0; k < n; ++k) v.emplace_back(binomial(2 * k, k));
    return v;
}

std::vector<Rational> catalan(std::size_t n) {
    std::vector<Rational> v;
    for (unsigned long k = 0; k < n; ++k) v.push_back(Rational(binomial(2 * k, k)) / Rational(long(k + 1)));
    return v;
}

std::vector<Rational> multinomial3(std::size_t n) {
    std::vector<Rational> v;
    for (unsigned long k = 0; k < n; ++k) v.emplace_back(factorial(3 * k) / (factorial(k) * factorial(k) * factorial(k)));
    return v;
}

std::vector<Rational> fibonacci(std::size_t n) { return CFiniteSeq({1, 1}, {0, 1}).terms(n); }

} // namespace

TEST(GuessCFinite, PublishedPrefixS9) {
    auto r = guess_cfinite(ints({1, 4, 35, 310, 2789, 25096}), 3, 0, 0);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.rec, ints({9, 1, -9}));
    EXPECT_EQ(r.relation(), "x[n] = 9*x[n-1] + x[n-2] - 9*x[n-3]");
}

// Six terms pin down an order-2 recurrence before the published cubic
// x_n = x_{n-1} + 25 x_{n-2} - 25 x_{n-3} is reached; the cubic is still a
// valid relation for the data.
TEST(GuessCFinite, PublishedPrefixS10IsMinimallyOrderTwo) {
    auto terms = ints({1, 4, 19, 94, 469, 2344});
    auto r = guess_cfinite(terms, 3, 0, 0);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.rec, ints({6, -5}));
    GuessReport cubic = r;
    cubic.rec = ints({1, 25, -25});
    EXPECT_TRUE(verify_relation(terms, cubic));
}

TEST(GuessCFinite, CentralBinomialsAreNotCFinite) {
    auto r = guess_cfinite(central_binomials(24), 8, 0);
    EXPECT_FALSE(r.found());
    EXPECT_EQ(r.relation(), "");
}

TEST(GuessCFinite, OffsetAndOrderZero) {
    auto r = guess_cfinite(ints({7, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), 2, 2);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.order(), 0u);
    EXPECT_EQ(r.offset, 2u);
    auto s = guess_cfinite(ints({5, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}), 1, 2, 8);
    ASSERT_TRUE(s.found());
    EXPECT_EQ(s.rec, ints({2}));
    EXPECT_EQ(s.offset, 1u);
    EXPECT_EQ(s.verify_window.end, 12u);
}

TEST(GuessCFinite, InsufficientTerms) {
    EXPECT_THROW(guess_cfinite(ints({1, 2, 3}), 3, 0), insufficient_terms);
}

TEST(GuessAlgebraic, InterleavedCentralBinomials) {
    std::vector<Rational> t;
    for (auto const& c : central_binomials(20)) {
        t.push_back(c);
        t.push_back(0);
    }
    auto r = guess_algebraic(t, 4, 2);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.relation(), "(1 - 4*t^2)*y^2 - 1 = 0");
    EXPECT_EQ(r.data_line(), "#eq (1 - 4*t^2)*y^2 - 1 = 0");
}

TEST(GuessAlgebraic, Catalan) {
    auto r = guess_algebraic(catalan(30), 2, 2);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.relation(), "t*y^2 - y + 1 = 0");
    EXPECT_TRUE(verify_relation(catalan(30), r));
}

TEST(GuessAlgebraic, AllOnes) {
    auto r = guess_algebraic(std::vector<Rational>(20, Rational(1)), 2, 2);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.relation(), "(1 - t)*y - 1 = 0");
}

TEST(GuessPRecursive, CentralBinomials) {
    auto r = guess_precursive(central_binomials(30), 2, 2);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.relation(), "(n)*x[n] + (2 - 4*n)*x[n-1] = 0");
    EXPECT_EQ(r.data_line(), "#rec (n)*x[n] + (2 - 4*n)*x[n-1] = 0");
}

TEST(GuessPRecursive, Factorial) {
    std::vector<Rational> f;
    for (unsigned long k = 0; k < 20; ++k) f.emplace_back(factorial(k));
    auto r = guess_precursive(f, 2, 2);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.relation(), "(1)*x[n] + (-n)*x[n-1] = 0");
}

TEST(GuessPRecursive, CentralMultinomials) {
    auto t = multinomial3(20);
    EXPECT_EQ(t[1], 6);
    EXPECT_EQ(t[3], 1680);
    auto r = guess_precursive(t, 2, 2);
    ASSERT_TRUE(r.found());
    // n^2 a_n - 3(3n-1)(3n-2) a_{n-1} = 0
    EXPECT_EQ(r.prec[0], UniPoly::parse("n^2", "n"));
    EXPECT_EQ(r.prec[1], UniPoly::parse("-6 + 27*n - 27*n^2", "n"));
}

TEST(VerifyRelation, Examples) {
    auto c = ints({2, 4, 8, 16, 32, 57, 114, 193, 386, 639, 1278, 2094, 4188});
    GuessReport expected;
    expected.status = GuessStatus::found;
    expected.rec = ints({0, 5, 0, -6, 0, 1});
    EXPECT_TRUE(verify_relation(c, expected));
    auto c_bad = c;
    c_bad[12] = 6829;
    EXPECT_FALSE(verify_relation(c_bad, expected));

    GuessReport fib_rec = expected;
    fib_rec.rec = ints({1, 1});
    EXPECT_TRUE(verify_relation(fibonacci(20), fib_rec));
    fib_rec.rec = ints({2});
    EXPECT_FALSE(verify_relation(fibonacci(20), fib_rec));
    EXPECT_FALSE(verify_relation(fibonacci(20), GuessReport{}));
}

TEST(GuessProperties, RandomCFiniteRecovered) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 60; ++i) {
        auto a = random_cfinite(rng, 5);
        auto x = a.terms(40);
        auto r = guess_cfinite(x, 5, 2);
        ASSERT_TRUE(r.found());
        ASSERT_TRUE(verify_relation(x, r));
        // Extend with the guessed recurrence and compare 100 further terms.
        std::size_t start = r.offset + r.rec.size();
        std::vector<Rational> init(x.begin(), x.begin() + long(std::max(start, r.rec.size())));
        CFiniteSeq g(r.rec, init, init.size());
        ASSERT_EQ(g.terms(140), a.terms(140));
    }
}

TEST(GuessProperties, RationalSeriesGiveDegreeOneEquations) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto p = random_unipoly(rng, 3);
        auto q = random_unipoly(rng, 3);
        if (q.coeff(0) == 0) q += UniPoly(1);
        HilbertSeries h(p, q);
        auto terms = h.expand(30);
        auto r = guess_algebraic(terms, 3, 2);
        ASSERT_TRUE(r.found());
        ASSERT_EQ(r.eq.size(), 2u);
        // eq[1] y + eq[0] = 0 must be proportional to Q y - P.
        ASSERT_EQ(r.eq[1] * h.numerator, -(r.eq[0] * h.denominator));
        ASSERT_TRUE(verify_relation(terms, r));
    }
}

TEST(GuessProperties, Deterministic) {
    auto t = catalan(30);
    EXPECT_EQ(guess_algebraic(t, 3, 3).relation(), guess_algebraic(t, 3, 3).relation());
    EXPECT_EQ(guess_precursive(t, 2, 2).relation(), guess_precursive(t, 2, 2).relation());
}
