#include <gtest/gtest.h>

#include <coreseq/cfinite.hpp>

#include "test_support.hpp"

using namespace coreseq;
using namespace testing_support;

namespace {

CFiniteSeq fib() { return CFiniteSeq({1, 1}, {0, 1}); }
CFiniteSeq naturals() { return CFiniteSeq({2, -1}, {0, 1}); }

} // namespace

TEST(CFiniteTerm, Examples) {
    EXPECT_EQ(CFiniteSeq::geometric(2).term(10), 1024);
    EXPECT_EQ(fib().term(10), 55);
    CFiniteSeq s({0, 5, 0, -6, 0, 1}, ints({1, 2, 3, 6, 10, 19}));
    EXPECT_EQ(s.term(12), 1145);
    EXPECT_EQ(s.terms(14), ints({1, 2, 3, 6, 10, 19, 33, 61, 108, 197, 352, 638, 1145, 2069}));
}

TEST(CFiniteText, RoundTripAndErrors) {
    auto a = CFiniteSeq::parse("rec: 1,1; from: 2; prefix: 0,1");
    EXPECT_EQ(a, fib());
    EXPECT_EQ(a.to_string(), "rec: 1,1; from: 2; prefix: 0,1");
    EXPECT_EQ(CFiniteSeq::parse(a.to_string()), a);
    auto b = CFiniteSeq::parse("rec: 1/2; from: 3; prefix: 7, 0, 4");
    EXPECT_EQ(b.term(4), 1);
    EXPECT_EQ(CFiniteSeq::parse("rec: ; from: 1; prefix: 3").terms(3), ints({3, 0, 0}));
    EXPECT_THROW(CFiniteSeq::parse("rec: 1,1; prefix: 0"), invalid_argument);
    EXPECT_THROW(CFiniteSeq::parse("rec: 1,1; prefix: 0,1,5"), integrity_error);
    EXPECT_THROW(CFiniteSeq::parse("rec: 1,x; prefix: 0,1"), parse_error);
    EXPECT_THROW(CFiniteSeq::parse("rec: 1; pre: 0"), parse_error);
}

TEST(CFiniteAdd, Examples) {
    auto a = fib();
    EXPECT_EQ(add(a, CFiniteSeq()).terms(20), a.terms(20));
    auto s = add(CFiniteSeq::geometric(2), CFiniteSeq::geometric(3));
    EXPECT_EQ(s.coeffs(), ints({5, -6}));
    auto ff = add(a, a);
    EXPECT_EQ(ff.order(), 2u);
    EXPECT_EQ(ff.term(10), 110);
}

TEST(CFiniteHadamard, Examples) {
    EXPECT_EQ(hadamard(CFiniteSeq::geometric(2), CFiniteSeq::geometric(3)), CFiniteSeq::geometric(6));
    auto sq = hadamard(naturals(), naturals());
    EXPECT_EQ(sq.coeffs(), ints({3, -3, 1}));
    auto x = sq.terms(10);
    for (long n = 0; n < 10; ++n) EXPECT_EQ(x[n], n * n);
    auto ff = hadamard(fib(), fib());
    EXPECT_LE(ff.order(), 4u);
    EXPECT_EQ(ff.term(10), 3025);
}

TEST(CFinitePartialSums, Examples) {
    auto p = partial_sums(CFiniteSeq::constant(1)).terms(10);
    for (long n = 0; n < 10; ++n) EXPECT_EQ(p[n], n + 1);
    auto g = partial_sums(CFiniteSeq::geometric(2)).terms(10);
    for (unsigned long n = 0; n < 10; ++n) EXPECT_EQ(g[n], pow(Rational(2), n + 1) - 1);
    auto f = partial_sums(fib()).terms(10);
    auto fs = fib().terms(12);
    for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(f[n], fs[n + 2] - 1);
}

TEST(CFiniteDilate, Examples) {
    EXPECT_EQ(dilate(CFiniteSeq::geometric(2), 3), CFiniteSeq::geometric(8));
    auto d = dilate(fib(), 2);
    EXPECT_EQ(d.coeffs(), ints({3, -1}));
    EXPECT_EQ(d.terms(5), ints({0, 1, 3, 8, 21}));
    EXPECT_EQ(dilate(fib(), 1), fib());
    EXPECT_THROW(dilate(fib(), 0), invalid_argument);
}

TEST(CFiniteShift, Examples) {
    EXPECT_EQ(shift(fib(), 0), fib());
    EXPECT_EQ(shift(fib(), 1).terms(5), ints({1, 1, 2, 3, 5}));
    CFiniteSeq c({0, 5, 0, -6, 0, 1}, ints({2, 4, 8, 16, 32, 57}));
    EXPECT_EQ(shift(c, 2).terms(3), ints({8, 16, 32}));
}

TEST(CFiniteHilbert, Examples) {
    EXPECT_EQ(hilbert_series(CFiniteSeq::constant(1)), HilbertSeries(1, UniPoly::parse("1 - t")));
    EXPECT_EQ(hilbert_series(CFiniteSeq::geometric(2)), HilbertSeries(1, UniPoly::parse("1 - 2*t")));
    auto h = hilbert_series(fib());
    EXPECT_EQ(h.to_string(), "(t) / (1 - t - t^2)");
    EXPECT_EQ(h.expand(11)[10], 55);
}

TEST(CFiniteHilbert, PrefixBecomesNumerator) {
    CFiniteSeq a({2}, ints({5, 1}), 2);  // 5, 1, 2, 4, 8, ...
    auto h = hilbert_series(a);
    EXPECT_EQ(h.expand(6), ints({5, 1, 2, 4, 8, 16}));
    EXPECT_EQ(from_hilbert(h).terms(8), a.terms(8));
}

TEST(CFiniteFromHilbert, Examples) {
    EXPECT_EQ(from_hilbert(HilbertSeries(1, UniPoly::parse("1 - t"))), CFiniteSeq::constant(1));
    EXPECT_EQ(from_hilbert(HilbertSeries(UniPoly::parse("t"), UniPoly::parse("1 - t - t^2"))), fib());
    auto odd = from_hilbert(HilbertSeries(UniPoly::parse("1 + t"), UniPoly::parse("1 - 2*t + t^2")));
    EXPECT_EQ(odd.terms(5), ints({1, 3, 5, 7, 9}));
    EXPECT_THROW(HilbertSeries(1, UniPoly::parse("t")), invalid_argument);
}

TEST(CFiniteMinimize, DropsRedundantFactors) {
    // (x - 2)(x - 3) annihilates 2^n, and the prefix 0 0 is an exception.
    CFiniteSeq a({5, -6}, ints({0, 0, 4, 8}), 4);
    auto m = minimize(a);
    EXPECT_EQ(m.coeffs(), ints({2}));
    EXPECT_EQ(m.valid_from(), 3u);
    EXPECT_EQ(m.terms(12), a.terms(12));
    EXPECT_EQ(minimize(CFiniteSeq({1}, ints({0}))), CFiniteSeq());
}

TEST(CFiniteProperties, HilbertRoundTrip) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        auto a = random_cfinite(rng, 5);
        ASSERT_EQ(from_hilbert(hilbert_series(a)).terms(100), a.terms(100)) << a.to_string();
    }
}

TEST(CFiniteProperties, ClosureOpsMatchTermwise) {
    std::mt19937_64 rng(2);
    constexpr std::size_t n = 200;
    for (int i = 0; i < 100; ++i) {
        auto a = random_cfinite(rng), b = random_cfinite(rng);
        auto x = a.terms(n), y = b.terms(n);
        auto s = add(a, b).terms(n);
        auto h = hadamard(a, b).terms(n);
        auto p = partial_sums(a).terms(n);
        std::size_t d = 1 + rng() % 3;
        auto dl = dilate(a, d).terms(n / d);
        auto xd = a.terms(n);
        Rational run = 0;
        for (std::size_t k = 0; k < n; ++k) {
            run += x[k];
            ASSERT_EQ(s[k], x[k] + y[k]);
            ASSERT_EQ(h[k], x[k] * y[k]);
            ASSERT_EQ(p[k], run);
            if (k < n / d) ASSERT_EQ(dl[k], xd[k * d]);
        }
    }
}

TEST(CFiniteProperties, HilbertIsAdditive) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto a = random_cfinite(rng, 3), b = random_cfinite(rng, 3);
        ASSERT_EQ(hilbert_series(add(a, b)), hilbert_series(a) + hilbert_series(b));
    }
}

TEST(CFiniteProperties, DilateComposes) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        auto a = random_cfinite(rng, 3, 3);
        std::size_t d = 1 + rng() % 3, e = 1 + rng() % 3;
        ASSERT_EQ(dilate(dilate(a, d), e).terms(100), dilate(a, d * e).terms(100));
    }
}
