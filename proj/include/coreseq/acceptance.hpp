#pragma once

/**
 * @file acceptance.hpp
 * @brief The end-to-end checks run by `coreseq verify paper` and by the
 *        acceptance test binary.
 *
 * Every check is deterministic: random instances come from fixed seeds.
 */

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfinite.hpp"
#include "convolve.hpp"
#include "detail/recurrence_fit.hpp"
#include "fp/oracle.hpp"
#include "guessing.hpp"
#include "multiseq.hpp"
#include "omega.hpp"
#include "scenario.hpp"

namespace coreseq::acceptance {

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    bool errored = false; // the check threw instead of reaching a verdict

    std::string line() const {
        std::ostringstream s;
        s << (passed ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << detail << ")  ";
        s.precision(2);
        s << std::fixed << seconds << "s";
        return s.str();
    }
};

namespace detail {

inline std::vector<Rational> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

inline std::string seq_text(std::vector<Rational> const& v) { return join(v, ","); }

inline Rational rand_q(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline CFiniteSeq random_cfinite(std::mt19937_64& rng, std::size_t max_order, int bound = 9) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, max_order)(rng);
    std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<Rational> c(r), x(r + extra);
    for (auto& v : c) v = rand_q(rng, bound);
    if (c.back() == 0) c.back() = 1;
    for (auto& v : x) v = rand_q(rng, bound);
    return CFiniteSeq(c, x, r + extra);
}

inline CFinite2Seq random_cf2(std::mt19937_64& rng) {
    std::vector<Rational> c[2];
    std::size_t v[2];
    for (int axis = 0; axis < 2; ++axis) {
        std::size_t r = 1 + rng() % 3;
        c[axis].resize(r);
        for (auto& x : c[axis]) x = rand_q(rng, 4);
        if (c[axis].back() == 0) c[axis].back() = 1;
        v[axis] = r + rng() % 2;
    }
    Block b(v[0], std::vector<Rational>(v[1]));
    for (auto& row : b)
        for (auto& x : row) x = rand_q(rng, 5);
    return CFinite2Seq(c[0], v[0], c[1], v[1], b);
}

/// Element of N[x] with small support and coefficients.
inline LaurentPoly random_natural(std::mt19937_64& rng, long max_exp, int max_total) {
    LaurentPoly p;
    int total = std::uniform_int_distribution<int>(0, max_total)(rng);
    std::uniform_int_distribution<long> e(0, max_exp);
    for (int i = 0; i < total; ++i) p += LaurentPoly::monomial(1, e(rng));
    return p;
}

/// Random ordinary polynomial sequence: order 1 or 2, coefficients of degree <= 1.
inline LaurentPolySeq random_polyseq(std::mt19937_64& rng) {
    std::size_t order = 1 + rng() % 2;
    std::vector<LaurentPoly> c, init;
    for (std::size_t i = 0; i < order; ++i) {
        LaurentPoly ci;
        while (ci.is_zero()) ci = LaurentPoly(rand_q(rng, 3)) + LaurentPoly::monomial(rand_q(rng, 3), 1);
        c.push_back(ci);
        init.push_back(LaurentPoly(rand_q(rng, 3)) + LaurentPoly::monomial(rand_q(rng, 3), 1));
    }
    return LaurentPolySeq(c, init);
}

inline DimensionChannel random_qp_channel(std::mt19937_64& rng) {
    std::size_t period = 1 + rng() % 2;
    std::vector<UniPoly> ps;
    for (std::size_t j = 0; j < period; ++j)
        ps.push_back(UniPoly(std::vector<Rational>{Rational(1 + long(rng() % 6)), Rational(long(rng() % 4))}));
    DimensionChannel ch;
    ch.name = "dim";
    ch.forward.tail = QuasiPoly(period, ps, 0);
    ch.backward.tail = QuasiPoly(period, ps, 1);
    return ch;
}

/// Random system with all entries in N[w], size 1..3, each entry's
/// coefficient sum at most 3.
inline TensorSystem random_plus_system(std::mt19937_64& rng) {
    std::size_t s = 1 + rng() % 3;
    TensorSystem sys;
    sys.name = "random";
    for (std::size_t j = 0; j < s; ++j) {
        OrbitRep o;
        o.id = "N" + std::to_string(j + 1);
        o.channels["dim"] = random_qp_channel(rng);
        sys.orbits.push_back(std::move(o));
    }
    sys.t = LMatrix(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) sys.t(i, j) = random_natural(rng, 2, 3);
    sys.initial.assign(s, LaurentPoly());
    sys.initial[0] = LaurentPoly(1);
    sys.validate();
    return sys;
}

inline MultiSource diagonal_delta(std::size_t vars) {
    return [vars](MultiPoly::exponent const& e) {
        for (std::size_t i = 1; i < vars; ++i)
            if (e[i] != e[0]) return Rational(0);
        return Rational(1);
    };
}

/// Runs a check; exceeding `limit` seconds (when positive) fails it.
template <class F>
Result timed(int id, std::string title, F&& body, double limit = 0) {
    Result r;
    r.id = id;
    r.title = std::move(title);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (std::exception const& e) {
        r.passed = false;
        r.errored = true;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && r.seconds > limit) {
        r.passed = false;
        r.detail += "; exceeded the " + std::to_string(int(limit)) + "s limit";
    }
    return r;
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

} // namespace detail

inline Result cyclic_end_to_end() {
    return detail::timed(1, "cyclic group of order 7, M = J2: c and s", [](Result& r) {
        auto table = fp::oracle_invariants(fp::FpModule::jordan_block(7, 2), 14, {'c', 's'});
        auto c = table.as_rationals('c'), s = table.as_rationals('s');
        auto printed = detail::ints({2, 4, 8, 16, 32, 57, 114, 193, 386, 639, 1278, 2094, 0, 6829});
        bool c_ok = c.size() == 14;
        for (std::size_t k = 0; k < 14 && c_ok; ++k)
            if (k != 12 && c[k] != printed[k]) c_ok = false;
        bool c13 = c_ok && c[12] == 4188;
        auto expected_rec = detail::ints({0, 5, 0, -6, 0, 1});
        bool c_rel = coreseq::detail::recurrence_holds(c, expected_rec, 6, 14);
        bool s_ok = s == detail::ints({1, 2, 3, 6, 10, 19, 33, 61, 108, 197, 352, 638, 1145, 2069});
        bool s_rel = coreseq::detail::recurrence_holds(s, expected_rec, 6, 14);
        auto gc = guess_cfinite(c, 6, 0, 2), gs = guess_cfinite(s, 6, 0, 2);
        bool gc_ok = gc.found() && gc.rec == expected_rec;
        bool gs_ok = gs.found() && gs.rec == expected_rec;
        r.passed = c_ok && c13 && c_rel && s_ok && s_rel && gc_ok && gs_ok;
        r.detail = "c values " + detail::yes(c_ok) + ", c13=" + (c.size() > 12 ? c[12].get_str() : "?") +
                   ", relation holds on c " + detail::yes(c_rel) + " and s " + detail::yes(s_rel) + ", s values " +
                   detail::yes(s_ok) + "; guessed c: " + gc.relation() + "; guessed s: " + gs.relation();
    }, 10);
}

inline Result cyclic_symbolic_vs_oracle() {
    return detail::timed(2, "cyclic tensor system agrees with the oracle for n <= 14", [](Result& r) {
        auto sys = *load_scenario("builtin:c7").system;
        auto table = fp::oracle_invariants(fp::FpModule::jordan_block(7, 2), 14, {'c', 's', 'd'});
        bool c = invariant_seq(sys, InvariantKind::c, 14) == table.as_rationals('c');
        bool s = invariant_seq(sys, InvariantKind::s, 14) == table.as_rationals('s');
        bool d = invariant_seq(sys, InvariantKind::d, 14) == table.as_rationals('d');
        r.passed = c && s && d;
        r.detail = "c " + detail::yes(c) + ", s " + detail::yes(s) + ", d " + detail::yes(d);
    });
}

inline Result z3z3_certification() {
    return detail::timed(3, "Z/3 x Z/3 system: char poly, closed forms, s_n, oracle c_n", [](Result& r) {
        auto sys = *load_scenario("builtin:z3z3").system;
        auto chi = char_poly(sys.t).to_string();
        bool chi_ok = chi == "x^3 - 5*w*x^2 + (-w^-2 + 7*w^2)*x + (3*w^-1 - 3*w^3)";

        bool ab_ok = true;
        for (unsigned long n = 1; n <= 12; ++n) {
            auto row = core_row(sys, n + 1);
            LaurentPoly a, b;
            for (unsigned long i = 0; 2 * i <= n; ++i) {
                a += LaurentPoly::monomial(Rational(binomial(n, 2 * i)), long(n) - 4 * long(i));
                if (2 * i + 1 <= n) b += LaurentPoly::monomial(Rational(binomial(n, 2 * i + 1)), long(n) - 4 * long(i) - 2);
            }
            ab_ok = ab_ok && row[0] == a && row[1] == b;
        }

        bool alpha_ok = true;
        for (long k = 1; k <= 10; ++k) {
            std::vector<Rational> alpha(11, 0);
            alpha[std::size_t(k)] = 1;
            for (long n = k + 1; n <= 10; ++n)
                for (long i = 0; i <= k && n - 1 - i >= 0; ++i) {
                    Rational c = Rational(binomial(k + 1, i + 1)) + 2 * Rational(binomial(k, i));
                    alpha[std::size_t(n)] += (i % 2 ? -c : c) * alpha[std::size_t(n - 1 - i)];
                }
            for (long n = k; n <= 10; ++n)
                alpha_ok = alpha_ok && core_row(sys, std::size_t(n + 1))[2].coeff(n - (2 * k - 1)) == alpha[std::size_t(n)];
        }

        auto s = invariant_seq(sys, InvariantKind::s, 8);
        bool s_ok = true;
        for (unsigned long k = 0; k < 8; ++k) s_ok = s_ok && s[k] == pow(Rational(3), k);
        bool rec_ok = s_recurrence(sys).terms(8) == s;

        // Engine channels harvested from the finite-field modules.
        std::vector<fp::FpModule> mods{fp::samples::z3z3_module(), fp::dual(fp::samples::z3z3_module()),
                                       fp::samples::z3z3_induced()};
        TensorSystem harvested = sys;
        for (std::size_t j = 0; j < 3; ++j) {
            auto h = fp::channel_harvest(mods[j], 6);
            harvested.orbits[j].channels = {{"dim", h.dim}, {"soc", h.soc}};
        }
        auto engine = invariant_seq(harvested, InvariantKind::c, 5);
        auto oracle = fp::oracle_invariants(fp::samples::z3z3_module(), 5, {'c'}).as_rationals('c');
        bool oracle_ok = engine == oracle;

        r.passed = chi_ok && ab_ok && alpha_ok && s_ok && rec_ok && oracle_ok;
        r.detail = "char poly " + detail::yes(chi_ok) + ", A/B " + detail::yes(ab_ok) + ", alpha " + detail::yes(alpha_ok) +
                   ", s_n " + detail::yes(s_ok) + ", s recurrence " + detail::yes(rec_ok) + ", c_n engine " +
                   detail::seq_text(engine) + " oracle " + detail::seq_text(oracle);
    }, 120);
}

inline Result prefix_recovery() {
    return detail::timed(4, "recurrences from six published terms", [](Result& r) {
        auto s10 = load_scenario("builtin:s10-prefix"), s9 = load_scenario("builtin:s9-prefix");
        auto g10 = guess_cfinite(s10.s_prefix, 3, 0, 0), g9 = guess_cfinite(s9.s_prefix, 3, 0, 0);
        bool ok10 = g10.found() && g10.rec == s10.expected_rec;
        bool ok9 = g9.found() && g9.rec == s9.expected_rec;
        bool rel10 = coreseq::detail::recurrence_holds(s10.s_prefix, s10.expected_rec, 3, 6);
        r.passed = ok10 && ok9;
        r.detail = "first: " + (g10.found() ? g10.relation() : std::string("none")) + " (expected relation also holds: " +
                   detail::yes(rel10) + "); second: " + (g9.found() ? g9.relation() : std::string("none"));
    });
}

inline Result closure_suite() {
    return detail::timed(5, "C-finite closure operations on 100 random pairs", [](Result& r) {
        std::mt19937_64 rng(20240501);
        std::size_t failures = 0;
        const std::size_t n = 200;
        for (int i = 0; i < 100; ++i) {
            auto a = detail::random_cfinite(rng, 4), b = detail::random_cfinite(rng, 4);
            auto ta = a.terms(n * 3), tb = b.terms(n);
            auto sum = add(a, b).terms(n), had = hadamard(a, b).terms(n), ps = partial_sums(a).terms(n);
            std::size_t d = 2 + std::size_t(i % 2);
            auto dil = dilate(a, d).terms(n);
            Rational run = 0;
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                run += ta[k];
                ok = sum[k] == ta[k] + tb[k] && had[k] == ta[k] * tb[k] && ps[k] == run &&
                     dil[k] == ta[k * d];
            }
            failures += !ok;
        }
        r.passed = failures == 0;
        r.detail = std::to_string(failures) + " failures over 100 pairs, 200 terms each";
    });
}

inline Result convolution_suites() {
    return detail::timed(6, "polynomial-sequence convolutions", [](Result& r) {
        std::mt19937_64 rng(77);
        std::size_t passed = 0;
        const std::size_t fit = 40, held = 40;
        for (int i = 0; i < 50; ++i) {
            auto ps = detail::random_polyseq(rng);
            auto a = detail::random_cfinite(rng, 2, 5);
            auto terms = tri_plain(ps, a, fit + held);
            std::vector<Rational> head(terms.begin(), terms.begin() + long(fit));
            auto g = guess_cfinite(head, 12, 4, 8);
            bool ok = g.found() && coreseq::detail::recurrence_holds(terms, g.rec, g.offset + g.rec.size(), terms.size());
            passed += ok;
        }
        std::vector<Rational> delta(128, 0);
        delta[0] = 1;
        LaurentPolySeq lp({LaurentPoly::parse("x^-1 + x", "x")}, {LaurentPoly(1)});
        auto first = tri_laurent(lp, ExplicitSeq{delta}, ExplicitSeq{std::vector<Rational>(128, 0)}, 9);
        bool first_ok = first == detail::ints({1, 0, 2, 0, 6, 0, 20, 0, 70});
        auto many = tri_laurent(lp, ExplicitSeq{delta}, ExplicitSeq{std::vector<Rational>(128, 0)}, 40);
        auto alg = guess_algebraic(many, 4, 2);
        bool alg_ok = alg.found() && alg.relation() == "(1 - 4*t^2)*y^2 - 1 = 0";
        r.passed = passed == 50 && first_ok && alg_ok;
        r.detail = std::to_string(passed) + "/50 random instances verified on 40 held-out terms; Laurent example " +
                   detail::seq_text(first) + ", equation " + (alg.found() ? alg.relation() : std::string("none"));
    });
}

inline Result multinomial_examples() {
    return detail::timed(7, "central binomials, trinomials and squared binomials", [](Result& r) {
        MultiPolySeq two({pow(MultiPoly::parse("x1 + x2"), 2)}, {MultiPoly(1)});
        MultiPolySeq three({pow(MultiPoly::parse("x1 + x2 + x3"), 3)}, {MultiPoly(1)});
        MultiSource central = [](MultiPoly::exponent const& e) {
            return e[0] == e[1] ? Rational(binomial(2 * static_cast<unsigned long>(e[0]), static_cast<unsigned long>(e[0])))
                                : Rational(0);
        };
        const std::size_t need = 9 * 9 + 8;
        auto cb = tri_multi(two, detail::diagonal_delta(2), 13);
        auto mn = tri_multi(three, detail::diagonal_delta(3), need);
        auto sq = tri_multi(two, central, need);
        bool values = true;
        for (unsigned long n = 0; n <= 12; ++n) {
            Rational c(binomial(2 * n, n));
            values = values && cb[n] == c && sq[n] == c * c &&
                     mn[n] == Rational(factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n)));
        }
        std::vector<Rational> cb_more = tri_multi(two, detail::diagonal_delta(2), 30);
        bool prec_ok = true;
        for (auto const* seq : {&cb_more, &mn, &sq}) {
            auto p = guess_precursive(*seq, 2, 3);
            prec_ok = prec_ok && p.found() && verify_relation(*seq, p);
        }
        bool cf_none = !guess_cfinite(mn, 8, 0).found() && !guess_cfinite(sq, 8, 0).found();
        bool alg_none = !guess_algebraic(mn, 8, 8).found() && !guess_algebraic(sq, 8, 8).found();
        r.passed = values && prec_ok && cf_none && alg_none;
        r.detail = "values for n <= 12 " + detail::yes(values) + ", P-recursive relations " + detail::yes(prec_ok) +
                   ", no C-finite relation of order <= 8 " + detail::yes(cf_none) +
                   ", no algebraic relation of bidegree (8,8) " + detail::yes(alg_none) + " on " + std::to_string(need) +
                   " terms";
    });
}

inline Result quasipolynomial_channels() {
    return detail::timed(8, "syzygy dimension channels are quasipolynomial", [](Result& r) {
        auto j2 = fp::channel_harvest(fp::FpModule::jordan_block(7, 2), 6);
        auto const& f = j2.dim.forward.tail;
        auto const& b = j2.dim.backward.tail;
        bool j2_ok = f && b && f->period == 2 && b->period == 2 && f->degree() <= 0 && b->degree() <= 0;
        auto m = fp::channel_harvest(fp::samples::z3z3_module(), 6);
        auto const& mf = m.dim.forward.tail;
        auto const& mb = m.dim.backward.tail;
        bool m_ok = mf && mb && mf->degree() <= 1 && mb->degree() <= 1;
        r.passed = j2_ok && m_ok;
        r.detail = std::string("J2: ") + (f ? f->to_string() : "no fit") + " / " + (b ? b->to_string() : "no fit") +
                   "; six-dimensional module: " + (mf ? mf->to_string() : "no fit") + " / " +
                   (mb ? mb->to_string() : "no fit");
    }, 60);
}

inline Result plus_systems() {
    return detail::timed(9, "random systems over N[w] have C-finite c_n", [](Result& r) {
        std::mt19937_64 rng(4242);
        std::size_t passed = 0;
        GuessOptions o;
        o.max_order = 12;
        o.max_offset = 2;
        for (int i = 0; i < 25; ++i) {
            auto sys = detail::random_plus_system(rng);
            auto terms = invariant_seq(sys, InvariantKind::c, 60);
            auto g = run_guess(terms, o);
            passed += g.found() && verify_relation(terms, g) && omega_classify(sys) == OmegaClass::plus;
        }
        r.passed = passed == 25;
        r.detail = std::to_string(passed) + "/25 found and verified";
    });
}

inline Result bivariate_suite() {
    return detail::timed(10, "bivariate Hadamard product, diagonal and substitution", [](Result& r) {
        auto h = bi_hadamard(RatBiSeries::parse("(1) / (1 - t1 - t2)"), RatBiSeries::parse("(1) / (1 - t1*t2)"), 5);
        std::vector<Rational> diag;
        for (std::size_t n = 0; n < 5; ++n) diag.push_back(h.block[n][n]);
        bool diag_ok = diag == detail::ints({1, 2, 6, 20, 70});
        auto d = diagonal(RatBiSeries::parse("(1) / (1 - t1 - t2)"), 30);
        auto alg = guess_algebraic(d, 4, 2);
        bool alg_ok = alg.found() && alg.relation() == "(1 - 4*t)*y^2 - 1 = 0";
        bool sub_ok = substitute_one(RatBiSeries::parse("(1) / (1 - t1*t2)"), 1) == HilbertSeries(1, UniPoly::parse("1 - t"));
        std::mt19937_64 rng(10);
        std::size_t round = 0;
        for (int i = 0; i < 25; ++i) {
            auto a = detail::random_cf2(rng);
            auto rat = cf2_to_rational(a);
            auto block = rat.expand(20, 20);
            bool ok = block == a.expand(20, 20);
            for (std::size_t m = 0; m < 20 && ok; ++m)
                for (std::size_t n = 0; n < 20 && ok; ++n) ok = bi_coeff(rat, m, n) == block[m][n];
            round += ok;
        }
        r.passed = diag_ok && alg_ok && sub_ok && round == 25;
        r.detail = "diagonal " + detail::seq_text(diag) + ", equation " + (alg.found() ? alg.relation() : std::string("none")) +
                   ", substitution " + detail::yes(sub_ok) + ", round trips " + std::to_string(round) + "/25";
    });
}

using Check = std::function<Result()>;

inline std::vector<Check> all_checks() {
    return {cyclic_end_to_end,      cyclic_symbolic_vs_oracle, z3z3_certification, prefix_recovery,
            closure_suite,          convolution_suites,        multinomial_examples, quasipolynomial_channels,
            plus_systems,           bivariate_suite};
}

inline std::vector<Result> run_all() {
    std::vector<Result> out;
    for (auto const& c : all_checks()) out.push_back(c());
    return out;
}

} // namespace coreseq::acceptance
