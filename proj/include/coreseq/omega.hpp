#pragma once

/**
 * @file omega.hpp
 * @brief Tensor systems over N[w, w^-1] and the invariant sequences they
 *        determine.
 *
 * A TensorSystem lists orbit representatives N_1..N_s, a matrix T whose
 * row i describes core(M (x) N_i) = sum_j T[i][j](w) N_j, and the row
 * `initial` describing core(M) itself. Row n of the iteration
 * initial * T^(n-1) describes core(M^{(x)n}); reading each w^e N_j through
 * per-orbit dimension channels gives the invariant sequences.
 */

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfinite.hpp"
#include "convolve.hpp"
#include "error.hpp"
#include "guessing.hpp"
#include "laurent_matrix.hpp"
#include "quasipoly.hpp"

namespace coreseq {

/// Values along one direction of an orbit: n = 0, 1, ... forward (w^n N),
/// n = 1, 2, ... backward (w^-n N). Explicit prefix, then an optional
/// quasipolynomial tail in n.
struct ChannelDirection {
    std::vector<Rational> prefix;
    std::optional<QuasiPoly> tail;
    std::size_t first_index = 0;

    std::optional<Rational> value(std::size_t n) const {
        if (n >= first_index && n - first_index < prefix.size()) return prefix[n - first_index];
        if (tail && n >= tail->start) return qp_eval(*tail, n);
        return std::nullopt;
    }

    /// Prefix and tail agree wherever both are defined.
    bool consistent() const {
        if (!tail) return true;
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            std::size_t n = first_index + k;
            if (n >= tail->start && qp_eval(*tail, n) != prefix[k]) return false;
        }
        return true;
    }
};

struct DimensionChannel {
    std::string name;
    ChannelDirection forward{{}, std::nullopt, 0};
    ChannelDirection backward{{}, std::nullopt, 1};

    /// Value at w^e N; nullopt when neither prefix nor tail covers e.
    std::optional<Rational> at(long e) const {
        return e >= 0 ? forward.value(static_cast<std::size_t>(e)) : backward.value(static_cast<std::size_t>(-e));
    }
};

struct OrbitRep {
    std::string id;
    std::string name;
    std::map<std::string, DimensionChannel> channels;
};

enum class InvariantKind { c, s, d, l };

inline InvariantKind parse_invariant_kind(std::string const& s) {
    if (s == "c") return InvariantKind::c;
    if (s == "s") return InvariantKind::s;
    if (s == "d") return InvariantKind::d;
    if (s == "l") return InvariantKind::l;
    throw invalid_argument("unknown invariant '" + s + "' (expected c, s, d or l)");
}

inline std::string channel_for(InvariantKind k) {
    switch (k) {
    case InvariantKind::c: return "dim";
    case InvariantKind::d: return "soc";
    case InvariantKind::l: return "len";
    case InvariantKind::s: return "";
    }
    return "";
}

struct TensorSystem {
    std::string name;
    std::vector<OrbitRep> orbits;
    LMatrix t;
    LRow initial;

    std::size_t size() const { return orbits.size(); }

    /// Shape and N[w^±1] positivity; throws naming the first offending entry.
    void validate() const {
        std::size_t s = orbits.size();
        if (s == 0) throw invalid_argument("tensor system has no orbits");
        if (t.rows() != s || t.cols() != s) throw invalid_argument("matrix T must be " + std::to_string(s) + "x" + std::to_string(s));
        if (initial.size() != s) throw invalid_argument("initial row must have " + std::to_string(s) + " entries");
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (!t(i, j).is_natural())
                    throw invalid_argument("T[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " +
                                           t(i, j).to_string() + " is not in N[w, w^-1]");
        for (std::size_t j = 0; j < s; ++j)
            if (!initial[j].is_natural())
                throw invalid_argument("v[" + std::to_string(j + 1) + "] = " + initial[j].to_string() + " is not in N[w, w^-1]");
        for (auto const& o : orbits) {
            if (!o.channels.count("dim")) throw invalid_argument("orbit " + o.id + " has no dim channel");
            for (auto const& [n, ch] : o.channels)
                if (!ch.forward.consistent() || !ch.backward.consistent())
                    throw integrity_error("orbit " + o.id + " channel " + n + ": prefix and tail disagree");
            auto d0 = o.channels.at("dim").at(0);
            if (d0 && *d0 <= 0) throw invalid_argument("orbit " + o.id + " must have positive dimension");
        }
    }
};

/// Row describing core(M^{(x)n}) in the orbit basis: initial * T^(n-1).
inline LRow core_row(TensorSystem const& sys, std::size_t n) {
    if (n == 0) throw invalid_argument("core_row is defined for n >= 1");
    LRow v = sys.initial;
    for (std::size_t k = 1; k < n; ++k) v = row_advance(v, sys.t);
    return v;
}

namespace detail {

inline Rational read_row(TensorSystem const& sys, LRow const& row, InvariantKind kind, std::size_t n) {
    Rational total = 0;
    if (kind == InvariantKind::s) {
        for (auto const& p : row) total += p.eval_one();
        return total;
    }
    std::string ch = channel_for(kind);
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        auto const& orbit = sys.orbits[j];
        auto it = orbit.channels.find(ch);
        if (it == orbit.channels.end())
            throw invalid_argument("orbit " + orbit.id + " has no '" + ch + "' channel");
        for (auto const& [e, c] : row[j].terms()) {
            auto v = it->second.at(e);
            if (!v)
                throw coverage_error("orbit " + orbit.id + " channel " + ch + " does not cover w^" + std::to_string(e) +
                                     " (needed at n=" + std::to_string(n) + ")");
            total += c * *v;
        }
    }
    return total;
}

} // namespace detail

/// Values for n = 1..N (element k of the result is the value at n = k + 1).
inline std::vector<Rational> invariant_seq(TensorSystem const& sys, InvariantKind kind, std::size_t count) {
    std::vector<Rational> out;
    LRow v = sys.initial;
    for (std::size_t n = 1; n <= count; ++n) {
        if (n > 1) v = row_advance(v, sys.t);
        out.push_back(detail::read_row(sys, v, kind, n));
    }
    return out;
}

/// Recurrence for s_n from the characteristic polynomial of A = T(w=1).
/// Index k of the returned sequence is s_{k+1}.
inline CFiniteSeq s_recurrence(TensorSystem const& sys) {
    auto a = eval_one(sys.t);
    UniPoly chi = char_poly(a);
    std::size_t s = sys.size();
    std::vector<Rational> row;
    for (auto const& p : sys.initial) row.push_back(p.eval_one());
    std::vector<Rational> init;
    for (std::size_t k = 0; k < s; ++k) {
        Rational sum = 0;
        for (auto const& x : row) sum += x;
        init.push_back(sum);
        row = row_times(row, a);
    }
    return CFiniteSeq::from_char_poly(chi, init, s);
}

enum class OmegaClass { plus, minus, neither };

inline std::string to_string(OmegaClass c) {
    switch (c) {
    case OmegaClass::plus: return "plus";
    case OmegaClass::minus: return "minus";
    case OmegaClass::neither: return "neither";
    }
    return "";
}

inline OmegaClass omega_classify(TensorSystem const& sys) {
    bool pos = false, neg = false;
    auto scan = [&](LaurentPoly const& p) {
        pos = pos || p.has_positive_exponent();
        neg = neg || p.has_negative_exponent();
    };
    for (std::size_t i = 0; i < sys.t.rows(); ++i)
        for (std::size_t j = 0; j < sys.t.cols(); ++j) scan(sys.t(i, j));
    for (auto const& p : sys.initial) scan(p);
    if (!neg) return OmegaClass::plus;
    if (!pos) return OmegaClass::minus;
    return OmegaClass::neither;
}

inline GuessReport invariant_guess(TensorSystem const& sys, InvariantKind kind, std::size_t count, GuessOptions const& opts) {
    return run_guess(invariant_seq(sys, kind, count), opts);
}

/// One direction of a channel as a sequence source: forward gives
/// a_k = value at w^k, backward gives b_k = value at w^-(k+1).
struct ChannelSeq {
    DimensionChannel const* channel;
    bool backward;

    std::vector<Rational> terms(std::size_t n) const {
        std::vector<Rational> out;
        for (std::size_t k = 0; k < n; ++k) {
            long e = backward ? -long(k + 1) : long(k);
            auto v = channel->at(e);
            if (!v) throw coverage_error("channel " + channel->name + " does not cover w^" + std::to_string(e));
            out.push_back(*v);
        }
        return out;
    }
};

inline std::vector<Rational> channel_values(DimensionChannel const& ch, LaurentPolySeq const& ps, std::size_t count) {
    return tri_laurent(ps, ChannelSeq{&ch, false}, ChannelSeq{&ch, true}, count);
}

/// n -> value of the channel on P_n(w) N, then guessed.
inline GuessReport channel_pipeline(DimensionChannel const& ch, LaurentPolySeq const& ps, std::size_t count,
                                    GuessOptions const& opts) {
    return run_guess(channel_values(ch, ps, count), opts);
}

struct GammaEstimate {
    double ratio;
    DenseMatrix<Rational> a;
    UniPoly char_poly;
};

/// s_N / s_{N-1} as a floating ratio (approximate) plus the exact matrix
/// T(w=1) whose characteristic polynomial has the limit among its roots.
inline GammaEstimate gamma_estimate(TensorSystem const& sys, std::size_t n) {
    if (n < 4) throw invalid_argument("gamma_estimate needs N >= 4");
    auto s = invariant_seq(sys, InvariantKind::s, n);
    double ratio = s[n - 2] == 0 ? NAN : Rational(s[n - 1] / s[n - 2]).get_d();
    auto a = eval_one(sys.t);
    return {ratio, a, char_poly(a)};
}

} // namespace coreseq
