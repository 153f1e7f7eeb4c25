#pragma once

/**
 * @file oracle.hpp
 * @brief Direct computation of core invariants of tensor powers and of
 *        syzygy dimension channels.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "../omega.hpp"
#include "../quasipoly.hpp"
#include "module.hpp"

namespace coreseq::fp {

inline constexpr std::size_t default_dim_budget = 30000;

/// Which of c, s, d, l to compute, parsed from e.g. "c,s".
inline std::set<char> parse_kinds(std::string const& text) {
    std::set<char> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string k = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (k != "c" && k != "s" && k != "d" && k != "l") throw invalid_argument("unknown invariant '" + k + "'");
        out.insert(k[0]);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Sequences for n = 1..N; element k is the value at n = k + 1.
struct OracleTable {
    std::map<char, std::vector<Integer>> values;
    bool used_jordan_path = false;

    std::vector<Rational> as_rationals(char kind) const {
        std::vector<Rational> out;
        for (auto const& v : values.at(kind)) out.emplace_back(v);
        return out;
    }
};

namespace detail {

inline void check_budget(std::size_t dim, std::size_t budget) {
    if (dim > budget)
        throw budget_exceeded("module dimension " + std::to_string(dim) + " exceeds the budget of " + std::to_string(budget));
}

/// Tensor powers of a cyclic-group module tracked as Jordan multiplicities,
/// using a table of J_a (x) J_b decompositions.
inline OracleTable jordan_invariants(FpModule const& m, std::size_t count, std::set<char> const& kinds, std::size_t budget) {
    unsigned p = m.prime(), o = m.orders()[0];
    JordanDecomposition base = jordan_decompose(m);
    std::map<std::pair<std::size_t, std::size_t>, JordanDecomposition> table;
    auto product = [&](std::size_t a, std::size_t b) -> JordanDecomposition const& {
        auto key = std::make_pair(a, b);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        check_budget(a * b, budget);
        auto j = jordan_decompose(tensor(FpModule::jordan_block(p, a, o), FpModule::jordan_block(p, b, o)));
        return table.emplace(key, std::move(j)).first->second;
    };

    OracleTable out;
    out.used_jordan_path = true;
    std::vector<Integer> cur = base.mult;
    for (std::size_t n = 1; n <= count; ++n) {
        cur[o - 1] = 0;
        JordanDecomposition j{cur};
        Integer c = j.dimension(), s = j.summands();
        for (char k : kinds) out.values[k].push_back(k == 'c' || k == 'l' ? c : s);
        if (n == count) break;
        std::vector<Integer> next(o, Integer(0));
        for (std::size_t a = 1; a <= o; ++a) {
            if (cur[a - 1] == 0) continue;
            for (std::size_t b = 1; b <= o; ++b) {
                if (base.mult[b - 1] == 0) continue;
                auto const& t = product(a, b);
                for (std::size_t k = 0; k < o; ++k)
                    if (t.mult[k] != 0) next[k] += cur[a - 1] * base.mult[b - 1] * t.mult[k];
            }
        }
        cur = std::move(next);
    }
    return out;
}

} // namespace detail

/// c_n, s_n, d_n, l_n of core(M^{(x)n}) for n = 1..count.
///
/// Cyclic groups use Jordan multiplicities unless `generic` is set; other
/// groups iterate core(core(M^{(x)n-1}) (x) M) with explicit splitting.
/// Over a p-group the only simple module is trivial, so l_n = c_n and the
/// socle length is the socle dimension.
inline OracleTable oracle_invariants(FpModule const& m, std::size_t count, std::set<char> const& kinds,
                                     std::size_t budget = default_dim_budget, bool generic = false) {
    if (kinds.count('s') && !m.is_cyclic()) throw invalid_argument("summand counts need a cyclic group");
    if (m.is_cyclic() && !generic) return detail::jordan_invariants(m, count, kinds, budget);

    OracleTable out;
    detail::check_budget(m.dim(), budget);
    FpModule x = core_split(m);
    for (std::size_t n = 1; n <= count; ++n) {
        if (n > 1) {
            detail::check_budget(x.dim() * m.dim(), budget);
            x = core_split(tensor(x, m));
        }
        for (char k : kinds) {
            Integer v;
            switch (k) {
            case 'c':
            case 'l': v = Integer(static_cast<unsigned long>(x.dim())); break;
            case 'd': v = Integer(static_cast<unsigned long>(socle_dim(x))); break;
            case 's': {
                auto j = jordan_decompose(x);
                v = j.summands();
                break;
            }
            }
            out.values[k].push_back(v);
        }
    }
    return out;
}

struct Harvest {
    std::vector<Integer> forward_dim, forward_soc;   // n = 0..depth
    std::vector<Integer> backward_dim, backward_soc; // n = 1..depth
    DimensionChannel dim, soc;
};

struct FitLimits {
    std::size_t t_max = 4;
    std::size_t d_max = 2;
    std::size_t n0_max = 3;
};

/// Dimensions and socle dimensions of core(w^n N0) for -depth <= n <= depth,
/// computed by iterated syzygies and cosyzygies with free parts stripped.
/// With `fit`, each direction also receives a quasipolynomial tail when one
/// fits every harvested value.
inline Harvest channel_harvest(FpModule const& n0, std::size_t depth, bool fit = true, FitLimits limits = {},
                               std::size_t budget = default_dim_budget) {
    Harvest h;
    detail::check_budget(n0.dim(), budget);
    FpModule start = core_split(n0);
    auto record = [](std::vector<Integer>& dims, std::vector<Integer>& socs, FpModule const& x) {
        dims.emplace_back(static_cast<unsigned long>(x.dim()));
        socs.emplace_back(static_cast<unsigned long>(socle_dim(x)));
    };
    record(h.forward_dim, h.forward_soc, start);
    FpModule x = start;
    for (std::size_t n = 1; n <= depth; ++n) {
        detail::check_budget(top_dim(x) * x.group_order(), budget);
        x = core_split(syzygy(x));
        record(h.forward_dim, h.forward_soc, x);
    }
    x = start;
    for (std::size_t n = 1; n <= depth; ++n) {
        detail::check_budget(socle_dim(x) * x.group_order(), budget);
        x = core_split(cosyzygy(x));
        record(h.backward_dim, h.backward_soc, x);
    }

    auto direction = [&](std::vector<Integer> const& vals, std::size_t first) {
        ChannelDirection d;
        d.first_index = first;
        for (auto const& v : vals) d.prefix.emplace_back(v);
        if (fit) d.tail = qp_fit(d.prefix, first, limits.t_max, limits.d_max, std::max(limits.n0_max, first));
        return d;
    };
    h.dim.name = "dim";
    h.dim.forward = direction(h.forward_dim, 0);
    h.dim.backward = direction(h.backward_dim, 1);
    h.soc.name = "soc";
    h.soc.forward = direction(h.forward_soc, 0);
    h.soc.backward = direction(h.backward_soc, 1);
    return h;
}

namespace samples {

/// The six-dimensional module for Z/3 x Z/3 whose socle layers are 2, 2, 2.
inline FpModule z3z3_module() {
    auto g = FpMatrix::from_rows(3, {{1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0},
                                     {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    auto h = FpMatrix::from_rows(3, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1},
                                     {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    return FpModule(3, {3, 3}, {g, h});
}

/// Permutation module on the cosets of the subgroup generated by g.
inline FpModule z3z3_induced() {
    auto g = FpMatrix::identity(3, 3);
    auto h = FpMatrix::from_rows(3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    return FpModule(3, {3, 3}, {g, h});
}

} // namespace samples

} // namespace coreseq::fp
