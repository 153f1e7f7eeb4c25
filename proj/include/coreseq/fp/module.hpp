#pragma once

/**
 * @file module.hpp
 * @brief Modules for abelian p-groups over F_p, given by commuting
 *        generator matrices.
 *
 * Two group shapes are supported: a cyclic group of order p^k with one
 * generator, and an elementary abelian group (Z/p)^r with r generators.
 * Vectors are columns; generators act by left multiplication.
 */

#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "../rational.hpp"
#include "field.hpp"

namespace coreseq::fp {

/// Multiplicities of Jordan blocks J_1..J_o for a cyclic group of order o.
struct JordanDecomposition {
    std::vector<Integer> mult; // mult[j - 1] is the multiplicity of J_j

    Integer dimension() const {
        Integer d = 0;
        for (std::size_t j = 0; j < mult.size(); ++j) d += mult[j] * Integer(static_cast<unsigned long>(j + 1));
        return d;
    }

    Integer summands() const {
        Integer s = 0;
        for (auto const& m : mult) s += m;
        return s;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < mult.size(); ++j) {
            if (mult[j] == 0) continue;
            if (!s.empty()) s += " + ";
            if (mult[j] != 1) s += mult[j].get_str();
            s += "J" + std::to_string(j + 1);
        }
        return s.empty() ? "0" : s;
    }

    bool operator==(JordanDecomposition const&) const = default;
};

class FpModule {
public:
    FpModule(unsigned p, std::vector<unsigned> orders, std::vector<FpMatrix> gens)
        : p_(p), orders_(std::move(orders)), gens_(std::move(gens)) {
        validate();
    }

    static FpModule trivial(unsigned p, std::vector<unsigned> orders) {
        std::vector<FpMatrix> g(orders.size(), FpMatrix::identity(p, 1));
        return FpModule(p, std::move(orders), std::move(g));
    }

    /// The group algebra kG acting on itself.
    static FpModule regular(unsigned p, std::vector<unsigned> orders) {
        std::size_t n = std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
        std::vector<FpMatrix> g;
        std::size_t stride = 1;
        for (unsigned o : orders) {
            FpMatrix m(p, n, n);
            for (std::size_t idx = 0; idx < n; ++idx) {
                std::size_t digit = (idx / stride) % o;
                std::size_t to = idx - digit * stride + ((digit + 1) % o) * stride;
                m.set(to, idx, 1);
            }
            g.push_back(std::move(m));
            stride *= o;
        }
        return FpModule(p, std::move(orders), std::move(g));
    }

    /// Indecomposable J_m for the cyclic group of order `order` (default p).
    static FpModule jordan_block(unsigned p, std::size_t m, unsigned order = 0) {
        if (order == 0) order = p;
        if (m == 0 || m > order) throw invalid_argument("Jordan block size must be in 1.." + std::to_string(order));
        FpMatrix g = FpMatrix::identity(p, m);
        for (std::size_t i = 0; i + 1 < m; ++i) g.set(i, i + 1, 1);
        return FpModule(p, {order}, {g});
    }

    unsigned prime() const { return p_; }
    std::vector<unsigned> const& orders() const { return orders_; }
    std::vector<FpMatrix> const& gens() const { return gens_; }
    std::size_t dim() const { return gens_.empty() ? 0 : gens_[0].rows(); }
    bool is_cyclic() const { return orders_.size() == 1; }

    std::size_t group_order() const {
        return std::accumulate(orders_.begin(), orders_.end(), std::size_t{1}, std::multiplies<>());
    }

    bool same_group(FpModule const& o) const { return p_ == o.p_ && orders_ == o.orders_; }

    std::string to_string() const {
        std::string s = "p=" + std::to_string(p_) + "\norder=";
        for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "," : "") + std::to_string(orders_[i]);
        s += "\n";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "\n" : "") + gens_[i].to_string();
        return s;
    }

    /// Reads `p=`, `order=` and one matrix per generator (blank-line separated).
    static FpModule parse(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t ln = 0;
        unsigned p = 0;
        std::vector<unsigned> orders;
        std::vector<std::vector<std::vector<long>>> mats(1);
        auto number = [&](std::string const& s) -> unsigned long {
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(s, &used);
                if (used != s.size()) throw std::exception();
                return v;
            } catch (...) {
                throw parse_error("expected a number, got '" + s + "'", 0, ln);
            }
        };
        while (std::getline(in, line)) {
            ++ln;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::vector<std::string> words;
            for (std::string w; ls >> w;) words.push_back(w);
            if (words.empty()) {
                if (!mats.back().empty()) mats.emplace_back();
                continue;
            }
            if (words[0].rfind("p=", 0) == 0) {
                p = static_cast<unsigned>(number(words[0].substr(2)));
                continue;
            }
            if (words[0].rfind("order=", 0) == 0) {
                std::string list = words[0].substr(6);
                std::size_t start = 0;
                while (start <= list.size()) {
                    auto comma = list.find(',', start);
                    orders.push_back(static_cast<unsigned>(number(list.substr(start, comma - start))));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
                continue;
            }
            std::vector<long> row;
            for (auto const& w : words) row.push_back(static_cast<long>(number(w)));
            if (!mats.back().empty() && mats.back()[0].size() != row.size())
                throw parse_error("row length " + std::to_string(row.size()) + " differs from " +
                                  std::to_string(mats.back()[0].size()), 0, ln);
            mats.back().push_back(std::move(row));
        }
        if (mats.back().empty()) mats.pop_back();
        if (p == 0) throw parse_error("missing p=<prime>", 0, ln);
        if (orders.empty()) throw parse_error("missing order=", 0, ln);
        check_prime(p);
        std::vector<FpMatrix> gens;
        for (auto const& m : mats) gens.push_back(FpMatrix::from_rows(p, m));
        return FpModule(p, std::move(orders), std::move(gens));
    }

private:
    void validate() const {
        check_prime(p_);
        if (orders_.empty()) throw invalid_argument("group needs at least one generator");
        if (gens_.size() != orders_.size())
            throw invalid_argument(std::to_string(orders_.size()) + " generator orders but " + std::to_string(gens_.size()) +
                                   " matrices");
        for (unsigned o : orders_) {
            unsigned x = o;
            while (x > 1 && x % p_ == 0) x /= p_;
            if (o < p_ || x != 1) throw invalid_argument("generator order " + std::to_string(o) + " is not a power of " + std::to_string(p_));
            if (orders_.size() > 1 && o != p_) throw invalid_argument("several generators require each to have order p");
        }
        std::size_t d = gens_[0].rows();
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            auto const& g = gens_[i];
            if (g.prime() != p_ || g.rows() != d || g.cols() != d) throw invalid_argument("generators must be square of equal size");
            if (power(g, orders_[i]) != FpMatrix::identity(p_, d))
                throw invalid_argument("generator " + std::to_string(i + 1) + " does not have order dividing " + std::to_string(orders_[i]));
            for (std::size_t j = 0; j < i; ++j)
                if (g * gens_[j] != gens_[j] * g)
                    throw invalid_argument("generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " do not commute");
        }
    }

    unsigned p_;
    std::vector<unsigned> orders_;
    std::vector<FpMatrix> gens_;
};

inline FpModule tensor(FpModule const& a, FpModule const& b) {
    if (!a.same_group(b)) throw invalid_argument("tensor product of modules for different groups");
    std::vector<FpMatrix> g;
    for (std::size_t i = 0; i < a.gens().size(); ++i) g.push_back(kronecker(a.gens()[i], b.gens()[i]));
    return FpModule(a.prime(), a.orders(), std::move(g));
}

inline FpModule direct_sum(FpModule const& a, FpModule const& b) {
    if (!a.same_group(b)) throw invalid_argument("direct sum of modules for different groups");
    std::vector<FpMatrix> g;
    std::size_t n = a.dim(), m = b.dim();
    for (std::size_t i = 0; i < a.gens().size(); ++i) {
        FpMatrix s(a.prime(), n + m, n + m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) s.set(r, c, a.gens()[i](r, c));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) s.set(n + r, n + c, b.gens()[i](r, c));
        g.push_back(std::move(s));
    }
    return FpModule(a.prime(), a.orders(), std::move(g));
}

/// Inverse-transpose action on the dual space.
inline FpModule dual(FpModule const& m) {
    std::vector<FpMatrix> g;
    for (auto const& x : m.gens()) g.push_back(inverse(x).transpose());
    return FpModule(m.prime(), m.orders(), std::move(g));
}

/// Action on the submodule spanned by the columns of k (assumed invariant
/// and linearly independent).
inline FpModule restrict_to(FpModule const& m, FpMatrix const& k) {
    if (k.cols() == 0) {
        std::vector<FpMatrix> g(m.gens().size(), FpMatrix(m.prime(), 0, 0));
        return FpModule(m.prime(), m.orders(), std::move(g));
    }
    auto rows = independent_cols(k.transpose());
    FpMatrix sub_inv = inverse(k.select_rows(rows));
    std::vector<FpMatrix> g;
    for (auto const& x : m.gens()) g.push_back(sub_inv * (x.select_rows(rows) * k));
    return FpModule(m.prime(), m.orders(), std::move(g));
}

/// Norm element: product over generators of sum_{j < order} g^j.
inline FpMatrix norm_matrix(FpModule const& m) {
    FpMatrix n = FpMatrix::identity(m.prime(), m.dim());
    FpMatrix one = n;
    for (std::size_t i = 0; i < m.gens().size(); ++i) n = n * power(m.gens()[i] - one, m.orders()[i] - 1);
    return n;
}

/// Number of free summands kG in m.
inline std::size_t free_rank(FpModule const& m) { return m.dim() ? rank(norm_matrix(m)) : 0; }

inline std::size_t core_dim(FpModule const& m) { return m.dim() - m.group_order() * free_rank(m); }

/// Row block: for every group element h (in mixed-radix order), phi * h.
inline FpMatrix orbit_rows(FpModule const& m, FpMatrix const& phi) {
    std::vector<FpMatrix> blocks{phi};
    for (std::size_t j = 0; j < m.orders().size(); ++j) {
        std::size_t existing = blocks.size();
        for (unsigned e = 1; e < m.orders()[j]; ++e)
            for (std::size_t b = 0; b < existing; ++b) blocks.push_back(blocks[(e - 1) * existing + b] * m.gens()[j]);
    }
    return vstack(blocks);
}

/// Complement of a maximal free summand: the kernel of an equivariant
/// projection onto a free submodule of full free rank.
inline FpModule core_split(FpModule const& m) {
    std::size_t d = m.dim();
    if (d == 0) return m;
    FpMatrix n = norm_matrix(m);
    auto cols = independent_cols(n);
    std::size_t r = cols.size();
    if (r == 0) return m;
    FpMatrix b = n.select_cols(cols);
    auto rows = independent_cols(b.transpose());
    FpMatrix binv = inverse(b.select_rows(rows));
    FpMatrix phi(m.prime(), r, d);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) phi.set(k, rows[i], binv(k, i));
    FpMatrix k = nullspace(orbit_rows(m, phi));
    if (k.cols() != d - r * m.group_order())
        throw integrity_error("free summand splitting produced a complement of dimension " + std::to_string(k.cols()) +
                              ", expected " + std::to_string(d - r * m.group_order()));
    return restrict_to(m, k);
}

/// Columns spanning the radical sum_i (g_i - 1) M.
inline FpMatrix radical_span(FpModule const& m) {
    std::vector<FpMatrix> parts;
    FpMatrix one = FpMatrix::identity(m.prime(), m.dim());
    for (auto const& g : m.gens()) parts.push_back(g - one);
    return hstack(parts);
}

inline std::size_t radical_dim(FpModule const& m) { return m.dim() ? rank(radical_span(m)) : 0; }
inline std::size_t top_dim(FpModule const& m) { return m.dim() - radical_dim(m); }

inline std::size_t socle_dim(FpModule const& m) {
    if (m.dim() == 0) return 0;
    std::vector<FpMatrix> parts;
    FpMatrix one = FpMatrix::identity(m.prime(), m.dim());
    for (auto const& g : m.gens()) parts.push_back(g - one);
    return m.dim() - rank(vstack(parts));
}

/// Kernel of the projective cover (kG)^t -> m, t = dim of the top.
inline FpModule syzygy(FpModule const& m) {
    std::size_t d = m.dim();
    unsigned p = m.prime();
    if (d == 0) return m;
    FpMatrix rad = radical_span(m);
    auto piv = independent_cols(hstack({rad, FpMatrix::identity(p, d)}));
    std::vector<std::size_t> tops;
    for (auto c : piv)
        if (c >= rad.cols()) tops.push_back(c - rad.cols());
    std::size_t o = m.group_order(), t = tops.size();

    // Column (i, h) of psi is h * e_{tops[i]}; rows of orbit_rows on the
    // transpose give the same vectors because the group is abelian.
    FpMatrix psi(p, d, t * o);
    std::vector<FpMatrix> gt;
    for (auto const& g : m.gens()) gt.push_back(g.transpose());
    FpModule mt(p, m.orders(), gt);
    for (std::size_t i = 0; i < t; ++i) {
        FpMatrix e(p, 1, d);
        e.set(0, tops[i], 1);
        FpMatrix orbit = orbit_rows(mt, e);
        for (std::size_t h = 0; h < o; ++h)
            for (std::size_t r = 0; r < d; ++r) psi.set(r, i * o + h, orbit(h, r));
    }
    auto reg = FpModule::regular(p, m.orders());
    std::vector<FpMatrix> big;
    for (auto const& g : reg.gens()) {
        FpMatrix b(p, t * o, t * o);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t r = 0; r < o; ++r)
                for (std::size_t c = 0; c < o; ++c)
                    if (g(r, c)) b.set(i * o + r, i * o + c, g(r, c));
        big.push_back(std::move(b));
    }
    return restrict_to(FpModule(p, m.orders(), std::move(big)), nullspace(psi));
}

inline FpModule cosyzygy(FpModule const& m) { return dual(syzygy(dual(m))); }

inline JordanDecomposition jordan_decompose(FpModule const& m) {
    if (!m.is_cyclic()) throw invalid_argument("Jordan decomposition needs a cyclic group");
    std::size_t o = m.orders()[0], d = m.dim();
    std::vector<std::size_t> r{d};
    if (d) {
        FpMatrix x = m.gens()[0] - FpMatrix::identity(m.prime(), d);
        FpMatrix y = x;
        while (r.size() <= o) {
            std::size_t k = rank(y);
            r.push_back(k);
            if (k == 0) break;
            y = y * x;
        }
    }
    r.resize(o + 2, 0);
    JordanDecomposition j;
    for (std::size_t k = 1; k <= o; ++k)
        j.mult.push_back(Integer(static_cast<long>(r[k - 1]) - 2 * static_cast<long>(r[k]) + static_cast<long>(r[k + 1])));
    return j;
}

} // namespace coreseq::fp
