#pragma once

/**
 * @file field.hpp
 * @brief Dense matrices over a small prime field F_p.
 *
 * Entries are stored one byte each, so p must be below 256. Row
 * operations use a shift-multiply reduction that the compiler can
 * vectorise.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "../error.hpp"

namespace coreseq::fp {

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void check_prime(unsigned p) {
    if (!is_prime(p) || p > 251) throw invalid_argument("p must be a prime below 256, got " + std::to_string(p));
}

inline unsigned inverse_mod(unsigned a, unsigned p) {
    unsigned r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// dst[k] = dst[k] + c * src[k] (mod p) for k in [0, n).
inline void axpy(std::uint8_t* dst, std::uint8_t const* src, unsigned c, unsigned p, std::size_t n) {
    if (c == 0) return;
    std::uint32_t const m = 65536u / p;
    for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t x = dst[k] + c * src[k];
        x -= ((x * m) >> 16) * p;
        if (x >= p) x -= p;
        dst[k] = static_cast<std::uint8_t>(x);
    }
}

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(unsigned p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMatrix identity(unsigned p, std::size_t n) {
        FpMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    /// Entries given as integers; reduced into [0, p).
    static FpMatrix from_rows(unsigned p, std::vector<std::vector<long>> const& rows) {
        std::size_t c = rows.empty() ? 0 : rows[0].size();
        FpMatrix m(p, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<unsigned>(((rows[i][j] % long(p)) + long(p)) % long(p)));
        }
        return m;
    }

    unsigned prime() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    unsigned operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, unsigned v) { a_[i * cols_ + j] = static_cast<std::uint8_t>(v % p_); }
    std::uint8_t* row(std::size_t i) { return a_.data() + i * cols_; }
    std::uint8_t const* row(std::size_t i) const { return a_.data() + i * cols_; }

    bool operator==(FpMatrix const& o) const = default;

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::uint8_t v) { return v == 0; });
    }

    FpMatrix transpose() const {
        FpMatrix t(p_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = a_[i * cols_ + j];
        return t;
    }

    FpMatrix operator+(FpMatrix const& o) const {
        check_same(o);
        FpMatrix r = *this;
        for (std::size_t i = 0; i < rows_; ++i) axpy(r.row(i), o.row(i), 1, p_, cols_);
        return r;
    }

    FpMatrix operator-(FpMatrix const& o) const {
        check_same(o);
        FpMatrix r = *this;
        for (std::size_t i = 0; i < rows_; ++i) axpy(r.row(i), o.row(i), p_ - 1, p_, cols_);
        return r;
    }

    FpMatrix operator*(FpMatrix const& o) const {
        if (cols_ != o.rows_ || p_ != o.p_) throw invalid_argument("matrix product shape mismatch");
        FpMatrix r(p_, rows_, o.cols_);
        std::vector<std::uint32_t> acc(o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0u);
            std::uint8_t const* ai = row(i);
            std::size_t pending = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint32_t c = ai[k];
                if (!c) continue;
                std::uint8_t const* bk = o.row(k);
                for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += c * bk[j];
                if (++pending == 60000) {
                    for (auto& v : acc) v %= p_;
                    pending = 0;
                }
            }
            std::uint8_t* ri = r.row(i);
            for (std::size_t j = 0; j < o.cols_; ++j) ri[j] = static_cast<std::uint8_t>(acc[j] % p_);
        }
        return r;
    }

    FpMatrix select_rows(std::vector<std::size_t> const& idx) const {
        FpMatrix r(p_, idx.size(), cols_);
        for (std::size_t k = 0; k < idx.size(); ++k) std::copy_n(row(idx[k]), cols_, r.row(k));
        return r;
    }

    FpMatrix select_cols(std::vector<std::size_t> const& idx) const {
        FpMatrix r(p_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k) r.a_[i * idx.size() + k] = a_[i * cols_ + idx[k]];
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += std::to_string((*this)(i, j));
            }
            s += '\n';
        }
        return s;
    }

private:
    void check_same(FpMatrix const& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw invalid_argument("matrix shape mismatch");
    }

    unsigned p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(FpMatrix& a) {
    unsigned p = a.prime();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t s = r;
        while (s < a.rows() && a(s, c) == 0) ++s;
        if (s == a.rows()) continue;
        if (s != r) std::swap_ranges(a.row(s), a.row(s) + a.cols(), a.row(r));
        unsigned inv = inverse_mod(a(r, c), p);
        if (inv != 1) {
            std::vector<std::uint8_t> tmp(a.row(r), a.row(r) + a.cols());
            std::fill(a.row(r), a.row(r) + a.cols(), 0);
            axpy(a.row(r), tmp.data(), inv, p, a.cols());
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            unsigned f = a(i, c);
            if (f) axpy(a.row(i) + c, a.row(r) + c, p - f, p, a.cols() - c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(FpMatrix a) { return rref(a).size(); }

/// Columns spanning {x : a x = 0}.
inline FpMatrix nullspace(FpMatrix a) {
    unsigned p = a.prime();
    auto piv = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    FpMatrix k(p, a.cols(), free.size());
    for (std::size_t t = 0; t < free.size(); ++t) {
        k.set(free[t], t, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) {
            unsigned v = a(i, free[t]);
            if (v) k.set(piv[i], t, p - v);
        }
    }
    return k;
}

/// Indices of a maximal linearly independent subset of the columns, greedily from the left.
inline std::vector<std::size_t> independent_cols(FpMatrix const& a) {
    FpMatrix t = a;
    return rref(t);
}

inline FpMatrix inverse(FpMatrix const& a) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw invalid_argument("inverse of a non-square matrix");
    if (n == 0) return a;
    FpMatrix aug(a.prime(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy_n(a.row(i), n, aug.row(i));
        aug.set(i, n + i, 1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw invalid_argument("matrix is singular over F_" + std::to_string(a.prime()));
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return aug.select_cols(right);
}

inline FpMatrix kronecker(FpMatrix const& a, FpMatrix const& b) {
    if (a.prime() != b.prime()) throw invalid_argument("kronecker product over different primes");
    FpMatrix r(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
    unsigned p = a.prime();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            unsigned x = a(i, j);
            if (!x) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                std::uint8_t* dst = r.row(i * b.rows() + k) + j * b.cols();
                axpy(dst, b.row(k), x, p, b.cols());
            }
        }
    return r;
}

inline FpMatrix hstack(std::vector<FpMatrix> const& parts) {
    std::size_t rows = parts.at(0).rows(), cols = 0;
    for (auto const& m : parts) cols += m.cols();
    FpMatrix r(parts[0].prime(), rows, cols);
    std::size_t off = 0;
    for (auto const& m : parts) {
        for (std::size_t i = 0; i < rows; ++i) std::copy_n(m.row(i), m.cols(), r.row(i) + off);
        off += m.cols();
    }
    return r;
}

inline FpMatrix vstack(std::vector<FpMatrix> const& parts) {
    std::size_t cols = parts.at(0).cols(), rows = 0;
    for (auto const& m : parts) rows += m.rows();
    FpMatrix r(parts[0].prime(), rows, cols);
    std::size_t off = 0;
    for (auto const& m : parts) {
        for (std::size_t i = 0; i < m.rows(); ++i) std::copy_n(m.row(i), cols, r.row(off + i));
        off += m.rows();
    }
    return r;
}

inline FpMatrix power(FpMatrix a, std::size_t e) {
    FpMatrix r = FpMatrix::identity(a.prime(), a.rows());
    while (e) {
        if (e & 1) r = r * a;
        e >>= 1;
        if (e) a = a * a;
    }
    return r;
}

} // namespace coreseq::fp
