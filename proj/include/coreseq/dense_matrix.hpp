#pragma once

// Square/rectangular dense matrices over any exact commutative ring R that
// provides +, -, * and multiplication by a Rational scalar, with R(0) and
// R(1) as the ring identities.

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace coreseq {

template <class R>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}
    explicit DenseMatrix(std::size_t n) : DenseMatrix(n, n) {}
    DenseMatrix(std::vector<std::vector<R>> const& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows[0].size();
        a_.reserve(rows_ * cols_);
        for (auto const& r : rows) {
            if (r.size() != cols_) throw invalid_argument("ragged matrix rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return rows_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    R const& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    R& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw invalid_argument("matrix index out of range");
        return (*this)(i, j);
    }
    R const& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw invalid_argument("matrix index out of range");
        return (*this)(i, j);
    }

    std::vector<R> row(std::size_t i) const {
        return std::vector<R>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
    }

    R trace() const {
        R t(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    template <class F>
    auto map(F f) const {
        using S = decltype(f(std::declval<R const&>()));
        DenseMatrix<S> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend DenseMatrix operator*(DenseMatrix const& x, DenseMatrix const& y) {
        if (x.cols_ != y.rows_) throw invalid_argument("matrix size mismatch in product");
        DenseMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                R const& xik = x(i, k);
                if (xik == R(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend DenseMatrix operator+(DenseMatrix x, DenseMatrix const& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw invalid_argument("matrix size mismatch in sum");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend DenseMatrix operator*(DenseMatrix x, R const& k) {
        for (auto& v : x.a_) v = v * k;
        return x;
    }
    friend bool operator==(DenseMatrix const&, DenseMatrix const&) = default;

    bool is_zero() const {
        for (auto const& v : a_)
            if (!(v == R(0))) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

template <class R>
DenseMatrix<R> matrix_power(DenseMatrix<R> const& a, unsigned long n) {
    if (!a.square()) throw invalid_argument("power of a non-square matrix");
    DenseMatrix<R> r = DenseMatrix<R>::identity(a.size());
    DenseMatrix<R> b = a;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

/// Row vector times matrix.
template <class R>
std::vector<R> row_times(std::vector<R> const& v, DenseMatrix<R> const& a) {
    if (v.size() != a.rows()) throw invalid_argument("row length does not match matrix size");
    std::vector<R> out(a.cols(), R(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == R(0)) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[k] * a(k, j);
    }
    return out;
}

/// Coefficients c_0..c_s of det(xI - A) by Faddeev–LeVerrier. The only
/// divisions are by the integers 1..s, so any Q-algebra R works.
template <class R>
std::vector<R> faddeev_leverrier(DenseMatrix<R> const& a) {
    if (!a.square()) throw invalid_argument("characteristic polynomial of a non-square matrix");
    std::size_t s = a.size();
    std::vector<R> c(s + 1, R(0));
    c[s] = R(1);
    DenseMatrix<R> m(s);
    for (std::size_t k = 1; k <= s; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < s; ++i) m(i, i) += c[s - k + 1];
        R tr = (a * m).trace();
        Rational f = Rational(-1) / Rational(static_cast<long>(k));
        c[s - k] = tr * f;
    }
    return c;
}

/// Evaluates sum_i c_i A^i by Horner's rule.
template <class R>
DenseMatrix<R> matrix_polynomial(std::vector<R> const& c, DenseMatrix<R> const& a) {
    DenseMatrix<R> acc(a.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < a.size(); ++i) acc(i, i) += *it;
    }
    return acc;
}

template <class R>
DenseMatrix<R> kronecker(DenseMatrix<R> const& x, DenseMatrix<R> const& y) {
    DenseMatrix<R> r(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j) == R(0)) continue;
            for (std::size_t k = 0; k < y.rows(); ++k)
                for (std::size_t l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
        }
    return r;
}

} // namespace coreseq
