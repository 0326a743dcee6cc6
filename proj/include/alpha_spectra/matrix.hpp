#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace alpha_spectra {

/// Dense row-major matrix. T is Rational for exact work, double for numerics.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw PreconditionError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix ones(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        std::fill(m.data_.begin(), m.data_.end(), T(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> values() const { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <typename U, typename F>
    Matrix<U> map(F&& f) const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

/// Square matrix whose symmetry is checked on construction.
template <typename T>
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix<T> m) : m_(std::move(m)) {
        if (!m_.is_symmetric()) throw PreconditionError("matrix is not symmetric");
    }

    std::size_t size() const { return m_.rows(); }
    const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix<T>& matrix() const { return m_; }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.m_ == b.m_; }

  private:
    Matrix<T> m_;
};

using RationalSymMatrix = SymMatrix<Rational>;
using RealSymMatrix = SymMatrix<double>;

inline RealMatrix to_real(const RationalMatrix& m) {
    return m.map<double>([](const Rational& r) { return r.get_d(); });
}
inline RealSymMatrix to_real(const RationalSymMatrix& m) { return RealSymMatrix(to_real(m.matrix())); }

template <typename T>
double frobenius_norm(const Matrix<T>& m) {
    double s = 0;
    for (const auto& v : m.values()) {
        double d;
        if constexpr (std::is_same_v<T, Rational>)
            d = v.get_d();
        else
            d = static_cast<double>(v);
        s += d * d;
    }
    return std::sqrt(s);
}

/// Determinant over Q by Gaussian elimination.
inline Rational determinant(RationalMatrix a) {
    if (!a.square()) throw PreconditionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        const Rational p = a(col, col);
        det *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / p;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

/// (c I - d J)^{-1} = (1/c) I + d / (c (c - n d)) J.
inline RationalSymMatrix shifted_jn_inverse(const Rational& c, const Rational& d, std::size_t n) {
    if (n == 0) throw PreconditionError("shifted_jn_inverse needs n >= 1");
    const Rational rank_one_pole = c - Rational(static_cast<long>(n)) * d;
    if (c == 0 || rank_one_pole == 0)
        throw SingularError("cI - dJ is singular for c=" + fraction_string(c) + ", d=" + fraction_string(d) +
                            ", n=" + std::to_string(n));
    const Rational diag = Rational(1) / c;
    const Rational off = d / (c * rank_one_pole);
    RationalMatrix inv = RationalMatrix::ones(n, n) * off;
    for (std::size_t i = 0; i < n; ++i) inv(i, i) += diag;
    return RationalSymMatrix(std::move(inv));
}

}  // namespace alpha_spectra
