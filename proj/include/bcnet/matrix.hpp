#pragma once

#include "bcnet/errors.hpp"
#include "bcnet/expr.hpp"
#include "bcnet/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bcnet {

/// Dense row-major matrix over Scalar or Expr. Indices are 0-based.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    /// E_{ij} with 1-based indices.
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(n, n);
        m(i - 1, j - 1) = T(1);
        return m;
    }
    static Matrix diag(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : d_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) fail("ShapeMismatch", "matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    if (is_zero(b(k, j))) continue;
                    m(i, j) += x * b(k, j);
                }
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    static bool is_zero(const Scalar& s) { return s.is_zero(); }
    static bool is_zero(const Expr& e) { return e.is_const() && e.value().is_zero(); }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) fail("ShapeMismatch", "matrix shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

using SMatrix = Matrix<Scalar>;
using EMatrix = Matrix<Expr>;

Scalar det(SMatrix m);
SMatrix inverse(const SMatrix& m); // throws Singular
std::size_t rank(SMatrix m);

/// Minor with 0-based row and column index lists.
Scalar minor(const SMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Some nonzero c with a = c*b, if one exists.
std::optional<Scalar> proportional(const SMatrix& a, const SMatrix& b);

SMatrix evaluate(const EMatrix& m, const Env& env);
SMatrix to_scalar(const EMatrix& m); // all entries must be constant
EMatrix to_expr(const SMatrix& m);

std::string to_string(const SMatrix& m);

} // namespace bcnet
