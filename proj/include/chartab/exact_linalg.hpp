#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chartab/numeric.hpp"

namespace chartab {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& init = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        Matrix s(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix p(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// Fraction-free elimination; exact for any size including 0x0 (det = 1).
Int det(IntMatrix a);

// Division-based elimination over a field; requires a nonempty square matrix.
template <class T>
T det_field(Matrix<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_field: matrix must be square");
    if (a.rows() == 0) throw std::invalid_argument("det_field: empty matrix");
    const size_t n = a.rows();
    bool negate = false;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a(piv, k) == T{}) ++piv;
        if (piv == n) {
            T zero{};
            return zero;
        }
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a(piv, j), a(k, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == T{}) continue;
            T f = a(i, k) / a(k, k);
            for (size_t j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    T d = a(0, 0);
    for (size_t k = 1; k < n; ++k) d = d * a(k, k);
    if (negate) d = T{} - d;
    return d;
}

// Gauss-Jordan over any field type; `one` supplies the multiplicative
// identity for element types whose default construction is only a zero.
template <class T>
Matrix<T> inverse_field(Matrix<T> a, const T& one) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse_field: matrix must be square");
    const size_t n = a.rows();
    Matrix<T> inv(n, n);
    for (size_t i = 0; i < n; ++i) inv(i, i) = one;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a(piv, k) == T{}) ++piv;
        if (piv == n) throw std::domain_error("inverse_field: singular matrix");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        const T p = a(k, k);
        for (size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) / p;
            inv(k, j) = inv(k, j) / p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const T f = a(i, k);
            if (f == T{}) continue;
            for (size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

struct SnfResult {
    std::vector<Int> diag;  // nonnegative, each divides the next
    bool has_multipliers = false;
    IntMatrix u, v;  // when requested: u * A * v = diag, det(u), det(v) = +-1
};

SnfResult snf(IntMatrix a, bool with_multipliers = false);

// Invariant factors of a diagonal matrix given its entries (all >= 1);
// order-independent.
std::vector<Int> snf_diag(std::vector<Int> values);

// Position-wise product of two equally long divisibility chains,
// re-normalized into a chain.
std::vector<Int> snf_chain_product(std::vector<Int> a, std::vector<Int> b);

// Remove all factors of the given primes.
Int coprime_part(Int m, const std::vector<Int>& primes);

// D with D * X = Y over the rationals; X must be square and invertible.
RatMatrix solve_right(const IntMatrix& y, const IntMatrix& x);

RatMatrix inverse(RatMatrix a);

RatMatrix to_rational(const IntMatrix& a);
bool is_integral(const RatMatrix& a);
IntMatrix to_integral(const RatMatrix& a);  // throws unless is_integral

}  // namespace chartab
