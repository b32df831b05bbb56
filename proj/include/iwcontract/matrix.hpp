#ifndef IWCONTRACT_MATRIX_HPP
#define IWCONTRACT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace iwcontract {

/// Dense matrix with value semantics. Instantiated with exact scalar
/// types only (Rat, Int).
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const T& v : data_)
            if (v != 0) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

namespace detail {

/// Clears denominators row by row. Preserves rank.
inline IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& d = m(i, j).get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& v = m(i, j);
            out(i, j) = v.get_num() * (l / v.get_den());
        }
    }
    return out;
}

} // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination over the integers,
/// with column skipping on rank-deficient columns.
inline std::size_t rank(const RatMatrix& m_in) {
    IntMatrix m = detail::clear_denominators(m_in);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Int prev(1);
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int num = m(r, col) * m(i, j) - m(i, col) * m(r, j);
                if (mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) == 0)
                    throw InternalError("fraction-free elimination: inexact division");
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    return r;
}

inline std::size_t kernel_dimension(const RatMatrix& m) { return m.cols() - rank(m); }

/// Exact determinant by rational Gaussian elimination with pivoting.
inline Rat determinant(const RatMatrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw Error("determinant: matrix not square");
    RatMatrix m = m_in;
    const std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            m.swap_rows(k, piv);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Solves A x = b for square invertible A. Returns nullopt when A is
/// singular.
inline std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) throw Error("solve: shape mismatch");
    const std::size_t n = a.rows();
    RatMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return std::nullopt;
        m.swap_rows(k, piv);
        Rat p = m(k, k);
        for (std::size_t j = k; j <= n; ++j) m(k, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (std::size_t j = k; j <= n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n);
    return x;
}

/// Exact inverse via Gauss-Jordan. Throws on singular input.
inline RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw Error("inverse: matrix not square");
    const std::size_t n = a.rows();
    RatMatrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) throw Error("inverse: singular matrix");
        m.swap_rows(k, piv);
        Rat p = m(k, k);
        for (std::size_t j = k; j < 2 * n; ++j) m(k, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (std::size_t j = k; j < 2 * n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return inv;
}

} // namespace iwcontract

#endif
