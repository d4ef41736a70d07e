#ifndef LOGJET_LINALG_HPP
#define LOGJET_LINALG_HPP

#include "logjet/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace logjet {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("Matrix: size mismatch in product");
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Bareiss fraction-free elimination. Returns the determinant; all
// intermediate divisions are exact.
inline Scalar determinant(Matrix<Scalar> m) {
    if (m.rows() != m.cols()) throw std::domain_error("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return Scalar(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Scalar(-m(n - 1, n - 1));
}

struct LinearSolveResult {
    Scalar det;
    bool singular = false;
    std::vector<Scalar> solution;  // empty when singular
};

// Exact solution of a square system. When det(M) == 0 the result is flagged
// singular and carries the zero determinant.
inline LinearSolveResult solve_linear(const Matrix<Scalar>& m, const std::vector<Scalar>& b) {
    if (m.rows() != m.cols()) throw std::domain_error("solve_linear: matrix not square");
    if (b.size() != m.rows()) throw std::domain_error("solve_linear: rhs size mismatch");
    const std::size_t n = m.rows();
    LinearSolveResult res;
    res.det = determinant(m);
    if (res.det == 0) {
        res.singular = true;
        return res;
    }
    // Gauss-Jordan over Q on the augmented matrix.
    Matrix<Scalar> a(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n) = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (a(p, k) == 0) ++p;
        if (p != k)
            for (std::size_t j = 0; j <= n; ++j) std::swap(a(k, j), a(p, j));
        Scalar inv = Scalar(1) / a(k, k);
        for (std::size_t j = k; j <= n; ++j) a(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Scalar f = a(i, k);
            for (std::size_t j = k; j <= n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    res.solution.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.solution[i] = a(i, n);
    return res;
}

// Basis of the null space of a (possibly rectangular) matrix.
inline std::vector<std::vector<Scalar>> kernel_basis(Matrix<Scalar> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
        Scalar inv = Scalar(1) / m(r, c);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Coefficients c[0..n] of det(lambda*I - M) = sum c[k] lambda^k, c[n] = 1.
// Faddeev-LeVerrier; only divisions by integers occur.
inline std::vector<Scalar> char_poly_coeffs(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw std::domain_error("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = Scalar(1);
    Matrix<Scalar> mk = Matrix<Scalar>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Scalar tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        Scalar ck = -tr / Scalar(static_cast<long long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

// Determinant by Laplace expansion; fine for the small polynomial-entry
// systems mirrored from the proofs (n <= 6).
template <typename T>
T det_laplace(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det_laplace: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T out = T();
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        T term = m(0, j) * det_laplace(minor);
        out = (j % 2 == 0) ? out + term : out - term;
    }
    return out;
}

struct CramerPolyResult {
    Scalar det;
    std::vector<Polynomial> solution;
};

// Cramer's rule for a scalar square matrix with polynomial right-hand side.
// The replaced-column determinants are expanded along that column so that
// only scalar minors are computed.
inline CramerPolyResult solve_cramer(const Matrix<Scalar>& m, const std::vector<Polynomial>& b) {
    if (m.rows() != m.cols()) throw std::domain_error("solve_cramer: matrix not square");
    if (b.size() != m.rows()) throw std::domain_error("solve_cramer: rhs size mismatch");
    const std::size_t n = m.rows();
    CramerPolyResult res;
    res.det = determinant(m);
    if (res.det == 0) return res;
    res.solution.resize(n);
    for (std::size_t col = 0; col < n; ++col) {
        Polynomial det_col;
        for (std::size_t row = 0; row < n; ++row) {
            if (b[row].is_zero()) continue;
            Matrix<Scalar> minor(n - 1, n - 1);
            std::size_t rr = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == row) continue;
                std::size_t cc = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == col) continue;
                    minor(rr, cc++) = m(i, j);
                }
                ++rr;
            }
            Scalar cof = determinant(minor);
            if ((row + col) % 2 != 0) cof = -cof;
            det_col += b[row] * cof;
        }
        res.solution[col] = det_col * (Scalar(1) / res.det);
    }
    return res;
}

}  // namespace logjet

#endif
