#pragma once

#include "bcm/perm.hpp"
#include "bcm/rational.hpp"

#include <stdexcept>
#include <vector>

namespace bcm {

/// Dense matrix over an arbitrary ring T.  T() must be the additive zero.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}
    Matrix(int r, int c, std::vector<T> data) : rows_(r), cols_(c), a_(std::move(data)) {
        if (a_.size() != static_cast<size_t>(r) * c) throw std::invalid_argument("matrix data size");
    }

    static Matrix identity(int n, const T& one) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.shape_check(y);
        Matrix r(x.rows_, x.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.shape_check(y);
        Matrix r(x.rows_, x.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                for (int j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = T{} - a_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T t{};
        for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        T z{};
        for (auto& x : a_)
            if (!(x == z)) return false;
        return true;
    }

    template <typename F>
    auto map(F f) const {
        Matrix<decltype(f(a_[0]))> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void shape_check(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> a_;
};

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

namespace detail {

template <typename T>
T det_cofactor(const Matrix<T>& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (row == n - 1) return m(row, cols[0]);
    T acc{};
    for (size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        cols.erase(cols.begin() + k);
        T sub = det_cofactor(m, cols, row + 1);
        cols.insert(cols.begin() + k, c);
        T contrib = m(row, c) * sub;
        if (k % 2 == 0) acc = acc + contrib;
        else acc = acc - contrib;
    }
    return acc;
}

}  // namespace detail

/// Exact determinant: cofactor expansion for n <= 4, fraction-free Bareiss
/// elimination above (requires exact_div on T).
template <typename T>
T det_exact(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    if (n <= 4) {
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i) cols[i] = i;
        return detail::det_cofactor(m, cols, 0);
    }
    Matrix<T> w = m;
    T prev{};  // pivot of the previous step; the first step divides by 1 implicitly
    bool have_prev = false;
    int sign = 1;
    T zero{};
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == zero) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(w(i, k) == zero)) { p = i; break; }
            if (p < 0) return zero;
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                T num = w(k, k) * w(i, j) - w(i, k) * w(k, j);
                w(i, j) = have_prev ? exact_div(num, prev) : num;
            }
        prev = w(k, k);
        have_prev = true;
    }
    T d = w(n - 1, n - 1);
    if (sign < 0) d = zero - d;
    return d;
}

/// Row determinant over a possibly noncommutative ring: the signed sum of
/// products taken left to right by row, sum_sigma sgn(sigma) a_{1,s(1)} ... a_{n,s(n)}.
/// Agrees with det_exact whenever T is commutative.
template <typename T>
T rdet(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rdet of non-square matrix");
    int n = m.rows();
    T acc{};
    for (const Perm& s : all_perms(n)) {
        T prod = m(0, s.map0(0));
        for (int i = 1; i < n; ++i) prod = prod * m(i, s.map0(i));
        if (s.sign() > 0) acc = acc + prod;
        else acc = acc - prod;
    }
    return acc;
}

/// Reduce in place to row echelon form over the rationals; returns the rank.
inline int row_reduce(Matrix<Rational>& m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int p = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(p, j));
        Rational inv = m(rank, col).inverse();
        for (int j = col; j < m.cols(); ++j) m(rank, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline int rank_exact(Matrix<Rational> m) { return row_reduce(m); }

inline Matrix<Rational> inverse_exact(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Matrix<Rational> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    if (row_reduce(aug) != n) throw std::domain_error("matrix is singular");
    Matrix<Rational> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

/// Basis of the right null space of m, one column vector per basis element.
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m) {
    int rank = row_reduce(m);
    int n = m.cols();
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    }
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = Rational(1);
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bcm
