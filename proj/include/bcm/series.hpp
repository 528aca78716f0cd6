#pragma once

#include "bcm/rational.hpp"
#include "bcm/uvpoly.hpp"

#include <stdexcept>
#include <vector>

namespace bcm {

/// Bivariate series in u^{-1}, v^{-1}, truncated at a fixed order in each
/// variable: coefficients c(i,j) of u^{-i} v^{-j} for 0 <= i,j <= order.
/// A default-constructed series is the zero series of indeterminate order and
/// absorbs into any operation.
template <typename T>
class TruncSeries {
public:
    TruncSeries() : order_(-1) {}
    explicit TruncSeries(int order)
        : order_(order), c_(static_cast<size_t>(order + 1) * (order + 1)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    int order() const { return order_; }
    bool is_null() const { return order_ < 0; }

    const T& at(int i, int j) const { return c_[idx(i, j)]; }
    void set(int i, int j, T v) { c_[idx(i, j)] = std::move(v); }
    void add(int i, int j, const T& v) { c_[idx(i, j)] = c_[idx(i, j)] + v; }

    bool is_zero() const {
        T z{};
        for (auto& x : c_)
            if (!(x == z)) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        if (a.is_null()) return b;
        if (b.is_null()) return a;
        a.order_check(b);
        TruncSeries r(a.order_);
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        if (b.is_null()) return a;
        TruncSeries r = a.is_null() ? TruncSeries(b.order_) : a;
        r.order_check(b);
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] - b.c_[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        if (a.is_null() || b.is_null()) return TruncSeries();
        a.order_check(b);
        int n = a.order_;
        TruncSeries r(n);
        for (int i1 = 0; i1 <= n; ++i1)
            for (int j1 = 0; j1 <= n; ++j1) {
                const T& x = a.at(i1, j1);
                if (x == T{}) continue;
                for (int i2 = 0; i1 + i2 <= n; ++i2)
                    for (int j2 = 0; j1 + j2 <= n; ++j2) {
                        const T& y = b.at(i2, j2);
                        if (y == T{}) continue;
                        r.add(i1 + i2, j1 + j2, x * y);
                    }
            }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.is_null()) return b.is_zero() || b.is_null();
        if (b.is_null()) return a.is_zero();
        if (a.order_ != b.order_) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Forget coefficients beyond a smaller order.
    TruncSeries truncated(int new_order) const {
        if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
        TruncSeries r(new_order);
        for (int i = 0; i <= new_order; ++i)
            for (int j = 0; j <= new_order; ++j) r.set(i, j, at(i, j));
        return r;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i > order_ || j > order_)
            throw std::out_of_range("series index out of range");
        return static_cast<size_t>(i) * (order_ + 1) + j;
    }
    void order_check(const TruncSeries& o) const {
        if (!o.is_null() && order_ != o.order_)
            throw std::invalid_argument("series order mismatch");
    }

    int order_;
    std::vector<T> c_;
};

template <typename T>
TruncSeries<T> scale(const TruncSeries<T>& s, const Rational& c) {
    if (s.is_null()) return s;
    TruncSeries<T> r(s.order());
    for (int i = 0; i <= s.order(); ++i)
        for (int j = 0; j <= s.order(); ++j) r.set(i, j, scale(s.at(i, j), c));
    return r;
}

template <typename T>
TruncSeries<T> series_one(int order, const T& one) {
    TruncSeries<T> r(order);
    r.set(0, 0, one);
    return r;
}

/// Multiplicative inverse of a series with unit constant term.
template <typename T>
TruncSeries<T> series_invert(const TruncSeries<T>& s, const T& one) {
    if (s.is_null() || !(s.at(0, 0) == one))
        throw std::domain_error("series inversion needs a unit constant term");
    int n = s.order();
    TruncSeries<T> r = series_one(n, one);
    TruncSeries<T> tail = series_one(n, one) - s;  // no constant term
    TruncSeries<T> pw = tail;
    for (int k = 1; k <= 2 * n + 1 && !pw.is_zero(); ++k) {
        r = r + pw;
        pw = pw * tail;
    }
    return r;
}

/// log of a series with unit constant term.
template <typename T>
TruncSeries<T> series_log(const TruncSeries<T>& s, const T& one) {
    if (s.is_null() || !(s.at(0, 0) == one))
        throw std::domain_error("series log needs a unit constant term");
    int n = s.order();
    TruncSeries<T> tail = s - series_one(n, one);
    TruncSeries<T> r(n), pw = tail;
    for (int k = 1; k <= 2 * n + 1 && !pw.is_zero(); ++k) {
        Rational c(k % 2 == 1 ? 1 : -1, k);
        r = r + scale(pw, c);
        pw = pw * tail;
    }
    return r;
}

/// exp of a series with zero constant term.
template <typename T>
TruncSeries<T> series_exp(const TruncSeries<T>& s, const T& one) {
    if (s.is_null()) return series_one(0, one);
    if (!(s.at(0, 0) == T{}))
        throw std::domain_error("series exp needs a zero constant term");
    int n = s.order();
    TruncSeries<T> r = series_one(n, one);
    TruncSeries<T> pw = s;
    Rational fact(1);
    for (int k = 1; k <= 2 * n + 1 && !pw.is_zero(); ++k) {
        fact *= Rational(k);
        r = r + scale(pw, fact.inverse());
        pw = pw * s;
    }
    return r;
}

/// Series of P / (wu(u) * wv(v)) where wu, wv are monic polynomials given by
/// coefficient lists (low to high, leading coefficient == one) and every term
/// of P satisfies udeg <= deg wu, vdeg <= deg wv.
template <typename T>
TruncSeries<T> expand_rational(const UVPoly<T>& p, const std::vector<T>& wu,
                               const std::vector<T>& wv, int order, const T& one) {
    if (wu.empty() || wv.empty() || !(wu.back() == one) || !(wv.back() == one))
        throw std::domain_error("expansion denominators must be monic");
    int a = static_cast<int>(wu.size()) - 1;
    int b = static_cast<int>(wv.size()) - 1;
    TruncSeries<T> sp(order);
    for (auto& [k, c] : p.coeffs()) {
        if (k.first > a || k.second > b)
            throw std::domain_error("numerator degree exceeds denominator");
        if (a - k.first <= order && b - k.second <= order)
            sp.add(a - k.first, b - k.second, c);
    }
    TruncSeries<T> du(order), dv(order);
    for (int k = 0; k <= a && k <= order; ++k) du.set(k, 0, wu[a - k]);
    for (int k = 0; k <= b && k <= order; ++k) dv.set(0, k, wv[b - k]);
    return sp * series_invert(du, one) * series_invert(dv, one);
}

}  // namespace bcm
