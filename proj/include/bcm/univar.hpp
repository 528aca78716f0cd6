#pragma once

#include "bcm/matrix.hpp"
#include "bcm/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bcm {

/// Dense univariate polynomial over the rationals, coefficients low to high,
/// no trailing zeros.  The zero polynomial has an empty coefficient list.
class Poly1 {
public:
    Poly1() = default;
    Poly1(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly1(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

    static Poly1 constant(const Rational& c) { return Poly1(std::vector<Rational>{c}); }
    static Poly1 x() { return Poly1({Rational(0), Rational(1)}); }

    /// prod (x - r_i)
    static Poly1 from_roots(const std::vector<Rational>& roots) {
        Poly1 p = constant(Rational(1));
        for (const Rational& r : roots) p = p * Poly1({-r, Rational(1)});
        return p;
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[k];
    }
    Rational lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero");
        return c_.back();
    }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly1(std::move(r));
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return Poly1();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly1(std::move(r));
    }
    Poly1 operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly1(std::move(r));
    }

    Poly1& operator+=(const Poly1& o) { return *this = *this + o; }
    Poly1& operator-=(const Poly1& o) { return *this = *this - o; }
    Poly1& operator*=(const Poly1& o) { return *this = *this * o; }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Poly1 scaled(const Rational& s) const {
        if (s.is_zero()) return Poly1();
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly1(std::move(r));
    }

    Poly1 monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }

    Poly1 derivative() const {
        if (c_.size() <= 1) return Poly1();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long long>(i));
        return Poly1(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Quotient and remainder with deg r < deg b.
    std::pair<Poly1, Poly1> divmod(const Poly1& b) const {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly1 r = *this;
        if (r.deg() < b.deg()) return {Poly1(), r};
        std::vector<Rational> q(r.deg() - b.deg() + 1);
        Rational bl = b.lead().inverse();
        while (!r.is_zero() && r.deg() >= b.deg()) {
            int k = r.deg() - b.deg();
            Rational f = r.lead() * bl;
            q[k] = f;
            std::vector<Rational> rc = r.c_;
            for (int i = 0; i <= b.deg(); ++i) rc[k + i] -= f * b.c_[i];
            r = Poly1(std::move(rc));
        }
        return {Poly1(std::move(q)), r};
    }

    std::string str(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            Rational a = c_[i];
            if (!first) {
                os << (a < Rational(0) ? " - " : " + ");
                if (a < Rational(0)) a = -a;
            }
            first = false;
            if (i == 0 || !(a.is_one() || a == Rational(-1))) os << a.str();
            else if (a == Rational(-1)) os << "-";
            if (i >= 1) {
                if (!(c_[i].is_one() || c_[i] == Rational(-1)) ) os << "*";
                os << var;
                if (i >= 2) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Poly1 scale(const Poly1& p, const Rational& c) { return p.scaled(c); }

inline Poly1 exact_div(const Poly1& a, const Poly1& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

inline Poly1 poly_gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Reduced rational function in one variable; denominator monic, gcd 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly1::constant(Rational(1))) {}
    RatFunc(Poly1 n, Poly1 d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    /* implicit */ RatFunc(Poly1 n) : num_(std::move(n)), den_(Poly1::constant(Rational(1))) {}
    static RatFunc constant(const Rational& c) { return RatFunc(Poly1::constant(c)); }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.deg() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly1::constant(Rational(1));
            return;
        }
        Poly1 g = poly_gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rational l = den_.lead();
        if (!l.is_one()) {
            Rational inv = l.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly1 num_, den_;
};

inline RatFunc scale(const RatFunc& f, const Rational& c) {
    return RatFunc(f.num().scaled(c), f.den());
}

/// det(x*I - m), computed exactly over polynomial entries.
inline Poly1 charpoly(const Matrix<Rational>& m) {
    int n = m.rows();
    Matrix<Poly1> xm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            xm(i, j) = Poly1::constant(-m(i, j));
            if (i == j) xm(i, j) += Poly1::x();
        }
    return det_exact(xm);
}

/// Coefficients a_0..a_T of the expansion f = sum a_k u^{-k}; requires
/// deg num <= deg den.
inline std::vector<Rational> expand_at_infinity(const RatFunc& f, int order) {
    if (f.num().deg() > f.den().deg())
        throw std::domain_error("expansion at infinity needs deg num <= deg den");
    int m = f.den().deg();
    // rewrite in x = 1/u: numerator sum n_j x^{m-j}, denominator with constant term 1
    std::vector<Rational> nt(order + 1), dt(order + 1);
    for (int j = 0; j <= f.num().deg(); ++j)
        if (m - j <= order) nt[m - j] = f.num().coeff(j);
    for (int j = 0; j <= m; ++j)
        if (m - j <= order) dt[m - j] = f.den().coeff(j);
    Rational c0 = dt[0];
    if (c0.is_zero()) throw std::logic_error("denominator lost its leading term");
    std::vector<Rational> a(order + 1);
    for (int k = 0; k <= order; ++k) {
        Rational s = nt[k];
        for (int i = 1; i <= k; ++i) s -= dt[i] * a[k - i];
        a[k] = s / c0;
    }
    return a;
}

}  // namespace bcm
