#pragma once

#include "bcm/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace bcm {

/// Polynomial in two central variables u, v with coefficients in an arbitrary
/// ring T (which may be noncommutative; u and v commute with everything).
/// Keys are (u-exponent, v-exponent); zero coefficients are never stored.
template <typename T>
class UVPoly {
public:
    using Map = std::map<std::pair<int, int>, T>;

    UVPoly() = default;

    static UVPoly term(int ue, int ve, T c) {
        UVPoly p;
        p.add(ue, ve, std::move(c));
        return p;
    }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    T coeff(int ue, int ve) const {
        auto it = c_.find({ue, ve});
        return it == c_.end() ? T{} : it->second;
    }

    void add(int ue, int ve, const T& c) {
        if (c == T{}) return;
        auto [it, fresh] = c_.try_emplace({ue, ve}, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second == T{}) c_.erase(it);
        }
    }

    int udeg() const {
        int d = -1;
        for (auto& [k, v] : c_) d = std::max(d, k.first);
        return d;
    }
    int vdeg() const {
        int d = -1;
        for (auto& [k, v] : c_) d = std::max(d, k.second);
        return d;
    }

    friend UVPoly operator+(const UVPoly& a, const UVPoly& b) {
        UVPoly r = a;
        for (auto& [k, v] : b.c_) r.add(k.first, k.second, v);
        return r;
    }
    friend UVPoly operator-(const UVPoly& a, const UVPoly& b) {
        UVPoly r = a;
        for (auto& [k, v] : b.c_) r.add(k.first, k.second, T{} - v);
        return r;
    }
    friend UVPoly operator*(const UVPoly& a, const UVPoly& b) {
        UVPoly r;
        for (auto& [ka, va] : a.c_)
            for (auto& [kb, vb] : b.c_)
                r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    UVPoly operator-() const {
        UVPoly r;
        for (auto& [k, v] : c_) r.c_[k] = T{} - v;
        return r;
    }

    UVPoly& operator+=(const UVPoly& o) { return *this = *this + o; }
    UVPoly& operator-=(const UVPoly& o) { return *this = *this - o; }
    UVPoly& operator*=(const UVPoly& o) { return *this = *this * o; }

    friend bool operator==(const UVPoly& a, const UVPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UVPoly& a, const UVPoly& b) { return !(a == b); }

    template <typename F>
    auto map(F f) const {
        UVPoly<decltype(f(c_.begin()->second))> r;
        for (auto& [k, v] : c_) r.add(k.first, k.second, f(v));
        return r;
    }

private:
    Map c_;
};

template <typename T>
UVPoly<T> scale(const UVPoly<T>& p, const Rational& c) {
    return p.map([&](const T& x) { return scale(x, c); });
}

}  // namespace bcm
