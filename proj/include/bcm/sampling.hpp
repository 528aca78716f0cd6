#pragma once

#include "bcm/rational.hpp"

#include <cstdint>
#include <vector>

namespace bcm {

/// Deterministic generator (splitmix64).  All draws are derived from the raw
/// stream with fixed arithmetic, so identical seeds give identical values on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small rational with denominator in [1, 4].
    Rational small_rational() {
        return Rational(Int(range(-6, 6)), Int(range(1, 4)));
    }

private:
    std::uint64_t state_;
};

/// n pairwise distinct rationals: a random integer part plus the shift
/// 1/(i+2).  Distinct integer parts differ by >= 1 while the fractional
/// shifts differ by < 1/2, and equal integer parts leave a nonzero
/// difference of shifts, so distinctness holds unconditionally.
inline std::vector<Rational> distinct_rationals(int n, Rng& rng) {
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i)
        v.push_back(Rational(Int(rng.range(-4, 4))) + Rational(Int(1), Int(i + 2)));
    return v;
}

}  // namespace bcm
