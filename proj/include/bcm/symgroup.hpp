#pragma once

#include "bcm/perm.hpp"
#include "bcm/poly.hpp"

namespace bcm {

/// Which block of a z/l variable set a permutation acts on.
enum class ActMode { ZOnly, LOnly, Both };

/// Left action of sigma on polynomials in z1..zN, l1..lN by the substitution
/// v_k -> v_{sigma(k)} applied to the selected block(s).
/// act(a, act(b, p)) == act(a*b, p).
inline MultiPoly act(const Perm& sigma, const MultiPoly& p, ActMode mode) {
    if (p.is_zero()) return p;
    int two_n = static_cast<int>(p.vars()->size());
    int n = two_n / 2;
    if (2 * n != two_n || sigma.size() != n)
        throw std::invalid_argument("act: polynomial is not over z/l variables of matching size");
    std::vector<int> pos(two_n);
    for (int k = 0; k < n; ++k) {
        pos[k] = (mode != ActMode::LOnly) ? sigma.map0(k) : k;
        pos[n + k] = (mode != ActMode::ZOnly) ? n + sigma.map0(k) : n + k;
    }
    return p.substitute_positions(pos);
}

/// Invariance under the simultaneous action on both blocks; the adjacent
/// transpositions generate, so only n-1 checks are needed.
inline bool is_multisymmetric(const MultiPoly& p) {
    if (p.is_zero()) return true;
    int n = static_cast<int>(p.vars()->size()) / 2;
    for (int i = 1; i < n; ++i) {
        Perm s = Perm::transposition(n, i, i + 1);
        if (act(s, p, ActMode::Both) != p) return false;
    }
    return true;
}

}  // namespace bcm
