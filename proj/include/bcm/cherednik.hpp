#pragma once

#include "bcm/perm.hpp"
#include "bcm/poly.hpp"
#include "bcm/rational.hpp"
#include "bcm/uvpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bcm::cherednik {

/// Normal-form monomial x^a * sigma * y^b (x block, group element, y block).
struct HKey {
    std::vector<int> x;
    std::vector<int> perm;  // 0-indexed image vector
    std::vector<int> y;

    friend bool operator==(const HKey& a, const HKey& b) {
        return a.x == b.x && a.perm == b.perm && a.y == b.y;
    }
};

struct HKeyLess {
    bool operator()(const HKey& a, const HKey& b) const {
        GradedLexLess g;
        if (a.x != b.x) return g(a.x, b.x);
        if (a.perm != b.perm) return a.perm < b.perm;
        if (a.y != b.y) return g(a.y, b.y);
        return false;
    }
};

/// Element of the degenerate double affine algebra on n sites: an exact
/// rational combination of normal-form monomials.  Products are rewritten
/// back to normal form with the defining commutation rules
///   [x_i, y_j] = s_ij   (i != j),    [x_i, y_i] = -sum_{a != i} s_ia,
///   s x s = x permuted, x's commute, y's commute.
/// A default-constructed element is the zero element on an unknown number of
/// sites and absorbs into any operation.
class HElement {
public:
    using TermMap = std::map<HKey, Rational, HKeyLess>;

    HElement() : n_(0) {}
    explicit HElement(int n) : n_(n) {}

    static HElement one(int n);
    static HElement xgen(int n, int i);          // x_i, 1-indexed
    static HElement ygen(int n, int i);          // y_i
    static HElement sgen(int n, int i, int j);   // s_ij
    static HElement group(int n, const Perm& p);
    static HElement monomial(int n, std::vector<int> xexp, const Perm& p,
                             std::vector<int> yexp, const Rational& c);

    int sites() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const HKey& k, const Rational& c);

    friend HElement operator+(const HElement& a, const HElement& b);
    friend HElement operator-(const HElement& a, const HElement& b);
    friend HElement operator*(const HElement& a, const HElement& b);
    HElement operator-() const;
    HElement& operator+=(const HElement& o) { return *this = *this + o; }
    HElement& operator-=(const HElement& o) { return *this = *this - o; }

    friend bool operator==(const HElement& a, const HElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const HElement& a, const HElement& b) { return !(a == b); }

    HElement scaled(const Rational& c) const;

    /// max |x| + |y| over terms (s-letters count 0); -1 for zero.
    int filtration_degree() const;
    /// Terms of maximal filtration degree.
    HElement top_part() const;

    std::string str() const;

private:
    friend HElement mul_term(const HElement& a, const HKey& k, const Rational& c);
    int n_;
    TermMap terms_;
};

inline HElement scale(const HElement& a, const Rational& c) { return a.scaled(c); }

inline HElement commutator(const HElement& a, const HElement& b) { return a * b - b * a; }

/// The central generating polynomial: (-1)^n sum_sigma sgn(sigma)
/// NO[ prod_{fixed i} (1 - (v - x_i)(u - y_i)) ] sigma, where NO sorts each
/// monomial into x-before-y normal form without commutator corrections.
/// Coefficient of v^{n-i} u^{n-j} is the central element c_ij.
UVPoly<HElement> universal_central_poly(int n);

/// Commutes with every x_i, y_i and the adjacent transpositions.
bool is_central(const HElement& a);

/// e = (1/n!) sum_sigma sigma.
HElement symmetrizer(int n);

/// Row determinant of delta_jk (v - x_j)(u - y_j) - 1 over free words in the
/// generators, normally ordered monomial-wise, then multiplied by e on the
/// right.  Equals universal_central_poly * e coefficientwise.
UVPoly<HElement> spherical_poly(int n);

/// Commutation inside the mixed tensor algebra C[x] (x) (C[y] >< group):
/// both inputs must be central (throws std::invalid_argument otherwise).
bool alpha_commutes(const HElement& a, const HElement& b);

/// Projection of the top filtration part through x -> l, y -> z; throws if a
/// non-identity group element survives at top degree.
MultiPoly project_top_to_zl(const HElement& a);

/// Degenerate-affine representation on polynomials in z, l:
///   K_i = z_i + sum_{j != i} s_ij^z (l_i - l_j)^{-1} (1 - s_ij^l).
MultiPoly dunkl_apply(int i, const MultiPoly& p);

/// Checks every defining relation as an operator identity on random
/// polynomials of degree <= 3 (x_i -> multiplication by l_i, y_i -> K_i,
/// s_ij -> simultaneous swap).  With perturb_control the z_1 term of K_1 is
/// dropped, which must make the check fail.
bool polyrep_check(int n, std::uint64_t seed, int trials, bool perturb_control = false,
                   std::string* first_failure = nullptr);

}  // namespace bcm::cherednik
