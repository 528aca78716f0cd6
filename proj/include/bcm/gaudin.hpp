#pragma once

#include "bcm/cherednik.hpp"
#include "bcm/matrix.hpp"
#include "bcm/perm.hpp"
#include "bcm/poly.hpp"
#include "bcm/univar.hpp"
#include "bcm/uvpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bcm::gaudin {

/// Element of the weight-one tensor module over n sites: a combination of
/// basis vectors eps_tau (tau a permutation) with polynomial coefficients in
/// z1..zn, l1..ln.
class V1Element {
public:
    using TermMap = std::map<Perm, MultiPoly>;

    V1Element() : n_(0) {}
    explicit V1Element(int n) : n_(n) {}

    static V1Element basis(int n, const Perm& tau) {
        V1Element v(n);
        v.add(tau, MultiPoly::constant(zl_vars(n), Rational(1)));
        return v;
    }

    int sites() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Perm& tau, const MultiPoly& p);

    friend V1Element operator+(const V1Element& a, const V1Element& b);
    friend V1Element operator-(const V1Element& a, const V1Element& b);
    V1Element operator-() const;
    V1Element& operator+=(const V1Element& o) { return *this = *this + o; }

    /// Multiply every coefficient by a polynomial.
    V1Element mul_poly(const MultiPoly& p) const;

    friend bool operator==(const V1Element& a, const V1Element& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const V1Element& a, const V1Element& b) { return !(a == b); }

    std::string str() const;

private:
    int n_;
    TermMap terms_;
};

inline V1Element scale(const V1Element& v, const Rational& c) {
    return v.mul_poly(MultiPoly::constant(zl_vars(v.sites() ? v.sites() : 1), c));
}

/// Closed-form action of the generating operator: on eps_tau it yields
/// (-1)^n sum_sigma sgn(sigma) prod_{fixed i} (1 - (u - z_{tau^{-1}(i)})(v - l_i)) eps_{sigma tau}.
UVPoly<V1Element> bethe_poly_apply(const V1Element& v);

/// Coefficient matrices of the generating operator in the eps basis (ordered
/// like all_perms): key (i,j) holds the matrix at u^{n-i} v^{n-j}.
struct BetheCoeffs {
    int n = 0;
    std::vector<Perm> basis;
    std::map<std::pair<int, int>, Matrix<MultiPoly>> b;
};

BetheCoeffs extract_bethe_coeffs(int n);

/// p(z) q(l) eps_tau  ->  q(x) tau p(y).
cherednik::HElement iota(const V1Element& v);
V1Element iota_inv(const cherednik::HElement& h);

/// sigma^L (p eps_tau) = (sigma acting on l) p eps_{sigma tau}.
V1Element act_left(const Perm& sigma, const V1Element& v);
/// sigma^R (p eps_tau) = (sigma acting on z) p eps_{tau sigma^{-1}}.
V1Element act_right(const Perm& sigma, const V1Element& v);

/// Coefficient of eps_id.
MultiPoly projection_pr(const V1Element& v);
/// n! * pr(iota^{-1}(h)); sends q(x) p(y) e to q(l) p(z).
MultiPoly pr_iota_inv(const cherednik::HElement& h);

/// Matrix-valued differential operator sum_k C_k(u) d^k with exact
/// rational-function entries; leading coefficient is the identity.
struct DiffOp {
    int order = 0;
    std::vector<Matrix<RatFunc>> coeff;  // index k = power of d
};

/// Independent construction of the generating operator at a specialized
/// point: the signed row determinant of delta_jk (d - l_k) - E_kj(u) acting
/// on the full n^n tensor space, E_kj(u) = sum_i e_kj^(i) / (u - z_i).
/// weight_index lists the permutation-word positions (eps basis order);
/// weight is the restriction of full to that block.
struct OracleOutput {
    DiffOp full;
    DiffOp weight;
    std::vector<int> weight_index;
    Poly1 w;  // prod (u - z_i)
};

OracleOutput rdet_oracle(int n, const std::vector<Rational>& z0,
                         const std::vector<Rational>& l0);

/// E_kj(u) on the full n^n tensor space as plain rational functions
/// (1-indexed k, j); independent of the oracle's internal representation.
Matrix<RatFunc> e_matrix(int n, int k, int j, const std::vector<Rational>& z0);

/// Checks that iota intertwines the closed-form action with the central
/// table, on every basis vector and `trials` random monomial samples.
/// A nonnull central_override replaces the computed central table (used by
/// the fault-injection path of the verification suites).
bool verify_ZB(int n, std::uint64_t seed, int trials, std::string* first_failure = nullptr,
               const UVPoly<cherednik::HElement>* central_override = nullptr);

}  // namespace bcm::gaudin
