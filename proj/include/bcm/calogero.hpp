#pragma once

#include "bcm/matrix.hpp"
#include "bcm/rational.hpp"
#include "bcm/series.hpp"
#include "bcm/univar.hpp"
#include "bcm/uvpoly.hpp"

#include <vector>

namespace bcm::calogero {

/// A pair of matrices subject to the rank-one condition rank([Z,L] + 1) = 1.
struct CMPoint {
    int n = 0;
    Matrix<Rational> Z;
    Matrix<Rational> L;
};

bool is_cm_point(const CMPoint& pt);

/// Point with L = diag(lambda), Z_ii = d_i, Z_ij = 1/(lambda_j - lambda_i).
/// Requires the lambda values to be pairwise distinct.
CMPoint generic_cm_point(const std::vector<Rational>& lambda, const std::vector<Rational>& d);

/// Simultaneous conjugation (g Z g^-1, g L g^-1); g must be invertible.
CMPoint conjugate(const CMPoint& pt, const Matrix<Rational>& g);

/// det((v - L)(u - Z) - 1) as a polynomial in the commuting variables u, v.
UVPoly<Rational> cm_universal_poly(const CMPoint& pt);

/// det(1 - (v - L)^{-1} (u - Z)^{-1}) expanded at u = v = infinity.
TruncSeries<Rational> cm_psi(const CMPoint& pt, int order);

/// UVPoly of u-degree and v-degree <= n rewritten in powers of 1/u, 1/v:
/// the u^a v^b term lands at u^{-(n-a)} v^{-(n-b)}.
TruncSeries<Rational> normalized_uv(const UVPoly<Rational>& p, int n, int order);

/// det(1 - m/u) resp. det(1 - m/v) as a one-sided series.
TruncSeries<Rational> charpoly_u_series(const Matrix<Rational>& m, int order);
TruncSeries<Rational> charpoly_v_series(const Matrix<Rational>& m, int order);

}  // namespace bcm::calogero
