#pragma once

#include "bcm/poly.hpp"
#include "bcm/series.hpp"
#include "bcm/uvpoly.hpp"

#include <map>
#include <utility>

namespace bcm::multisym {

/// prod_i ((u - z_i)(v - l_i) - 1) over z1..zn, l1..ln; the generating
/// polynomial of the multisymmetric coefficient ring.  Coefficient of
/// u^{n-i} v^{n-j} is the generator p_ij.
UVPoly<MultiPoly> universal_multisym(int n);

/// sum_k z_k^zdeg l_k^ldeg
MultiPoly power_sum(int n, int zdeg, int ldeg);

/// Coefficients of prod_i (u - z_i), low to high in u.
std::vector<MultiPoly> elementary_row(int n, bool l_block);

/// log( universal_multisym / (prod(u - z_i) prod(v - l_i)) ) as a truncated
/// series; coefficient of u^{-i-1} v^{-j-1} is a universal triangular
/// combination of the power sums with leading entry -p_{ij}.
TruncSeries<MultiPoly> logdet_expansion(int n, int order);

/// Power sums recovered from the p_ij by solving the triangular system of
/// log-det coefficients, for all zdeg + ldeg <= maxdeg.  Keys are (zdeg, ldeg).
std::map<std::pair<int, int>, MultiPoly> power_sums_from_coeffs(int n, int maxdeg);

}  // namespace bcm::multisym
