#include "bcm/multisym.hpp"

namespace bcm::multisym {

UVPoly<MultiPoly> universal_multisym(int n) {
    VarSet vs = zl_vars(n);
    MultiPoly one = MultiPoly::constant(vs, Rational(1));
    UVPoly<MultiPoly> acc = UVPoly<MultiPoly>::term(0, 0, one);
    for (int i = 0; i < n; ++i) {
        MultiPoly z = MultiPoly::var(vs, i);
        MultiPoly l = MultiPoly::var(vs, n + i);
        UVPoly<MultiPoly> f;
        f.add(1, 1, one);
        f.add(1, 0, -l);
        f.add(0, 1, -z);
        f.add(0, 0, z * l - one);
        acc *= f;
    }
    return acc;
}

MultiPoly power_sum(int n, int zdeg, int ldeg) {
    VarSet vs = zl_vars(n);
    MultiPoly p(vs);
    for (int k = 0; k < n; ++k) {
        Monomial m(2 * n, 0);
        m[k] = zdeg;
        m[n + k] = ldeg;
        p.add_term(m, Rational(1));
    }
    return p;
}

std::vector<MultiPoly> elementary_row(int n, bool l_block) {
    VarSet vs = zl_vars(n);
    // product of (u - v_i) maintained as a coefficient list, low to high
    std::vector<MultiPoly> c{MultiPoly::constant(vs, Rational(1))};
    for (int i = 0; i < n; ++i) {
        MultiPoly vi = MultiPoly::var(vs, l_block ? n + i : i);
        std::vector<MultiPoly> nx(c.size() + 1, MultiPoly(vs));
        for (size_t k = 0; k < c.size(); ++k) {
            nx[k + 1] += c[k];
            nx[k] -= vi * c[k];
        }
        c = std::move(nx);
    }
    return c;
}

TruncSeries<MultiPoly> logdet_expansion(int n, int order) {
    MultiPoly one = MultiPoly::constant(zl_vars(n), Rational(1));
    TruncSeries<MultiPoly> ratio = expand_rational(
        universal_multisym(n), elementary_row(n, false), elementary_row(n, true), order, one);
    return series_log(ratio, one);
}

namespace {

Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace

std::map<std::pair<int, int>, MultiPoly> power_sums_from_coeffs(int n, int maxdeg) {
    // The log-det coefficient at u^{-i-1} v^{-j-1} equals
    //   -sum_{r=1}^{min(i,j)+1} (1/r) C(i,r-1) C(j,r-1) p_{i+1-r, j+1-r},
    // which is triangular in total degree with unit leading entry -p_{ij}.
    TruncSeries<MultiPoly> lg = logdet_expansion(n, maxdeg + 1);
    std::map<std::pair<int, int>, MultiPoly> ps;
    for (int d = 0; d <= maxdeg; ++d) {
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            MultiPoly rhs = -lg.at(i + 1, j + 1);
            for (int r = 2; r <= std::min(i, j) + 1; ++r) {
                Rational c = binom(i, r - 1) * binom(j, r - 1) / Rational(r);
                rhs -= ps.at({i + 1 - r, j + 1 - r}).scaled(c);
            }
            ps.emplace(std::make_pair(i, j), std::move(rhs));
        }
    }
    return ps;
}

}  // namespace bcm::multisym
