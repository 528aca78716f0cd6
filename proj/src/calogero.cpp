#include "bcm/calogero.hpp"

#include <stdexcept>

namespace bcm::calogero {

bool is_cm_point(const CMPoint& pt) {
    if (pt.Z.rows() != pt.n || pt.L.rows() != pt.n) return false;
    Matrix<Rational> c = pt.Z * pt.L - pt.L * pt.Z;
    for (int i = 0; i < pt.n; ++i) c(i, i) += Rational(1);
    return rank_exact(c) == 1;
}

CMPoint generic_cm_point(const std::vector<Rational>& lambda, const std::vector<Rational>& d) {
    int n = static_cast<int>(lambda.size());
    if (static_cast<int>(d.size()) != n) throw std::invalid_argument("parameter arity mismatch");
    CMPoint pt;
    pt.n = n;
    pt.Z = Matrix<Rational>(n, n);
    pt.L = Matrix<Rational>(n, n);
    for (int i = 0; i < n; ++i) {
        pt.L(i, i) = lambda[i];
        pt.Z(i, i) = d[i];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational diff = lambda[j] - lambda[i];
            if (diff.is_zero()) throw std::invalid_argument("lambda values must be distinct");
            pt.Z(i, j) = diff.inverse();
        }
    }
    return pt;
}

CMPoint conjugate(const CMPoint& pt, const Matrix<Rational>& g) {
    Matrix<Rational> gi = inverse_exact(g);
    CMPoint out;
    out.n = pt.n;
    out.Z = g * pt.Z * gi;
    out.L = g * pt.L * gi;
    return out;
}

UVPoly<Rational> cm_universal_poly(const CMPoint& pt) {
    int n = pt.n;
    using P = UVPoly<Rational>;
    Matrix<P> a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j).add(0, 0, -pt.L(i, j));
            b(i, j).add(0, 0, -pt.Z(i, j));
            if (i == j) {
                a(i, j).add(0, 1, Rational(1));
                b(i, j).add(1, 0, Rational(1));
            }
        }
    Matrix<P> m = a * b;
    for (int i = 0; i < n; ++i) m(i, i).add(0, 0, Rational(-1));
    return rdet(m);  // entries commute, so this is the determinant
}

TruncSeries<Rational> cm_psi(const CMPoint& pt, int order) {
    int n = pt.n;
    using S = TruncSeries<Rational>;
    Rational one(1);

    Matrix<Rational> lp = Matrix<Rational>::identity(n, one);
    Matrix<Rational> zp = Matrix<Rational>::identity(n, one);
    Matrix<S> av(n, n), bu(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            av(i, j) = S(order);
            bu(i, j) = S(order);
        }
    for (int k = 0; k + 1 <= order; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                av(i, j).add(0, k + 1, lp(i, j));
                bu(i, j).add(k + 1, 0, zp(i, j));
            }
        lp = lp * pt.L;
        zp = zp * pt.Z;
    }

    Matrix<S> p = av * bu;
    // det(1 - P) = exp(-sum_k tr(P^k)/k); entries of P^k sit at order >= k
    S logdet(order);
    Matrix<S> pk = p;
    for (int k = 1; k <= order; ++k) {
        logdet = logdet + scale(pk.trace(), Rational(-1) / Rational(k));
        if (k < order) pk = pk * p;
    }
    return series_exp(logdet, one);
}

TruncSeries<Rational> normalized_uv(const UVPoly<Rational>& p, int n, int order) {
    TruncSeries<Rational> s(order);
    for (auto& [uv, c] : p.coeffs()) {
        int i = n - uv.first, j = n - uv.second;
        if (i < 0 || j < 0) throw std::invalid_argument("degree exceeds the stated bound");
        if (i <= order && j <= order) s.add(i, j, c);
    }
    return s;
}

namespace {

TruncSeries<Rational> charpoly_series(const Matrix<Rational>& m, int order, bool in_u) {
    Poly1 cp = charpoly(m);
    int n = cp.deg();
    TruncSeries<Rational> s(order);
    for (int d = 0; d <= n; ++d) {
        int k = n - d;
        if (k <= order) s.add(in_u ? k : 0, in_u ? 0 : k, cp.coeff(d));
    }
    return s;
}

}  // namespace

TruncSeries<Rational> charpoly_u_series(const Matrix<Rational>& m, int order) {
    return charpoly_series(m, order, true);
}

TruncSeries<Rational> charpoly_v_series(const Matrix<Rational>& m, int order) {
    return charpoly_series(m, order, false);
}

}  // namespace bcm::calogero
