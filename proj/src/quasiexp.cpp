#include "bcm/quasiexp.hpp"

#include "bcm/calogero.hpp"
#include "bcm/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bcm::qexp {

namespace {

/// Rows 0..rows-1 of the derivative table: entry (j,i) is the polynomial
/// part of the j-th derivative of basis element i.
Matrix<Poly1> deriv_table(const QExpSpace& w, int rows) {
    int n = w.dim();
    Matrix<Poly1> t(rows, n);
    for (int i = 0; i < n; ++i) {
        Poly1 p = w.basis[i].q;
        for (int j = 0; j < rows; ++j) {
            t(j, i) = p;
            p = p.derivative() + p.scaled(w.basis[i].mu);
        }
    }
    return t;
}

Poly1 poly_det(const Matrix<Poly1>& m) { return rdet(m); }

}  // namespace

Poly1 wronskian(const QExpSpace& w) {
    int n = w.dim();
    if (n == 0) throw std::invalid_argument("empty family");
    for (auto& t : w.basis)
        if (t.q.is_zero()) throw std::invalid_argument("zero basis element");
    Poly1 d = poly_det(deriv_table(w, n));
    if (d.is_zero()) throw std::invalid_argument("linearly dependent family");
    return d.monic();
}

KernelOp kernel_operator(const QExpSpace& w) {
    int n = w.dim();
    if (n == 0) throw std::invalid_argument("empty family");
    Matrix<Poly1> full = deriv_table(w, n + 1);
    std::vector<Poly1> minors(n + 1);
    for (int skip = 0; skip <= n; ++skip) {
        Matrix<Poly1> m(n, n);
        int r = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == skip) continue;
            for (int i = 0; i < n; ++i) m(r, i) = full(j, i);
            ++r;
        }
        minors[skip] = poly_det(m);
    }
    if (minors[n].is_zero()) throw std::invalid_argument("linearly dependent family");
    KernelOp op;
    op.order = n;
    op.g.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        Poly1 num = minors[n - i];  // coefficient of v^{n-i} pairs with derivative order n-i
        if ((i % 2) != 0) num = -num;
        op.g[i] = RatFunc(num, minors[n]);
    }
    return op;
}

RatFunc apply_kernel(const KernelOp& op, const QExpTerm& f) {
    std::vector<Poly1> der(op.order + 1);
    der[0] = f.q;
    for (int j = 1; j <= op.order; ++j) der[j] = der[j - 1].derivative() + der[j - 1].scaled(f.mu);
    RatFunc acc;
    for (int i = 0; i <= op.order; ++i) acc = acc + op.g[i] * RatFunc(der[op.order - i]);
    return acc;
}

KernelOp compose_linear_right(const KernelOp& op, const Rational& mu) {
    KernelOp out;
    out.order = op.order + 1;
    out.g.resize(out.order + 1);
    RatFunc m(Poly1::constant(mu));
    for (int j = 0; j <= out.order; ++j) {
        RatFunc c;
        if (j <= op.order) c = c + op.g[j];
        if (j >= 1 && j - 1 <= op.order) c = c - m * op.g[j - 1];
        out.g[j] = c;
    }
    return out;
}

TruncSeries<Rational> qexp_psi(const QExpSpace& w, int order) {
    int n = w.dim();
    KernelOp op = kernel_operator(w);

    // 1 / prod (1 - mu_i / v) as a series in 1/v
    std::vector<Rational> den(order + 1);
    den[0] = Rational(1);
    int deg = 0;
    for (auto& t : w.basis) {
        for (int k = std::min(order, deg + 1); k >= 1; --k) den[k] = den[k] - t.mu * den[k - 1];
        deg = std::min(order, deg + 1);
    }
    std::vector<Rational> inv(order + 1);
    inv[0] = Rational(1);
    for (int k = 1; k <= order; ++k) {
        Rational s;
        for (int m = 1; m <= k; ++m) s += den[m] * inv[k - m];
        inv[k] = -s;
    }

    TruncSeries<Rational> out(order);
    for (int i = 0; i <= n; ++i) {
        std::vector<Rational> gu = expand_at_infinity(op.g[i], order);
        for (int a = 0; a <= order; ++a) {
            if (gu[a].is_zero()) continue;
            for (int b = i; b <= order; ++b) {
                Rational c = gu[a] * inv[b - i];
                if (!c.is_zero()) out.add(a, b, c);
            }
        }
    }
    return out;
}

Classification classify(const QExpSpace& w) {
    Classification cl;
    Poly1 full = wronskian(w);  // also validates independence
    cl.degree = full.deg();

    std::map<Rational, std::vector<int>> groups;
    for (int i = 0; i < w.dim(); ++i) groups[w.basis[i].mu].push_back(i);

    cl.is_generic = static_cast<int>(groups.size()) == w.dim();
    for (auto& t : w.basis)
        if (t.q.deg() != 1) cl.is_generic = false;

    cl.is_minimal = true;
    cl.is_canonical = true;
    for (auto& [mu, idx] : groups) {
        QExpSpace sub;
        for (int i : idx) sub.basis.push_back(w.basis[i]);
        SubspaceInfo info;
        info.exp = mu;
        info.dim = static_cast<int>(idx.size());
        info.wr = wronskian(sub);
        if (info.wr.deg() != info.dim) cl.is_canonical = false;

        // Does the span of the q_i contain a nonzero constant?  Equivalent to
        // a rank drop once the degree-zero column is removed.
        int maxdeg = 0;
        for (int i : idx) maxdeg = std::max(maxdeg, w.basis[i].q.deg());
        Matrix<Rational> m(static_cast<int>(idx.size()), std::max(maxdeg, 1));
        for (size_t r = 0; r < idx.size(); ++r)
            for (int d = 1; d <= maxdeg; ++d) m(static_cast<int>(r), d - 1) = w.basis[idx[r]].q.coeff(d);
        if (rank_exact(m) < static_cast<int>(idx.size())) cl.is_minimal = false;

        cl.subspaces.push_back(std::move(info));
    }
    return cl;
}

QExpSpace matched_space(const std::vector<Rational>& l0, const std::vector<Rational>& d) {
    int n = static_cast<int>(l0.size());
    if (static_cast<int>(d.size()) != n) throw std::invalid_argument("parameter arity mismatch");
    QExpSpace w;
    for (int i = 0; i < n; ++i) {
        Rational h = d[i];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational diff = l0[i] - l0[j];
            if (diff.is_zero()) throw std::invalid_argument("exponents must be distinct");
            h += diff.inverse();
        }
        w.basis.push_back(QExpTerm{Poly1{{-h, Rational(1)}}, l0[i]});
    }
    return w;
}

bool verify_wilson(const std::vector<Rational>& l0, const std::vector<Rational>& d, int order,
                   std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why && why->empty()) *why = msg;
        return false;
    };
    calogero::CMPoint pt = calogero::generic_cm_point(l0, d);
    if (!calogero::is_cm_point(pt)) return fail("rank-one condition fails");
    QExpSpace w = matched_space(l0, d);

    if (qexp_psi(w, order) != calogero::cm_psi(pt, order)) return fail("series mismatch");

    std::vector<Rational> exps;
    for (auto& t : w.basis) exps.push_back(t.mu);
    std::sort(exps.begin(), exps.end());
    if (Poly1::from_roots(exps) != charpoly(pt.L)) return fail("exponent spectrum mismatch");
    if (wronskian(w) != charpoly(pt.Z)) return fail("singular-point spectrum mismatch");
    return true;
}

}  // namespace bcm::qexp
