#include "bcm/gaudin.hpp"

#include "bcm/sampling.hpp"
#include "bcm/symgroup.hpp"

#include <sstream>

namespace bcm::gaudin {

void V1Element::add(const Perm& tau, const MultiPoly& p) {
    if (p.is_zero()) return;
    if (n_ == 0) n_ = tau.size();
    auto [it, fresh] = terms_.try_emplace(tau, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

V1Element operator+(const V1Element& a, const V1Element& b) {
    V1Element r = a;
    if (r.n_ == 0) r.n_ = b.n_;
    for (auto& [t, p] : b.terms_) r.add(t, p);
    return r;
}

V1Element operator-(const V1Element& a, const V1Element& b) {
    V1Element r = a;
    if (r.n_ == 0) r.n_ = b.n_;
    for (auto& [t, p] : b.terms_) r.add(t, -p);
    return r;
}

V1Element V1Element::operator-() const {
    V1Element r(n_);
    for (auto& [t, p] : terms_) r.terms_[t] = -p;
    return r;
}

V1Element V1Element::mul_poly(const MultiPoly& p) const {
    V1Element r(n_);
    for (auto& [t, q] : terms_) r.add(t, q * p);
    return r;
}

std::string V1Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [t, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ") eps[";
        auto img = t.one_indexed();
        for (size_t i = 0; i < img.size(); ++i) os << (i ? "," : "") << img[i];
        os << "]";
    }
    return os.str();
}

UVPoly<V1Element> bethe_poly_apply(const V1Element& v) {
    int n = v.sites();
    UVPoly<V1Element> out;
    if (n == 0) return out;
    VarSet vs = zl_vars(n);
    MultiPoly one = MultiPoly::constant(vs, Rational(1));
    Rational pre(n % 2 == 0 ? 1 : -1);
    for (auto& [tau, ptau] : v.terms()) {
        Perm tinv = tau.inverse();
        for (const Perm& sig : all_perms(n)) {
            UVPoly<MultiPoly> prod = UVPoly<MultiPoly>::term(0, 0, one);
            for (int i : sig.fixed_points1()) {
                MultiPoly zk = MultiPoly::var(vs, tinv.map1(i) - 1);
                MultiPoly li = MultiPoly::var(vs, n + i - 1);
                UVPoly<MultiPoly> f;
                f.add(1, 1, -one);
                f.add(1, 0, li);
                f.add(0, 1, zk);
                f.add(0, 0, one - zk * li);
                prod *= f;
            }
            Rational c = pre * Rational(sig.sign());
            Perm target = sig * tau;
            for (auto& [uv, poly] : prod.coeffs()) {
                V1Element w(n);
                w.add(target, (poly * ptau).scaled(c));
                out.add(uv.first, uv.second, w);
            }
        }
    }
    return out;
}

BetheCoeffs extract_bethe_coeffs(int n) {
    BetheCoeffs bc;
    bc.n = n;
    bc.basis = all_perms(n);
    int m = static_cast<int>(bc.basis.size());
    VarSet vs = zl_vars(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            Matrix<MultiPoly> mat(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) mat(r, c) = MultiPoly(vs);
            bc.b.emplace(std::make_pair(i, j), std::move(mat));
        }
    for (int col = 0; col < m; ++col) {
        UVPoly<V1Element> img = bethe_poly_apply(V1Element::basis(n, bc.basis[col]));
        for (auto& [uv, w] : img.coeffs()) {
            auto key = std::make_pair(n - uv.first, n - uv.second);
            Matrix<MultiPoly>& mat = bc.b.at(key);
            for (auto& [rho, poly] : w.terms()) mat(perm_index(bc.basis, rho), col) = poly;
        }
    }
    return bc;
}

cherednik::HElement iota(const V1Element& v) {
    int n = v.sites();
    cherednik::HElement out(n);
    for (auto& [tau, p] : v.terms()) {
        for (auto& [mono, c] : p.terms()) {
            std::vector<int> ye(mono.begin(), mono.begin() + n);       // z -> y
            std::vector<int> xe(mono.begin() + n, mono.end());         // l -> x
            out += cherednik::HElement::monomial(n, std::move(xe), tau, std::move(ye), c);
        }
    }
    return out;
}

V1Element iota_inv(const cherednik::HElement& h) {
    int n = h.sites();
    V1Element out(n);
    VarSet vs = zl_vars(n);
    for (auto& [k, c] : h.terms()) {
        Monomial m(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            m[i] = k.y[i];
            m[n + i] = k.x[i];
        }
        MultiPoly p(vs);
        p.add_term(m, c);
        out.add(Perm{std::vector<int>(k.perm)}, p);
    }
    return out;
}

V1Element act_left(const Perm& sigma, const V1Element& v) {
    V1Element out(v.sites());
    for (auto& [tau, p] : v.terms()) out.add(sigma * tau, act(sigma, p, ActMode::LOnly));
    return out;
}

V1Element act_right(const Perm& sigma, const V1Element& v) {
    V1Element out(v.sites());
    Perm si = sigma.inverse();
    for (auto& [tau, p] : v.terms()) out.add(tau * si, act(sigma, p, ActMode::ZOnly));
    return out;
}

MultiPoly projection_pr(const V1Element& v) {
    int n = v.sites();
    auto it = v.terms().find(Perm::identity(n));
    if (it == v.terms().end()) return MultiPoly(zl_vars(n));
    return it->second;
}

MultiPoly pr_iota_inv(const cherednik::HElement& h) {
    Int fact = 1;
    for (int i = 2; i <= h.sites(); ++i) fact *= i;
    return projection_pr(iota_inv(h)).scaled(Rational(fact));
}

// ---------------------------------------------------------------------------
// Specialized differential-operator oracle.
// Coefficients are kept as num / w^k with w = prod (u - z_i), so every
// arithmetic step is polynomial; reduction to rational functions happens only
// at extraction time.

namespace {

struct WCtx {
    Poly1 w;
    Poly1 wd;  // w'
};

struct WFrac {
    Poly1 num;
    int k = 0;  // denominator power of w

    bool is_zero() const { return num.is_zero(); }
};

WFrac wf_add(const WFrac& a, const WFrac& b, const WCtx& ctx) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int k = std::max(a.k, b.k);
    Poly1 na = a.num, nb = b.num;
    for (int i = a.k; i < k; ++i) na *= ctx.w;
    for (int i = b.k; i < k; ++i) nb *= ctx.w;
    return WFrac{na + nb, k};
}

WFrac wf_mul(const WFrac& a, const WFrac& b) {
    if (a.is_zero() || b.is_zero()) return WFrac{};
    return WFrac{a.num * b.num, a.k + b.k};
}

WFrac wf_neg(const WFrac& a) { return WFrac{-a.num, a.k}; }

WFrac wf_deriv(const WFrac& a, const WCtx& ctx) {
    if (a.is_zero()) return a;
    if (a.k == 0) return WFrac{a.num.derivative(), 0};
    return WFrac{a.num.derivative() * ctx.w - a.num * ctx.wd.scaled(Rational(a.k)), a.k + 1};
}

RatFunc wf_to_ratfunc(const WFrac& a, const WCtx& ctx) {
    Poly1 den = Poly1::constant(Rational(1));
    for (int i = 0; i < a.k; ++i) den *= ctx.w;
    return RatFunc(a.num, den);
}

/// Row-sparse square matrix of WFrac entries on the full tensor space.
struct SpMat {
    int dim = 0;
    std::vector<std::map<int, WFrac>> rows;

    explicit SpMat(int d = 0) : dim(d), rows(d) {}

    static SpMat diag(int d, const WFrac& v) {
        SpMat m(d);
        if (!v.is_zero())
            for (int i = 0; i < d; ++i) m.rows[i][i] = v;
        return m;
    }

    void add_entry(int r, int c, const WFrac& v, const WCtx& ctx) {
        if (v.is_zero()) return;
        auto it = rows[r].find(c);
        if (it == rows[r].end()) rows[r][c] = v;
        else {
            it->second = wf_add(it->second, v, ctx);
            if (it->second.is_zero()) rows[r].erase(it);
        }
    }

    bool is_zero() const {
        for (auto& r : rows)
            if (!r.empty()) return false;
        return true;
    }
};

SpMat sp_add(const SpMat& a, const SpMat& b, const WCtx& ctx) {
    if (a.dim == 0) return b;
    if (b.dim == 0) return a;
    SpMat r = a;
    for (int i = 0; i < b.dim; ++i)
        for (auto& [j, v] : b.rows[i]) r.add_entry(i, j, v, ctx);
    return r;
}

SpMat sp_mul(const SpMat& a, const SpMat& b, const WCtx& ctx) {
    SpMat r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (auto& [k, av] : a.rows[i])
            for (auto& [j, bv] : b.rows[k]) r.add_entry(i, j, wf_mul(av, bv), ctx);
    return r;
}

SpMat sp_neg(const SpMat& a) {
    SpMat r = a;
    for (auto& row : r.rows)
        for (auto& [j, v] : row) v = wf_neg(v);
    return r;
}

SpMat sp_deriv(const SpMat& a, const WCtx& ctx) {
    SpMat r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (auto& [j, v] : a.rows[i]) {
            WFrac d = wf_deriv(v, ctx);
            if (!d.is_zero()) r.rows[i][j] = d;
        }
    return r;
}

Rational binom_r(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

/// Matrix-coefficient differential operator sum_k C_k d^k.  The shared
/// context pointer keeps the ring usable through the generic signed
/// row-determinant, which only sees +, -, *.
struct OpMat {
    std::vector<SpMat> c;  // index = power of d
    const WCtx* ctx = nullptr;

    bool is_zero() const {
        for (auto& m : c)
            if (!m.is_zero()) return false;
        return true;
    }

    friend OpMat operator+(const OpMat& a, const OpMat& b) {
        if (!a.ctx) return b;
        if (!b.ctx) return a;
        OpMat r;
        r.ctx = a.ctx;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t k = 0; k < r.c.size(); ++k) {
            SpMat s;
            if (k < a.c.size()) s = a.c[k];
            if (k < b.c.size()) s = sp_add(s, b.c[k], *a.ctx);
            r.c[k] = s;
        }
        return r;
    }

    friend OpMat operator-(const OpMat& a, const OpMat& b) {
        OpMat nb = b;
        for (auto& m : nb.c) m = sp_neg(m);
        return a + nb;
    }

    friend OpMat operator*(const OpMat& a, const OpMat& b) {
        if (!a.ctx || !b.ctx) return OpMat{};
        const WCtx& ctx = *a.ctx;
        OpMat r;
        r.ctx = a.ctx;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.resize(a.c.size() + b.c.size() - 1);
        for (size_t l = 0; l < b.c.size(); ++l) {
            SpMat der = b.c[l];  // m-th derivative of B_l, updated in the loop
            for (size_t m = 0; m + 1 <= a.c.size(); ++m) {
                for (size_t k = m; k < a.c.size(); ++k) {
                    Rational bin = binom_r(static_cast<int>(k), static_cast<int>(m));
                    if (bin.is_zero()) continue;
                    SpMat prod = sp_mul(a.c[k], der, ctx);
                    for (auto& row : prod.rows)
                        for (auto& [j, v] : row) v = WFrac{v.num.scaled(bin), v.k};
                    size_t tgt = k - m + l;
                    r.c[tgt] = sp_add(r.c[tgt], prod, ctx);
                }
                der = sp_deriv(der, ctx);
                if (der.is_zero()) break;
            }
        }
        return r;
    }
};

int word_index(const std::vector<int>& letters, int n) {
    int idx = 0;
    for (int l : letters) idx = idx * n + (l - 1);
    return idx;
}

}  // namespace

OracleOutput rdet_oracle(int n, const std::vector<Rational>& z0,
                         const std::vector<Rational>& l0) {
    if (static_cast<int>(z0.size()) != n || static_cast<int>(l0.size()) != n)
        throw std::invalid_argument("oracle parameter arity mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (z0[i] == z0[j]) throw std::invalid_argument("oracle needs distinct z values");

    WCtx ctx;
    ctx.w = Poly1::from_roots(z0);
    ctx.wd = ctx.w.derivative();
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= n;

    // E_kj(u): replace letter j by k at site i, weighted by 1/(u - z_i)
    std::vector<Poly1> cof(n);  // w / (u - z_i)
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> roots;
        for (int m = 0; m < n; ++m)
            if (m != i) roots.push_back(z0[m]);
        cof[i] = Poly1::from_roots(roots);
    }
    auto efield = [&](int k, int j) {
        SpMat m(dim);
        std::vector<int> word(n, 1);
        for (int idx = 0; idx < dim; ++idx) {
            for (int site = 0; site < n; ++site) {
                if (word[site] == j) {
                    std::vector<int> tgt = word;
                    tgt[site] = k;
                    m.add_entry(word_index(tgt, n), idx, WFrac{cof[site], 1}, ctx);
                }
            }
            for (int p = n - 1; p >= 0; --p) {
                if (++word[p] <= n) break;
                word[p] = 1;
            }
        }
        return m;
    };

    Matrix<OpMat> mat(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            OpMat e;
            e.ctx = &ctx;
            e.c.resize(2, SpMat(dim));
            if (j == k) {
                e.c[1] = SpMat::diag(dim, WFrac{Poly1::constant(Rational(1)), 0});
                e.c[0] = SpMat::diag(dim, WFrac{Poly1::constant(-l0[j]), 0});
            }
            e.c[0] = sp_add(e.c[0], sp_neg(efield(k + 1, j + 1)), ctx);
            mat(j, k) = e;
        }

    OpMat d = rdet(mat);
    while (!d.c.empty() && d.c.back().is_zero()) d.c.pop_back();
    if (static_cast<int>(d.c.size()) != n + 1)
        throw std::logic_error("oracle operator has unexpected order");

    OracleOutput out;
    out.w = ctx.w;
    out.full.order = n;
    out.weight.order = n;
    for (const Perm& tau : all_perms(n)) {
        std::vector<int> word(n);
        for (int pos = 0; pos < n; ++pos) word[pos] = tau.map1(pos + 1);
        out.weight_index.push_back(word_index(word, n));
    }
    std::vector<bool> in_weight(dim, false);
    for (int idx : out.weight_index) in_weight[idx] = true;

    int wn = static_cast<int>(out.weight_index.size());
    for (int k = 0; k <= n; ++k) {
        Matrix<RatFunc> fm(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (auto& [j, v] : d.c[k].rows[i]) fm(i, j) = wf_to_ratfunc(v, ctx);
        // content preservation: columns in the weight block stay in it
        for (int i = 0; i < dim; ++i)
            for (auto& [j, v] : d.c[k].rows[i])
                if (in_weight[j] && !in_weight[i] && !wf_to_ratfunc(v, ctx).is_zero())
                    throw std::domain_error("oracle operator leaks out of the weight block");
        Matrix<RatFunc> wm(wn, wn);
        for (int r = 0; r < wn; ++r)
            for (int c = 0; c < wn; ++c) wm(r, c) = fm(out.weight_index[r], out.weight_index[c]);
        out.full.coeff.push_back(std::move(fm));
        out.weight.coeff.push_back(std::move(wm));
    }
    return out;
}

Matrix<RatFunc> e_matrix(int n, int k, int j, const std::vector<Rational>& z0) {
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= n;
    Matrix<RatFunc> m(dim, dim);
    std::vector<int> word(n, 1);
    for (int idx = 0; idx < dim; ++idx) {
        for (int site = 0; site < n; ++site) {
            if (word[site] == j) {
                std::vector<int> tgt = word;
                tgt[site] = k;
                RatFunc f(Poly1::constant(Rational(1)), Poly1{{-z0[site], Rational(1)}});
                m(word_index(tgt, n), idx) = m(word_index(tgt, n), idx) + f;
            }
        }
        for (int p = n - 1; p >= 0; --p) {
            if (++word[p] <= n) break;
            word[p] = 1;
        }
    }
    return m;
}

bool verify_ZB(int n, std::uint64_t seed, int trials, std::string* first_failure,
               const UVPoly<cherednik::HElement>* central_override) {
    UVPoly<cherednik::HElement> pz =
        central_override ? *central_override : cherednik::universal_central_poly(n);
    VarSet vs = zl_vars(n);
    Rng rng(seed);
    std::vector<Perm> group = all_perms(n);

    std::vector<V1Element> samples;
    for (const Perm& tau : group) samples.push_back(V1Element::basis(n, tau));
    for (int t = 0; t < trials; ++t) {
        Monomial m(2 * n, 0);
        int d = static_cast<int>(rng.range(0, 4));
        for (int s = 0; s < d; ++s) m[rng.range(0, 2 * n - 1)] += 1;
        MultiPoly p(vs);
        p.add_term(m, rng.small_rational());
        V1Element v(n);
        v.add(group[rng.range(0, static_cast<long long>(group.size()) - 1)], p);
        samples.push_back(v);
    }

    for (size_t s = 0; s < samples.size(); ++s) {
        cherednik::HElement ih = iota(samples[s]);
        UVPoly<V1Element> lhs = bethe_poly_apply(samples[s]);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                cherednik::HElement want = iota(lhs.coeff(a, b));
                cherednik::HElement got = pz.coeff(a, b) * ih;
                if (want != got) {
                    if (first_failure && first_failure->empty())
                        *first_failure = "sample " + std::to_string(s) + " at u^" +
                                         std::to_string(a) + " v^" + std::to_string(b);
                    return false;
                }
            }
    }
    return true;
}

}  // namespace bcm::gaudin
