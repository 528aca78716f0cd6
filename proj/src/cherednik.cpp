#include "bcm/cherednik.hpp"

#include "bcm/matrix.hpp"
#include "bcm/sampling.hpp"
#include "bcm/symgroup.hpp"

#include <sstream>

namespace bcm::cherednik {

HElement HElement::one(int n) {
    return monomial(n, std::vector<int>(n, 0), Perm::identity(n), std::vector<int>(n, 0),
                    Rational(1));
}

HElement HElement::xgen(int n, int i) {
    std::vector<int> x(n, 0);
    x[i - 1] = 1;
    return monomial(n, std::move(x), Perm::identity(n), std::vector<int>(n, 0), Rational(1));
}

HElement HElement::ygen(int n, int i) {
    std::vector<int> y(n, 0);
    y[i - 1] = 1;
    return monomial(n, std::vector<int>(n, 0), Perm::identity(n), std::move(y), Rational(1));
}

HElement HElement::sgen(int n, int i, int j) {
    return group(n, Perm::transposition(n, i, j));
}

HElement HElement::group(int n, const Perm& p) {
    return monomial(n, std::vector<int>(n, 0), p, std::vector<int>(n, 0), Rational(1));
}

HElement HElement::monomial(int n, std::vector<int> xexp, const Perm& p, std::vector<int> yexp,
                            const Rational& c) {
    HElement h(n);
    h.add_term(HKey{std::move(xexp), p.raw(), std::move(yexp)}, c);
    return h;
}

void HElement::add_term(const HKey& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

int merged_sites(const HElement& a, const HElement& b) {
    if (a.sites() == 0) return b.sites();
    if (b.sites() == 0) return a.sites();
    if (a.sites() != b.sites()) throw std::invalid_argument("site-count mismatch");
    return a.sites();
}

}  // namespace

HElement operator+(const HElement& a, const HElement& b) {
    HElement r(merged_sites(a, b));
    for (auto& [k, c] : a.terms()) r.add_term(k, c);
    for (auto& [k, c] : b.terms()) r.add_term(k, c);
    return r;
}

HElement operator-(const HElement& a, const HElement& b) {
    HElement r(merged_sites(a, b));
    for (auto& [k, c] : a.terms()) r.add_term(k, c);
    for (auto& [k, c] : b.terms()) r.add_term(k, -c);
    return r;
}

HElement HElement::operator-() const {
    HElement r(n_);
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

HElement HElement::scaled(const Rational& c) const {
    HElement r(n_);
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

int HElement::filtration_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) {
        int t = 0;
        for (int e : k.x) t += e;
        for (int e : k.y) t += e;
        d = std::max(d, t);
    }
    return d;
}

HElement HElement::top_part() const {
    int d = filtration_degree();
    HElement r(n_);
    for (auto& [k, c] : terms_) {
        int t = 0;
        for (int e : k.x) t += e;
        for (int e : k.y) t += e;
        if (t == d) r.terms_[k] = c;
    }
    return r;
}

std::string HElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < k.x.size(); ++i)
            if (k.x[i] > 0) {
                os << " x" << i + 1;
                if (k.x[i] > 1) os << "^" << k.x[i];
            }
        Perm p{std::vector<int>(k.perm)};
        if (!p.is_identity()) {
            os << " [";
            for (size_t i = 0; i < k.perm.size(); ++i) os << (i ? "," : "") << k.perm[i] + 1;
            os << "]";
        }
        for (size_t i = 0; i < k.y.size(); ++i)
            if (k.y[i] > 0) {
                os << " y" << i + 1;
                if (k.y[i] > 1) os << "^" << k.y[i];
            }
    }
    return os.str();
}

namespace {

std::vector<int> swapped(std::vector<int> v, int a, int b) {
    std::swap(v[a], v[b]);
    return v;
}

/// y^p * x_i rewritten to normal form; terms carry at most one x letter.
HElement ymono_times_x(int n, const std::vector<int>& p, int i1) {
    int j0 = -1;
    for (int k = 0; k < n; ++k)
        if (p[k] > 0) { j0 = k; break; }
    if (j0 < 0) return HElement::xgen(n, i1);
    std::vector<int> pt = p;
    pt[j0] -= 1;
    HElement rec = ymono_times_x(n, pt, i1);
    HElement out(n);
    for (auto& [k, c] : rec.terms()) {  // append y_{j0+1} on the right
        HKey nk = k;
        nk.y[j0] += 1;
        out.add_term(nk, c);
    }
    int i0 = i1 - 1;
    std::vector<int> zero(n, 0);
    if (i0 == j0) {
        for (int a = 0; a < n; ++a) {
            if (a == i0) continue;
            Perm s = Perm::transposition(n, i1, a + 1);
            out.add_term(HKey{zero, s.raw(), swapped(pt, i0, a)}, Rational(1));
        }
    } else {
        Perm s = Perm::transposition(n, i1, j0 + 1);
        out.add_term(HKey{zero, s.raw(), swapped(pt, i0, j0)}, Rational(-1));
    }
    return out;
}

HElement mul_by_x(const HElement& a, int i1) {
    int n = a.sites();
    HElement out(n);
    for (auto& [k, c] : a.terms()) {
        Perm sig{std::vector<int>(k.perm)};
        // x_i crosses the group part: sigma x_i = x_{sigma(i)} sigma
        HElement w = ymono_times_x(n, k.y, i1);
        for (auto& [kw, cw] : w.terms()) {
            HKey nk;
            nk.x = k.x;
            for (int m = 0; m < n; ++m) nk.x[sig.map0(m)] += kw.x[m];
            nk.perm = (sig * Perm{std::vector<int>(kw.perm)}).raw();
            nk.y = kw.y;
            out.add_term(nk, c * cw);
        }
    }
    return out;
}

HElement mul_by_perm(const HElement& a, const Perm& tau) {
    int n = a.sites();
    HElement out(n);
    for (auto& [k, c] : a.terms()) {
        HKey nk;
        nk.x = k.x;
        nk.perm = (Perm{std::vector<int>(k.perm)} * tau).raw();
        nk.y.resize(n);
        for (int m = 0; m < n; ++m) nk.y[m] = k.y[tau.map0(m)];
        out.add_term(nk, c);
    }
    return out;
}

}  // namespace

HElement operator*(const HElement& a, const HElement& b) {
    int n = merged_sites(a, b);
    HElement out(n);
    if (a.is_zero() || b.is_zero()) return out;
    for (auto& [k, c] : b.terms()) {
        HElement cur = a;
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < k.x[i - 1]; ++rep) cur = mul_by_x(cur, i);
        Perm tau{std::vector<int>(k.perm)};
        if (!tau.is_identity()) cur = mul_by_perm(cur, tau);
        for (auto& [kc, cc] : cur.terms()) {
            HKey nk = kc;
            for (int m = 0; m < n; ++m) nk.y[m] += k.y[m];
            out.add_term(nk, cc * c);
        }
    }
    return out;
}

UVPoly<HElement> universal_central_poly(int n) {
    VarSet xy = xy_vars(n);
    MultiPoly one = MultiPoly::constant(xy, Rational(1));
    UVPoly<HElement> out;
    for (const Perm& sig : all_perms(n)) {
        UVPoly<MultiPoly> prod = UVPoly<MultiPoly>::term(0, 0, one);
        for (int i : sig.fixed_points1()) {
            MultiPoly xi = MultiPoly::var(xy, i - 1);
            MultiPoly yi = MultiPoly::var(xy, n + i - 1);
            UVPoly<MultiPoly> f;
            f.add(1, 1, -one);
            f.add(0, 1, yi);
            f.add(1, 0, xi);
            f.add(0, 0, one - xi * yi);
            prod *= f;
        }
        Rational pre((n % 2 == 0 ? 1 : -1) * sig.sign());
        for (auto& [uv, poly] : prod.coeffs()) {
            HElement h(n);
            for (auto& [m, c] : poly.terms()) {
                std::vector<int> xe(m.begin(), m.begin() + n);
                std::vector<int> ye(m.begin() + n, m.end());
                h.add_term(HKey{std::move(xe), sig.raw(), std::move(ye)}, c * pre);
            }
            out.add(uv.first, uv.second, h);
        }
    }
    return out;
}

bool is_central(const HElement& a) {
    int n = a.sites();
    if (n == 0) return true;
    for (int i = 1; i <= n; ++i) {
        if (!commutator(a, HElement::xgen(n, i)).is_zero()) return false;
        if (!commutator(a, HElement::ygen(n, i)).is_zero()) return false;
    }
    for (int i = 1; i < n; ++i)
        if (!commutator(a, HElement::sgen(n, i, i + 1)).is_zero()) return false;
    return true;
}

HElement symmetrizer(int n) {
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Rational c(Int(1), fact);
    HElement e(n);
    for (const Perm& s : all_perms(n)) e += HElement::group(n, s).scaled(c);
    return e;
}

namespace {

/// Formal word in the letters x_i (+i) and y_i (-i), free multiplication.
struct FreeElem {
    std::map<std::vector<int>, Rational> w;

    friend FreeElem operator+(const FreeElem& a, const FreeElem& b) {
        FreeElem r = a;
        for (auto& [k, c] : b.w) {
            auto [it, fresh] = r.w.try_emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.w.erase(it);
            }
        }
        return r;
    }
    friend FreeElem operator-(const FreeElem& a, const FreeElem& b) { return a + (-b); }
    FreeElem operator-() const {
        FreeElem r;
        for (auto& [k, c] : w) r.w[k] = -c;
        return r;
    }
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b) {
        FreeElem r;
        for (auto& [ka, ca] : a.w)
            for (auto& [kb, cb] : b.w) {
                std::vector<int> k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                auto [it, fresh] = r.w.try_emplace(std::move(k), ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.w.erase(it);
                }
            }
        return r;
    }
    friend bool operator==(const FreeElem& a, const FreeElem& b) { return a.w == b.w; }

    static FreeElem letters(std::vector<int> ls, const Rational& c) {
        FreeElem f;
        if (!c.is_zero()) f.w[std::move(ls)] = c;
        return f;
    }
};

}  // namespace

UVPoly<HElement> spherical_poly(int n) {
    Matrix<UVPoly<FreeElem>> m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            UVPoly<FreeElem> e;
            if (j == k) {
                // (v - x_j)(u - y_j): expanded in the free ring
                e.add(1, 1, FreeElem::letters({}, Rational(1)));
                e.add(0, 1, FreeElem::letters({-(j + 1)}, Rational(-1)));
                e.add(1, 0, FreeElem::letters({j + 1}, Rational(-1)));
                e.add(0, 0, FreeElem::letters({j + 1, -(j + 1)}, Rational(1)));
            }
            e.add(0, 0, FreeElem::letters({}, Rational(-1)));
            m(j, k) = e;
        }
    UVPoly<FreeElem> rd = rdet(m);

    HElement e = symmetrizer(n);
    UVPoly<HElement> out;
    for (auto& [uv, fe] : rd.coeffs()) {
        HElement h(n);
        for (auto& [word, c] : fe.w) {
            std::vector<int> xe(n, 0), ye(n, 0);
            for (int letter : word) {
                if (letter > 0) xe[letter - 1] += 1;
                else ye[-letter - 1] += 1;
            }
            h.add_term(HKey{std::move(xe), Perm::identity(n).raw(), std::move(ye)}, c);
        }
        out.add(uv.first, uv.second, h * e);
    }
    return out;
}

namespace {

HElement alpha_product(const HElement& a, const HElement& b) {
    int n = merged_sites(a, b);
    HElement out(n);
    for (auto& [k1, c1] : a.terms())
        for (auto& [k2, c2] : b.terms()) {
            Perm s2{std::vector<int>(k2.perm)};
            HKey nk;
            nk.x.resize(n);
            nk.y.resize(n);
            for (int m = 0; m < n; ++m) {
                nk.x[m] = k1.x[m] + k2.x[m];
                nk.y[m] = k1.y[s2.map0(m)] + k2.y[m];
            }
            nk.perm = (Perm{std::vector<int>(k1.perm)} * s2).raw();
            out.add_term(nk, c1 * c2);
        }
    return out;
}

}  // namespace

bool alpha_commutes(const HElement& a, const HElement& b) {
    if (!is_central(a) || !is_central(b))
        throw std::invalid_argument("alpha commutation requires central inputs");
    return alpha_product(a, b) == alpha_product(b, a);
}

MultiPoly project_top_to_zl(const HElement& a) {
    int n = a.sites();
    VarSet vs = zl_vars(n);
    MultiPoly out(vs);
    HElement top = a.top_part();
    for (auto& [k, c] : top.terms()) {
        Perm p{std::vector<int>(k.perm)};
        if (!p.is_identity())
            throw std::domain_error("non-identity group element at top filtration degree");
        Monomial m(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            m[i] = k.y[i];      // y -> z
            m[n + i] = k.x[i];  // x -> l
        }
        out.add_term(m, c);
    }
    return out;
}

MultiPoly dunkl_apply(int i, const MultiPoly& p) {
    if (p.is_zero()) return p;
    int n = static_cast<int>(p.vars()->size()) / 2;
    MultiPoly zi = MultiPoly::var(p.vars(), i - 1);
    MultiPoly out = zi * p;
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        Perm s = Perm::transposition(n, i, j);
        MultiPoly diff = p - act(s, p, ActMode::LOnly);
        MultiPoly quot = divide_linear(diff, n + i - 1, n + j - 1);
        out += act(s, quot, ActMode::ZOnly);
    }
    return out;
}

namespace {

MultiPoly dunkl_perturbed(int i, const MultiPoly& p, bool drop_z1) {
    if (!(drop_z1 && i == 1)) return dunkl_apply(i, p);
    MultiPoly zi = MultiPoly::var(p.vars(), i - 1);
    return dunkl_apply(i, p) - zi * p;
}

MultiPoly random_poly(const VarSet& vs, Rng& rng) {
    MultiPoly p(vs);
    int nv = static_cast<int>(vs->size());
    for (int t = 0; t < 4; ++t) {
        Monomial m(nv, 0);
        int d = static_cast<int>(rng.range(0, 3));
        for (int s = 0; s < d; ++s) m[rng.range(0, nv - 1)] += 1;
        p.add_term(m, rng.small_rational());
    }
    return p;
}

}  // namespace

bool polyrep_check(int n, std::uint64_t seed, int trials, bool perturb_control,
                   std::string* first_failure) {
    VarSet vs = zl_vars(n);
    Rng rng(seed);
    auto X = [&](int i, const MultiPoly& p) { return MultiPoly::var(vs, n + i - 1) * p; };
    auto Y = [&](int i, const MultiPoly& p) { return dunkl_perturbed(i, p, perturb_control); };
    auto S = [&](int i, int j, const MultiPoly& p) {
        return act(Perm::transposition(n, i, j), p, ActMode::Both);
    };
    auto fail = [&](const std::string& what, int sample) {
        if (first_failure && first_failure->empty())
            *first_failure = what + " (sample " + std::to_string(sample) + ")";
        return false;
    };

    for (int t = 0; t < trials; ++t) {
        MultiPoly p = random_poly(vs, rng);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if (X(i, Y(j, p)) - Y(j, X(i, p)) != S(i, j, p))
                    return fail("[x" + std::to_string(i) + ",y" + std::to_string(j) + "] = s", t);
                if (i < j) {
                    if (Y(i, Y(j, p)) != Y(j, Y(i, p)))
                        return fail("[y" + std::to_string(i) + ",y" + std::to_string(j) + "] = 0", t);
                    if (S(i, j, X(i, p)) != X(j, S(i, j, p)))
                        return fail("s x_i = x_j s", t);
                    if (S(i, j, Y(i, p)) != Y(j, S(i, j, p)))
                        return fail("s y_i = y_j s", t);
                    for (int k = 1; k <= n; ++k) {
                        if (k == i || k == j) continue;
                        if (S(i, j, X(k, p)) != X(k, S(i, j, p)))
                            return fail("[s_ij, x_k] = 0", t);
                        if (S(i, j, Y(k, p)) != Y(k, S(i, j, p)))
                            return fail("[s_ij, y_k] = 0", t);
                    }
                }
            }
        for (int i = 1; i <= n; ++i) {
            MultiPoly lhs = X(i, Y(i, p)) - Y(i, X(i, p));
            MultiPoly rhs(vs);
            for (int a = 1; a <= n; ++a)
                if (a != i) rhs -= S(i, a, p);
            if (lhs != rhs) return fail("[x_i,y_i] = -sum s_ia at i=" + std::to_string(i), t);
        }
        for (int i = 1; i < n; ++i) {
            if (S(i, i + 1, S(i, i + 1, p)) != p) return fail("s^2 = 1", t);
            if (i + 2 <= n) {
                int j = i + 1, k = i + 2;
                if (S(i, j, S(j, k, p)) != S(i, k, S(i, j, p)))
                    return fail("s_ij s_jk = s_ik s_ij", t);
            }
        }
    }
    return true;
}

}  // namespace bcm::cherednik
