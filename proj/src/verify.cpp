#include "bcm/verify.hpp"

#include "bcm/calogero.hpp"
#include "bcm/cherednik.hpp"
#include "bcm/gaudin.hpp"
#include "bcm/multisym.hpp"
#include "bcm/quasiexp.hpp"
#include "bcm/sampling.hpp"

#include <sstream>
#include <stdexcept>

namespace bcm::verify {

namespace {

constexpr int kSeriesOrder = 8;

void record(SuiteResult& res, bool ok, const std::string& msg) {
    if (!ok && res.passed) {
        res.passed = false;
        res.first_failure = msg;
    }
}

std::string uv_tag(int a, int b) {
    std::ostringstream os;
    os << "u^" << a << " v^" << b;
    return os.str();
}

MultiPoly random_sample_poly(const VarSet& vs, int n, Rng& rng) {
    MultiPoly p(vs);
    for (int t = 0; t < 4; ++t) {
        Monomial m(2 * n, 0);
        int d = static_cast<int>(rng.range(0, 3));
        for (int s = 0; s < d; ++s) m[rng.range(0, 2 * n - 1)] += 1;
        p.add_term(m, rng.small_rational());
    }
    return p;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "zb", "satake", "wilson", "bethe-comm", "dunkl", "n2-golden", "multisym", "cm-identity"};
    return names;
}

SuiteResult run_zb(int n, std::uint64_t seed, int trials, bool inject_fault) {
    SuiteResult res{"zb", n, trials, true, ""};
    std::string ff;
    if (inject_fault) {
        UVPoly<cherednik::HElement> mutated = cherednik::universal_central_poly(n);
        mutated.add(0, 0, cherednik::HElement::one(n));
        res.passed = gaudin::verify_ZB(n, seed, trials, &ff, &mutated);
    } else {
        res.passed = gaudin::verify_ZB(n, seed, trials, &ff);
    }
    res.first_failure = ff;
    return res;
}

SuiteResult run_satake(int n, bool inject_fault) {
    SuiteResult res{"satake", n, 0, true, ""};
    UVPoly<cherednik::HElement> pz = cherednik::universal_central_poly(n);
    UVPoly<cherednik::HElement> pu = cherednik::spherical_poly(n);
    if (inject_fault) pu.add(0, 0, cherednik::HElement::one(n));
    cherednik::HElement e = cherednik::symmetrizer(n);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            record(res, pz.coeff(a, b) * e == pu.coeff(a, b), "coefficient at " + uv_tag(a, b));
    return res;
}

SuiteResult run_wilson(int n, std::uint64_t seed, int trials, bool inject_fault) {
    SuiteResult res{"wilson", n, trials, true, ""};
    Rng rng(seed);
    for (int t = 0; t < trials && res.passed; ++t) {
        std::vector<Rational> l0 = distinct_rationals(n, rng);
        std::vector<Rational> d;
        for (int i = 0; i < n; ++i) d.push_back(rng.small_rational());
        if (inject_fault) {
            calogero::CMPoint pt = calogero::generic_cm_point(l0, d);
            qexp::QExpSpace w = qexp::matched_space(l0, d);
            w.basis[0].q = w.basis[0].q + Poly1::constant(Rational(1));
            record(res, qexp::qexp_psi(w, kSeriesOrder) == calogero::cm_psi(pt, kSeriesOrder),
                   "trial " + std::to_string(t) + ": series mismatch");
        } else {
            std::string why;
            record(res, qexp::verify_wilson(l0, d, kSeriesOrder, &why),
                   "trial " + std::to_string(t) + ": " + why);
        }
    }
    return res;
}

SuiteResult run_bethe_comm(int n, std::uint64_t seed, int trials, bool inject_fault) {
    SuiteResult res{"bethe-comm", n, 0, true, ""};
    if (n > 4) throw std::invalid_argument("bethe-comm supports n <= 4");
    gaudin::BetheCoeffs bc = gaudin::extract_bethe_coeffs(n);
    std::vector<std::pair<int, int>> keys;
    std::vector<const Matrix<MultiPoly>*> mats;
    for (auto& [k, m] : bc.b) {
        keys.push_back(k);
        mats.push_back(&m);
    }

    if (n <= 3) {
        Matrix<MultiPoly> mutated;
        if (inject_fault) {
            mutated = *mats[1];
            mutated(0, 0) += MultiPoly::constant(zl_vars(n), Rational(1));
            mats[1] = &mutated;
        }
        for (size_t i = 0; i < mats.size() && res.passed; ++i)
            for (size_t j = i + 1; j < mats.size() && res.passed; ++j) {
                std::ostringstream os;
                os << "[b(" << keys[i].first << "," << keys[i].second << "), b(" << keys[j].first
                   << "," << keys[j].second << ")] != 0";
                record(res, *mats[i] * *mats[j] == *mats[j] * *mats[i], os.str());
            }
        return res;
    }

    // n == 4: random rational specializations, cleared to integer matrices
    res.trials = trials;
    Rng rng(seed);
    int m = static_cast<int>(bc.basis.size());
    for (int t = 0; t < trials && res.passed; ++t) {
        std::vector<Rational> vals = distinct_rationals(n, rng);
        std::vector<Rational> lv = distinct_rationals(n, rng);
        vals.insert(vals.end(), lv.begin(), lv.end());
        std::vector<Matrix<Int>> imats;
        for (auto* mp : mats) {
            Matrix<Rational> ev(m, m);
            Int den = 1;
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    ev(r, c) = (*mp)(r, c).evaluate(vals);
                    den = boost::multiprecision::lcm(den, ev(r, c).den());
                }
            Matrix<Int> im(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) im(r, c) = ev(r, c).num() * (den / ev(r, c).den());
            imats.push_back(std::move(im));
        }
        if (inject_fault) imats[1](0, 0) += 1;
        for (size_t i = 0; i < imats.size() && res.passed; ++i)
            for (size_t j = i + 1; j < imats.size() && res.passed; ++j) {
                std::ostringstream os;
                os << "trial " << t << ": [b(" << keys[i].first << "," << keys[i].second << "), b("
                   << keys[j].first << "," << keys[j].second << ")] != 0";
                record(res, imats[i] * imats[j] == imats[j] * imats[i], os.str());
            }
    }
    return res;
}

SuiteResult run_dunkl(int n, std::uint64_t seed, int trials, bool inject_fault) {
    SuiteResult res{"dunkl", n, trials, true, ""};
    std::string ff;
    record(res, cherednik::polyrep_check(n, seed, trials, inject_fault, &ff), "relations: " + ff);

    VarSet vs = zl_vars(n);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    cherednik::HElement e = cherednik::symmetrizer(n);
    for (int t = 0; t < trials && res.passed; ++t) {
        MultiPoly p = random_sample_poly(vs, n, rng);
        gaudin::V1Element v(n);
        v.add(Perm::identity(n), p);
        cherednik::HElement ae = gaudin::iota(v) * e;
        MultiPoly base = gaudin::pr_iota_inv(ae);
        for (int i = 1; i <= n; ++i) {
            MultiPoly lhs = gaudin::pr_iota_inv(cherednik::HElement::ygen(n, i) * ae);
            MultiPoly rhs = cherednik::dunkl_apply(i, base);
            record(res, lhs == rhs,
                   "intertwining: trial " + std::to_string(t) + ", i=" + std::to_string(i));
        }
    }
    return res;
}

SuiteResult run_n2_golden(bool inject_fault) {
    SuiteResult res{"n2-golden", 2, 0, true, ""};
    using cherednik::HElement;
    const int n = 2;
    HElement one = HElement::one(n);
    HElement x1 = HElement::xgen(n, 1), x2 = HElement::xgen(n, 2);
    HElement y1 = HElement::ygen(n, 1), y2 = HElement::ygen(n, 2);
    HElement s = HElement::sgen(n, 1, 2);

    // central polynomial, every displayed coefficient
    UVPoly<HElement> pz = cherednik::universal_central_poly(n);
    UVPoly<HElement> expected;
    expected.add(2, 2, one);
    expected.add(1, 2, -(y1 + y2));
    expected.add(2, 1, -(x1 + x2));
    expected.add(0, 2, y1 * y2);
    expected.add(2, 0, x1 * x2);
    expected.add(1, 1, (x1 + x2) * (y1 + y2) - one.scaled(Rational(2)));
    expected.add(0, 1, -((x1 + x2) * y1 * y2 - (y1 + y2)));
    expected.add(1, 0, -(x1 * x2 * (y1 + y2) - (x1 + x2)));
    expected.add(0, 0, one + x1 * x2 * y1 * y2 - x1 * y1 - x2 * y2 - s);
    if (inject_fault) expected.add(0, 0, one);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            record(res, pz.coeff(a, b) == expected.coeff(a, b),
                   "central table at " + uv_tag(a, b));

    // generators and the defining relation of the rank-2 presentation
    HElement T = x1 * y1 + x2 * y2 + s;
    HElement g1 = x1 + x2, g2 = y1 + y2, h1 = x1 * x2, h2 = y1 * y2;
    record(res, cherednik::is_central(T), "T not central");
    HElement rel = T * T - g1 * g2 * T + (g1 * g1 - h1.scaled(Rational(2))) * h2 +
                   (g2 * g2 - h2.scaled(Rational(2))) * h1 - one;
    record(res, rel.is_zero(), "presentation relation");

    // operator-coefficient table in the eps basis
    VarSet vs = zl_vars(n);
    MultiPoly z1 = MultiPoly::var(vs, 0), z2 = MultiPoly::var(vs, 1);
    MultiPoly l1 = MultiPoly::var(vs, 2), l2 = MultiPoly::var(vs, 3);
    MultiPoly p1 = MultiPoly::constant(vs, Rational(1));
    auto diag = [&](const MultiPoly& p) {
        Matrix<MultiPoly> m(2, 2);
        m(0, 0) = p;
        m(1, 1) = p;
        m(0, 1) = MultiPoly(vs);
        m(1, 0) = MultiPoly(vs);
        return m;
    };
    gaudin::BetheCoeffs bc = gaudin::extract_bethe_coeffs(n);
    std::map<std::pair<int, int>, Matrix<MultiPoly>> want;
    want[{0, 0}] = diag(p1);
    want[{1, 0}] = diag(-(z1 + z2));
    want[{2, 0}] = diag(z1 * z2);
    want[{0, 1}] = diag(-(l1 + l2));
    want[{1, 1}] = diag((l1 + l2) * (z1 + z2) - p1.scaled(Rational(2)));
    want[{2, 1}] = diag(z1 + z2 - (l1 + l2) * z1 * z2);
    want[{0, 2}] = diag(l1 * l2);
    want[{1, 2}] = diag(l1 + l2 - l1 * l2 * (z1 + z2));
    Matrix<MultiPoly> b22 = diag(p1 + l1 * l2 * z1 * z2);
    b22(0, 0) -= l1 * z1 + l2 * z2;
    b22(1, 1) -= l1 * z2 + l2 * z1;
    b22(0, 1) = -p1;
    b22(1, 0) = -p1;
    want[{2, 2}] = b22;
    for (auto& [k, m] : want) {
        std::ostringstream os;
        os << "operator table at b(" << k.first << "," << k.second << ")";
        record(res, bc.b.at(k) == m, os.str());
    }
    // the remaining v-degree-2 column of the table is zero off the listed keys
    for (auto& [k, m] : bc.b)
        if (!want.count(k)) record(res, m.is_zero(), "unexpected nonzero operator coefficient");

    // matrix-pair polynomial at three fixed points, against the trace/det form
    Rng rng(0xC0FFEE);
    for (int t = 0; t < 3; ++t) {
        std::vector<Rational> lam = distinct_rationals(n, rng);
        std::vector<Rational> d{rng.small_rational(), rng.small_rational()};
        calogero::CMPoint pt = calogero::generic_cm_point(lam, d);
        Rational trL = pt.L.trace(), trZ = pt.Z.trace();
        Rational detL = det_exact(pt.L), detZ = det_exact(pt.Z);
        Rational trLZ = (pt.L * pt.Z).trace();
        UVPoly<Rational> pcw;
        pcw.add(2, 2, Rational(1));
        pcw.add(1, 2, -trZ);
        pcw.add(2, 1, -trL);
        pcw.add(0, 2, detZ);
        pcw.add(2, 0, detL);
        pcw.add(1, 1, trL * trZ - Rational(2));
        pcw.add(0, 1, -(trL * detZ - trZ));
        pcw.add(1, 0, -(detL * trZ - trL));
        pcw.add(0, 0, Rational(1) + detL * detZ - trLZ);
        record(res, calogero::cm_universal_poly(pt) == pcw,
               "matrix-pair polynomial, point " + std::to_string(t));
        // same generator relation on the trace/det side
        Rational cm_rel = trLZ * trLZ - trL * trZ * trLZ + (trL * trL - detL * Rational(2)) * detZ +
                          (trZ * trZ - detZ * Rational(2)) * detL - Rational(1);
        record(res, cm_rel.is_zero(), "trace relation, point " + std::to_string(t));
    }
    return res;
}

SuiteResult run_multisym(int n, bool inject_fault) {
    SuiteResult res{"multisym", n, 0, true, ""};
    auto ps = multisym::power_sums_from_coeffs(n, 3);
    if (inject_fault) ps.at({0, 0}) += MultiPoly::constant(zl_vars(n), Rational(1));
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l + k <= 3; ++l) {
            auto it = ps.find({k, l});
            if (it == ps.end()) {
                record(res, false, "missing power sum (" + std::to_string(k) + "," + std::to_string(l) + ")");
                continue;
            }
            record(res, it->second == multisym::power_sum(n, k, l),
                   "power sum (" + std::to_string(k) + "," + std::to_string(l) + ")");
        }
    return res;
}

SuiteResult run_cm_identity(int n, std::uint64_t seed, int trials, bool inject_fault) {
    SuiteResult res{"cm-identity", n, trials, true, ""};
    Rng rng(seed);
    Rational one(1);
    for (int t = 0; t < trials && res.passed; ++t) {
        std::vector<Rational> lam = distinct_rationals(n, rng);
        std::vector<Rational> d;
        for (int i = 0; i < n; ++i) d.push_back(rng.small_rational());
        calogero::CMPoint pt = calogero::generic_cm_point(lam, d);
        std::string tag = "trial " + std::to_string(t) + ": ";
        record(res, calogero::is_cm_point(pt), tag + "rank-one condition");
        if (!res.passed) break;

        UVPoly<Rational> pc = calogero::cm_universal_poly(pt);
        TruncSeries<Rational> psi = calogero::cm_psi(pt, kSeriesOrder);
        TruncSeries<Rational> quot = psi;
        if (inject_fault) quot.add(1, 1, one);
        quot = quot * calogero::charpoly_u_series(pt.Z, kSeriesOrder) *
               calogero::charpoly_v_series(pt.L, kSeriesOrder);
        record(res, quot == calogero::normalized_uv(pc, n, kSeriesOrder),
               tag + "series-polynomial factorization");

        Matrix<Rational> g = Matrix<Rational>::identity(n, one);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g(i, j) = rng.small_rational();
        Matrix<Rational> h = Matrix<Rational>::identity(n, one);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) h(i, j) = rng.small_rational();
        calogero::CMPoint pt2 = calogero::conjugate(pt, g * h);
        record(res, calogero::is_cm_point(pt2), tag + "conjugated rank-one condition");
        record(res, calogero::cm_universal_poly(pt2) == pc, tag + "conjugation invariance of the polynomial");
        record(res, calogero::cm_psi(pt2, kSeriesOrder) == psi, tag + "conjugation invariance of the series");
    }
    return res;
}

SuiteResult run_suite(const std::string& name, int n, std::uint64_t seed, int trials,
                      bool inject_fault) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (name == "zb") return run_zb(n, seed, trials, inject_fault);
    if (name == "satake") return run_satake(n, inject_fault);
    if (name == "wilson") return run_wilson(n, seed, trials, inject_fault);
    if (name == "bethe-comm") return run_bethe_comm(n, seed, trials, inject_fault);
    if (name == "dunkl") return run_dunkl(n, seed, trials, inject_fault);
    if (name == "n2-golden") return run_n2_golden(inject_fault);
    if (name == "multisym") return run_multisym(n, inject_fault);
    if (name == "cm-identity") return run_cm_identity(n, seed, trials, inject_fault);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace bcm::verify
