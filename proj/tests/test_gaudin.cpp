#include <doctest.h>

#include "bcm/gaudin.hpp"
#include "bcm/sampling.hpp"
#include "oracle_match.hpp"

using namespace bcm;
using namespace bcm::gaudin;

namespace {

V1Element random_v1(int n, Rng& rng) {
    VarSet vs = zl_vars(n);
    auto group = all_perms(n);
    V1Element v(n);
    for (int t = 0; t < 2; ++t) {
        MultiPoly p(vs);
        Monomial m(2 * n, 0);
        for (int s = 0; s < 3; ++s) m[rng.range(0, 2 * n - 1)] += 1;
        p.add_term(m, rng.small_rational());
        v.add(group[rng.range(0, static_cast<long long>(group.size()) - 1)], p);
    }
    return v;
}

cherednik::HElement random_h(int n, Rng& rng) {
    auto group = all_perms(n);
    cherednik::HElement h(n);
    for (int t = 0; t < 2; ++t) {
        std::vector<int> xe(n), ye(n);
        for (int i = 0; i < n; ++i) {
            xe[i] = static_cast<int>(rng.range(0, 2));
            ye[i] = static_cast<int>(rng.range(0, 2));
        }
        h += cherednik::HElement::monomial(n, xe, group[rng.range(0, static_cast<long long>(group.size()) - 1)],
                                           ye, rng.small_rational());
    }
    return h;
}

}  // namespace

TEST_CASE("closed-form action, one site") {
    V1Element v = V1Element::basis(1, Perm::identity(1));
    auto r = bethe_poly_apply(v);
    VarSet vs = zl_vars(1);
    MultiPoly z = MultiPoly::var(vs, 0), l = MultiPoly::var(vs, 1);
    MultiPoly one = MultiPoly::constant(vs, Rational(1));
    CHECK(r.coeff(1, 1) == v);
    CHECK(r.coeff(1, 0) == v.mul_poly(-l));
    CHECK(r.coeff(0, 1) == v.mul_poly(-z));
    CHECK(r.coeff(0, 0) == v.mul_poly(z * l - one));
}

TEST_CASE("top coefficient acts as the identity") {
    for (int n : {1, 2, 3}) {
        Rng rng(n * 100 + 7);
        V1Element v = random_v1(n, rng);
        CHECK(bethe_poly_apply(v).coeff(n, n) == v);
    }
}

TEST_CASE("action is linear over polynomial coefficients") {
    Rng rng(19);
    V1Element v = random_v1(2, rng);
    VarSet vs = zl_vars(2);
    MultiPoly p = MultiPoly::var(vs, 0) * MultiPoly::var(vs, 3) + MultiPoly::constant(vs, Rational(1, 2));
    auto lhs = bethe_poly_apply(v.mul_poly(p));
    auto rhs = bethe_poly_apply(v).map([&](const V1Element& e) { return e.mul_poly(p); });
    CHECK(lhs == rhs);
}

TEST_CASE("coefficient table columns reproduce the action on basis vectors") {
    int n = 2;
    auto bc = extract_bethe_coeffs(n);
    REQUIRE(bc.basis.size() == 2);
    for (int t = 0; t < 2; ++t) {
        auto img = bethe_poly_apply(V1Element::basis(n, bc.basis[t]));
        for (auto& [key, mat] : bc.b) {
            int ue = n - key.first, ve = n - key.second;
            V1Element col = img.coeff(ue, ve);
            for (int r = 0; r < 2; ++r) {
                auto it = col.terms().find(bc.basis[r]);
                MultiPoly got = (it == col.terms().end()) ? MultiPoly(zl_vars(n)) : it->second;
                CHECK(mat(r, t) == got);
            }
        }
    }
}

TEST_CASE("coefficient table, two sites: corner entries") {
    auto bc = extract_bethe_coeffs(2);
    VarSet vs = zl_vars(2);
    MultiPoly z1 = MultiPoly::var(vs, 0), z2 = MultiPoly::var(vs, 1);
    MultiPoly l1 = MultiPoly::var(vs, 2), l2 = MultiPoly::var(vs, 3);
    MultiPoly one = MultiPoly::constant(vs, Rational(1));
    Matrix<MultiPoly> id(2, 2);
    id(0, 0) = one;
    id(1, 1) = one;
    CHECK(bc.b.at({0, 0}) == id);
    CHECK(bc.b.at({1, 0}) == id.map([&](const MultiPoly& e) { return e * -(z1 + z2); }));
    CHECK(bc.b.at({0, 1}) == id.map([&](const MultiPoly& e) { return e * -(l1 + l2); }));
    CHECK(bc.b.at({2, 0}) == id.map([&](const MultiPoly& e) { return e * (z1 * z2); }));
    CHECK(bc.b.at({0, 2}) == id.map([&](const MultiPoly& e) { return e * (l1 * l2); }));
}

TEST_CASE("iota on displays and round trips") {
    VarSet vs = zl_vars(2);
    MultiPoly z1 = MultiPoly::var(vs, 0);
    MultiPoly l2 = MultiPoly::var(vs, 3);
    Perm s = Perm::transposition(2, 1, 2);

    V1Element v(2);
    v.add(Perm::identity(2), z1 * l2);
    CHECK(iota(v) == cherednik::HElement::xgen(2, 2) * cherednik::HElement::ygen(2, 1));

    V1Element vb = V1Element::basis(2, s);
    CHECK(iota(vb) == cherednik::HElement::group(2, s));

    Rng rng(77);
    for (int n : {2, 3}) {
        V1Element w = random_v1(n, rng);
        CHECK(iota_inv(iota(w)) == w);
        cherednik::HElement h = random_h(n, rng);
        CHECK(iota(iota_inv(h)) == h);
    }
}

TEST_CASE("iota intertwines the two side actions") {
    Rng rng(31);
    for (int n : {2, 3}) {
        auto group = all_perms(n);
        V1Element v = random_v1(n, rng);
        for (auto& sig : group) {
            CHECK(iota(act_left(sig, v)) == cherednik::HElement::group(n, sig) * iota(v));
            CHECK(iota(act_right(sig, v)) == iota(v) * cherednik::HElement::group(n, sig.inverse()));
        }
        // the two actions commute
        Perm a = group[rng.range(0, static_cast<long long>(group.size()) - 1)];
        Perm b = group[rng.range(0, static_cast<long long>(group.size()) - 1)];
        CHECK(act_left(a, act_right(b, v)) == act_right(b, act_left(a, v)));
    }
}

TEST_CASE("projection and its composition with iota") {
    VarSet vs = zl_vars(2);
    MultiPoly z2 = MultiPoly::var(vs, 1), l1 = MultiPoly::var(vs, 2);
    Perm s = Perm::transposition(2, 1, 2);
    V1Element v(2);
    v.add(Perm::identity(2), z2);
    v.add(s, l1);
    CHECK(projection_pr(v) == z2);

    using cherednik::HElement;
    HElement probe = HElement::xgen(2, 1) * HElement::ygen(2, 2) * cherednik::symmetrizer(2);
    CHECK(pr_iota_inv(probe) == l1 * z2);
}

TEST_CASE("main comparison holds on small sizes") {
    std::string why;
    CHECK(verify_ZB(1, 5, 4, &why));
    CHECK(verify_ZB(2, 5, 4, &why));
    CHECK(why.empty());
}

TEST_CASE("main comparison detects a corrupted table") {
    auto pz = cherednik::universal_central_poly(2);
    pz.add(0, 0, cherednik::HElement::one(2));
    std::string why;
    CHECK(!verify_ZB(2, 5, 2, &why, &pz));
    CHECK(!why.empty());
}

TEST_CASE("determinant construction, one site") {
    std::vector<Rational> z0{Rational(2)}, l0{Rational(5)};
    auto oo = rdet_oracle(1, z0, l0);
    REQUIRE(oo.full.coeff.size() == 2);
    CHECK(oo.w == Poly1{Rational(-2), Rational(1)});
    CHECK(oo.full.coeff[1](0, 0) == RatFunc(Poly1::constant(Rational(1))));
    // d-free part: -l - 1/(u - z)
    RatFunc want = RatFunc(Poly1::constant(Rational(-5))) -
                   RatFunc(Poly1::constant(Rational(1)), Poly1{Rational(-2), Rational(1)});
    CHECK(oo.full.coeff[0](0, 0) == want);
    CHECK(oo.weight.coeff[0] == oo.full.coeff[0]);
    CHECK(oo.weight_index == std::vector<int>{0});
}

TEST_CASE("field matrices act site by site") {
    std::vector<Rational> z0{Rational(1), Rational(3)};
    auto e11 = e_matrix(2, 1, 1, z0);
    RatFunc f1(Poly1::constant(Rational(1)), Poly1{Rational(-1), Rational(1)});
    RatFunc f2(Poly1::constant(Rational(1)), Poly1{Rational(-3), Rational(1)});
    // words in index order: (1,1), (1,2), (2,1), (2,2)
    CHECK(e11(0, 0) == f1 + f2);
    CHECK(e11(1, 1) == f1);
    CHECK(e11(2, 2) == f2);
    CHECK(e11(3, 3) == RatFunc());
    auto e21 = e_matrix(2, 2, 1, z0);
    CHECK(e21(2, 0) == f1);  // (1,1) -> (2,1) via site 1
    CHECK(e21(1, 0) == f2);  // (1,1) -> (1,2) via site 2
    CHECK(e21(3, 1) == f1);  // (1,2) -> (2,2) via site 1
    CHECK(e21(0, 0) == RatFunc());
}

TEST_CASE("determinant construction matches the displayed two-site operator") {
    std::vector<Rational> z0{Rational(1), Rational(3)};
    std::vector<Rational> l0{Rational(2), Rational(-1, 2)};
    auto oo = rdet_oracle(2, z0, l0);
    REQUIRE(oo.full.coeff.size() == 3);

    auto E11 = e_matrix(2, 1, 1, z0);
    auto E22 = e_matrix(2, 2, 2, z0);
    auto E12 = e_matrix(2, 1, 2, z0);
    auto E21 = e_matrix(2, 2, 1, z0);
    auto scalar = [&](const Rational& c) {
        return Matrix<RatFunc>::identity(4, RatFunc(Poly1::constant(Rational(1))))
            .map([&](const RatFunc& f) { return scale(f, c); });
    };
    auto dmat = [](const Matrix<RatFunc>& m) {
        return m.map([](const RatFunc& f) { return f.derivative(); });
    };

    Matrix<RatFunc> b1 = -(scalar(l0[0] + l0[1]) + E11 + E22);
    Matrix<RatFunc> b0 =
        (scalar(l0[0]) + E11) * (scalar(l0[1]) + E22) - E21 * E12 - dmat(E22);
    CHECK(oo.full.coeff[2] == scalar(Rational(1)));
    CHECK(oo.full.coeff[1] == b1);
    CHECK(oo.full.coeff[0] == b0);
}

TEST_CASE("determinant construction agrees with the symbolic table at a point") {
    auto bc = extract_bethe_coeffs(2);
    Rng rng(321);
    for (int t = 0; t < 3; ++t) {
        std::vector<Rational> z0 = distinct_rationals(2, rng);
        std::vector<Rational> l0 = distinct_rationals(2, rng);
        std::string why;
        CHECK_MESSAGE(testutil::oracle_matches_table(2, bc, z0, l0, &why), why);
    }
}

TEST_CASE("determinant construction rejects bad parameters") {
    std::vector<Rational> z0{Rational(1), Rational(1)};
    std::vector<Rational> l0{Rational(2), Rational(3)};
    CHECK_THROWS_AS(rdet_oracle(2, z0, l0), std::invalid_argument);
    CHECK_THROWS_AS(rdet_oracle(2, {Rational(1)}, l0), std::invalid_argument);
}
