#include <doctest.h>

#include "bcm/calogero.hpp"
#include "bcm/sampling.hpp"
#include "bcm/univar.hpp"

using namespace bcm;
using namespace bcm::calogero;

namespace {

Matrix<Rational> m2(Rational a, Rational b, Rational c, Rational d) {
    Matrix<Rational> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("rank-one condition") {
    for (int n : {1, 2, 3}) {
        Rng rng(n * 10 + 1);
        auto lam = distinct_rationals(n, rng);
        std::vector<Rational> d;
        for (int i = 0; i < n; ++i) d.push_back(rng.small_rational());
        CHECK(is_cm_point(generic_cm_point(lam, d)));
    }
    // commuting pair: [Z,L] + 1 has full rank for n >= 2
    CMPoint bad;
    bad.n = 2;
    bad.Z = Matrix<Rational>::identity(2, Rational(1));
    bad.L = Matrix<Rational>::identity(2, Rational(1));
    CHECK(!is_cm_point(bad));
    // every 1x1 pair qualifies
    CMPoint one;
    one.n = 1;
    one.Z = Matrix<Rational>(1, 1);
    one.L = Matrix<Rational>(1, 1);
    one.Z(0, 0) = Rational(7);
    one.L(0, 0) = Rational(-2);
    CHECK(is_cm_point(one));
}

TEST_CASE("generic point layout") {
    CMPoint pt = generic_cm_point({Rational(1), Rational(2)}, {Rational(3), Rational(4)});
    CHECK(pt.L == m2(Rational(1), Rational(0), Rational(0), Rational(2)));
    CHECK(pt.Z == m2(Rational(3), Rational(1), Rational(-1), Rational(4)));
    CHECK_THROWS(generic_cm_point({Rational(1), Rational(1)}, {Rational(0), Rational(0)}));
}

TEST_CASE("universal polynomial, one site") {
    CMPoint pt;
    pt.n = 1;
    pt.Z = Matrix<Rational>(1, 1);
    pt.L = Matrix<Rational>(1, 1);
    pt.Z(0, 0) = Rational(2);
    pt.L(0, 0) = Rational(3);
    auto p = cm_universal_poly(pt);
    CHECK(p.coeff(1, 1) == Rational(1));
    CHECK(p.coeff(1, 0) == Rational(-3));
    CHECK(p.coeff(0, 1) == Rational(-2));
    CHECK(p.coeff(0, 0) == Rational(5));  // zl - 1
}

TEST_CASE("universal polynomial edge slices are characteristic polynomials") {
    Rng rng(9);
    for (int t = 0; t < 3; ++t) {
        CMPoint pt;
        pt.n = 2;
        pt.Z = m2(rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational());
        pt.L = m2(rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational());
        auto p = cm_universal_poly(pt);
        Poly1 cz = charpoly(pt.Z), cl = charpoly(pt.L);
        for (int a = 0; a <= 2; ++a) {
            CHECK(p.coeff(a, 2) == cz.coeff(a));
            CHECK(p.coeff(2, a) == cl.coeff(a));
        }
        // mixed slices for the 2x2 case
        Rational trZ = pt.Z(0, 0) + pt.Z(1, 1), trL = pt.L(0, 0) + pt.L(1, 1);
        Matrix<Rational> lz = pt.L * pt.Z;
        CHECK(p.coeff(1, 1) == trL * trZ - Rational(2));
        CHECK(p.coeff(0, 0) ==
              Rational(1) + det_exact(pt.L) * det_exact(pt.Z) - (lz(0, 0) + lz(1, 1)));
    }
}

TEST_CASE("series kernel, one site, geometric expansion") {
    CMPoint pt;
    pt.n = 1;
    pt.Z = Matrix<Rational>(1, 1);
    pt.L = Matrix<Rational>(1, 1);
    pt.Z(0, 0) = Rational(2);
    pt.L(0, 0) = Rational(3);
    auto s = cm_psi(pt, 5);
    CHECK(s.at(0, 0) == Rational(1));
    CHECK(s.at(1, 0) == Rational(0));
    CHECK(s.at(1, 1) == Rational(-1));
    CHECK(s.at(2, 1) == Rational(-2));
    CHECK(s.at(1, 2) == Rational(-3));
    CHECK(s.at(3, 4) == Rational(-4 * 27));
}

TEST_CASE("normalized rewrite in inverse powers") {
    UVPoly<Rational> p = UVPoly<Rational>::term(2, 1, Rational(5));
    auto s = normalized_uv(p, 2, 4);
    CHECK(s.at(0, 1) == Rational(5));
    CHECK(s.at(1, 1) == Rational(0));
    UVPoly<Rational> over = UVPoly<Rational>::term(3, 0, Rational(1));
    CHECK_THROWS_AS(normalized_uv(over, 2, 4), std::invalid_argument);
}

TEST_CASE("one-sided characteristic series") {
    Matrix<Rational> m = m2(Rational(1), Rational(2), Rational(3), Rational(4));
    auto su = charpoly_u_series(m, 3);
    CHECK(su.at(0, 0) == Rational(1));
    CHECK(su.at(1, 0) == Rational(-5));  // -tr
    CHECK(su.at(2, 0) == Rational(-2));  // det
    CHECK(su.at(3, 0) == Rational(0));
    CHECK(su.at(0, 1) == Rational(0));
    auto sv = charpoly_v_series(m, 3);
    CHECK(sv.at(0, 1) == Rational(-5));
    CHECK(sv.at(0, 2) == Rational(-2));
    CHECK(sv.at(1, 0) == Rational(0));
}

TEST_CASE("factorization of the series kernel at one point") {
    Rng rng(55);
    auto lam = distinct_rationals(2, rng);
    CMPoint pt = generic_cm_point(lam, {rng.small_rational(), rng.small_rational()});
    int order = 6;
    auto lhs = cm_psi(pt, order) * charpoly_u_series(pt.Z, order) * charpoly_v_series(pt.L, order);
    auto rhs = normalized_uv(cm_universal_poly(pt), 2, order);
    CHECK(lhs == rhs);
}

TEST_CASE("conjugation invariance") {
    Rng rng(66);
    auto lam = distinct_rationals(3, rng);
    CMPoint pt = generic_cm_point(lam, {Rational(1), Rational(2, 3), Rational(-1)});
    Matrix<Rational> g = Matrix<Rational>::identity(3, Rational(1));
    g(0, 1) = Rational(2);
    g(1, 2) = Rational(-1, 2);
    g(2, 0) = Rational(1, 3);
    REQUIRE(rank_exact(g) == 3);
    CMPoint ct = conjugate(pt, g);
    CHECK(is_cm_point(ct));
    CHECK(cm_universal_poly(ct) == cm_universal_poly(pt));
    CHECK(cm_psi(ct, 4) == cm_psi(pt, 4));
}
