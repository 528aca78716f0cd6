#include <doctest.h>

#include "bcm/json_io.hpp"
#include "bcm/sampling.hpp"

#include <cstdio>

using namespace bcm;
using namespace bcm::io;

TEST_CASE("rational round trip") {
    for (const char* s : {"0", "7", "-3/4", "22/7"}) {
        Json j = rational_json(Rational::parse(s));
        CHECK(j.is_string());
        CHECK(rational_from(j) == Rational::parse(s));
    }
    CHECK_THROWS(rational_from(Json(3)));
}

TEST_CASE("multipoly round trip puts the leading term first") {
    VarSet vs = zl_vars(2);
    MultiPoly p = MultiPoly::var(vs, 0, 2) * MultiPoly::var(vs, 3) +
                  MultiPoly::var(vs, 1).scaled(Rational(-1, 2)) +
                  MultiPoly::constant(vs, Rational(4));
    Json j = multipoly_json(p);
    CHECK(j.at("vars").size() == 4);
    CHECK(j.at("terms")[0].at("e") == Json::array({2, 0, 0, 1}));
    CHECK(multipoly_from(j) == p);

    Json z = multipoly_json(MultiPoly(vs));
    CHECK(z.at("terms").empty());
    CHECK(multipoly_from(z).is_zero());
}

TEST_CASE("algebra element round trip") {
    using cherednik::HElement;
    HElement h = HElement::xgen(2, 1) * HElement::ygen(2, 2) +
                 HElement::sgen(2, 1, 2).scaled(Rational(5, 3));
    Json j = helement_json(h);
    CHECK(j.at("N") == 2);
    CHECK(helement_from(j) == h);
    CHECK(helement_from(helement_json(HElement(3))) == HElement(3));
}

TEST_CASE("module element round trip") {
    VarSet vs = zl_vars(2);
    gaudin::V1Element v(2);
    v.add(Perm::identity(2), MultiPoly::var(vs, 0) * MultiPoly::var(vs, 2));
    v.add(Perm::transposition(2, 1, 2), MultiPoly::constant(vs, Rational(-1, 3)));
    Json j = v1_json(v);
    CHECK(v1_from(j) == v);
}

TEST_CASE("matrix pair round trip and validation") {
    calogero::CMPoint pt = calogero::generic_cm_point({Rational(1), Rational(-1)}, {Rational(2), Rational(0)});
    Json j = cmpoint_json(pt);
    calogero::CMPoint back = cmpoint_from(j);
    CHECK(back.n == 2);
    CHECK(back.Z == pt.Z);
    CHECK(back.L == pt.L);

    Json bad = j;
    bad["Z"] = Json::array();
    CHECK_THROWS(cmpoint_from(bad));
    bad = j;
    bad["N"] = 0;
    CHECK_THROWS(cmpoint_from(bad));
}

TEST_CASE("quasi-exponential family round trip") {
    qexp::QExpSpace w = qexp::matched_space({Rational(1), Rational(-1)}, {Rational(2), Rational(3)});
    Json j = qexp_json(w);
    qexp::QExpSpace back = qexp_from(j);
    REQUIRE(back.dim() == 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(back.basis[i].q == w.basis[i].q);
        CHECK(back.basis[i].mu == w.basis[i].mu);
    }
    CHECK_THROWS(qexp_from(Json{{"basis", Json::array()}}));
}

TEST_CASE("series round trip") {
    Rng rng(3);
    TruncSeries<Rational> s(4);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) s.set(i, j, rng.small_rational());
    CHECK(series_from(series_json(s)) == s);
}

TEST_CASE("serialization is deterministic") {
    auto j1 = central_table_json(2);
    auto j2 = central_table_json(2);
    CHECK(j1.dump(2) == j2.dump(2));

    qexp::QExpSpace w = qexp::matched_space({Rational(1), Rational(-1)}, {Rational(2), Rational(3)});
    CHECK(qexp_json(w).dump() == qexp_json(w).dump());
}

TEST_CASE("central table layout, one site") {
    Json j = central_table_json(1);
    CHECK(j.at("N") == 1);
    REQUIRE(j.at("c").size() == 2);
    // entry (i, j) is the coefficient of v^{n-i} u^{n-j}
    using cherednik::HElement;
    HElement one = HElement::one(1);
    HElement x = HElement::xgen(1, 1), y = HElement::ygen(1, 1);
    CHECK(helement_from(j.at("c")[0][0]) == one);
    CHECK(helement_from(j.at("c")[0][1]) == -y);
    CHECK(helement_from(j.at("c")[1][0]) == -x);
    CHECK(helement_from(j.at("c")[1][1]) == x * y - one);
}

TEST_CASE("file write and read") {
    std::string path = "json_io_roundtrip.tmp";
    Json j;
    j["k"] = rational_json(Rational(7, 2));
    write_file(path, j);
    Json back = read_file(path);
    CHECK(back.at("k") == "7/2");
    std::remove(path.c_str());
    CHECK_THROWS(read_file("does_not_exist_anywhere.json"));
}
