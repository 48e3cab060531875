#include "kpoly/expr.hpp"
#include "kpoly/zariski.hpp"

#include <doctest.h>

using namespace kpoly;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

DivisorClass cls(std::initializer_list<const char*> v) {
    std::vector<Rational> c;
    for (const char* x : v) c.push_back(Rational::parse(x));
    return DivisorClass(std::move(c));
}

// Plane blown up in two points; cone generated by f1, f2 and the line
// through the two points.
SurfaceGeometry blown_plane() {
    SurfaceGeometry s;
    s.name = "blown-plane";
    s.basis = {"h", "f1", "f2"};
    s.gram = {{Q("1"), Q("0"), Q("0")}, {Q("0"), Q("-1"), Q("0")}, {Q("0"), Q("0"), Q("-1")}};
    s.cone_complete = true;
    auto add = [&](const char* n, DivisorClass c) {
        SurfaceCurve cu{n, c, s.pair(c, c)};
        s.curves.push_back(cu);
    };
    add("f1", cls({"0", "1", "0"}));
    add("f2", cls({"0", "0", "1"}));
    add("ell", cls({"1", "-1", "-1"}));
    return s;
}

// The weak quintic del Pezzo with two (-2)-curves from the degenerate-plane
// flags: basis (h, e1, e1', e2, e2').
SurfaceGeometry weak_dp5() {
    SurfaceGeometry s;
    s.name = "weak-dp5";
    s.basis = {"h", "e1", "e1p", "e2", "e2p"};
    s.gram.assign(5, std::vector<Rational>(5, Q("0")));
    s.gram[0][0] = Q("1");
    for (int i = 1; i < 5; ++i) s.gram[i][i] = Q("-1");
    s.cone_complete = true;
    auto add = [&](const char* n, DivisorClass c) {
        SurfaceCurve cu{n, c, s.pair(c, c)};
        s.curves.push_back(cu);
    };
    add("f1", cls({"0", "1", "-1", "0", "0"}));
    add("f2", cls({"0", "0", "0", "1", "-1"}));
    add("g1", cls({"0", "0", "1", "0", "0"}));
    add("g2", cls({"0", "0", "0", "0", "1"}));
    add("ell", cls({"1", "-1", "0", "-1", "0"}));
    add("ell1", cls({"1", "-1", "-1", "0", "0"}));
    add("ell2", cls({"1", "0", "0", "-1", "-1"}));
    return s;
}

SurfaceGeometry p1xp1() {
    SurfaceGeometry s;
    s.name = "p1xp1";
    s.basis = {"s", "l"};
    s.gram = {{Q("0"), Q("1")}, {Q("1"), Q("0")}};
    s.cone_complete = true;
    s.curves.push_back({"s", cls({"1", "0"}), Q("0")});
    s.curves.push_back({"l", cls({"0", "1"}), Q("0")});
    return s;
}

} // namespace

TEST_CASE("zariski_at on the blown-up plane matches the lemma data") {
    SurfaceGeometry s = blown_plane();
    // P(u)|_S - v ltilde at (u, v) = (1/2, 1): positive (3/2) h, negative (1/2)(f1+f2)
    DivisorClass d = cls({"3/2", "1/2", "1/2"});
    ZariskiResult z = zariski_at(s, d);
    CHECK(z.positive == cls({"3/2", "0", "0"}));
    REQUIRE(z.negative.size() == 2);
    CHECK(z.negative[0].first == "f1");
    CHECK(z.negative[0].second == Q("1/2"));
    CHECK(z.negative[1].second == Q("1/2"));
    CHECK(vol_at(s, d) == Q("9/4"));
}

TEST_CASE("nef classes come back untouched") {
    SurfaceGeometry s = blown_plane();
    DivisorClass d = cls({"5/2", "-1", "-1"});  // (4-u) h - f1 - f2 at u = 3/2
    CHECK(is_nef_at(s, d));
    ZariskiResult z = zariski_at(s, d);
    CHECK(z.positive == d);
    CHECK(z.negative.empty());
    CHECK(vol_at(s, d) == s.pair(d, d));
    CHECK_FALSE(is_nef_at(s, cls({"0", "-1", "0"})));
    CHECK(is_nef_at(s, cls({"1", "0", "0"})));
}

TEST_CASE("zariski_at handles the (-2)-curve chains of the weak dP5") {
    SurfaceGeometry s = weak_dp5();
    // P(u)|_S - v C' inside the second chamber: at (u, v) = (1/2, 2),
    // the decomposition is (v-1)(f1 + f2 + 2 g1 + 2 g2) off the positive part.
    // Class: (4-u-2v) h + (v-1)(e1+e1p+e2+e2p) evaluated at u=1/2, v=2.
    DivisorClass d = cls({"-1/2", "1", "1", "1", "1"});
    // not pseudo-effective: negative multiple of h appears
    CHECK_THROWS_AS(zariski_at(s, d), NotPseudoEffective);

    // interior point (u, v) = (1/2, 3/2): class (1/2) h + (1/2)(e1+e1p+e2+e2p)
    DivisorClass d2 = cls({"1/2", "1/2", "1/2", "1/2", "1/2"});
    ZariskiResult z = zariski_at(s, d2);
    CHECK(z.positive == cls({"1/2", "0", "0", "0", "0"}));
    REQUIRE(z.negative.size() == 4);
    CHECK(z.negative[0].first == "f1");
    CHECK(z.negative[0].second == Q("1/2"));
    CHECK(z.negative[2].first == "g1");
    CHECK(z.negative[2].second == Q("1"));  // (v-1)*2 at v = 3/2
}

TEST_CASE("square-zero rulings never enter the support") {
    SurfaceGeometry s = p1xp1();
    DivisorClass nef = cls({"2", "3"});
    ZariskiResult z = zariski_at(s, nef);
    CHECK(z.negative.empty());
    CHECK(vol_at(s, nef) == Q("12"));
    CHECK_THROWS_AS(zariski_at(s, cls({"-1", "3"})), NotPseudoEffective);
}

TEST_CASE("idempotence of the positive part") {
    SurfaceGeometry s = weak_dp5();
    DivisorClass d = cls({"1/2", "1/2", "1/2", "1/2", "1/2"});
    ZariskiResult z = zariski_at(s, d);
    ZariskiResult z2 = zariski_at(s, z.positive);
    CHECK(z2.positive == z.positive);
    CHECK(z2.negative.empty());
}

TEST_CASE("volume is monotone when subtracting an effective curve") {
    SurfaceGeometry s = blown_plane();
    DivisorClass d = cls({"3", "-1", "-1"});
    DivisorClass f = cls({"1", "-1", "0"});  // a 0-curve class, effective
    Rational last = vol_at(s, d);
    for (int k = 1; k <= 10; ++k) {
        Rational v = Rational(k, 10);
        DivisorClass dv = d - f.scaled(v);
        Rational vol = vol_at(s, dv);
        CHECK(vol <= last);
        last = vol;
    }
}

TEST_CASE("zariski invariants hold on sampled decompositions") {
    SurfaceGeometry s = weak_dp5();
    for (int num = 1; num <= 5; ++num) {
        // walk down P(u)|_S - v C' along v for u = 1/3
        Rational u(1, 3), v(num, 4);
        // class (4-u-2v)h + (v-1)(e1+e1p+e2+e2p)
        std::vector<Rational> coords{Q("4") - u - v * Q("2"), v - Q("1"), v - Q("1"), v - Q("1"),
                                     v - Q("1")};
        DivisorClass d{coords};
        if (Q("4") - u - v * Q("2") < Q("0")) continue;
        ZariskiResult z = zariski_at(s, d);
        // positive part orthogonal to the support and nef on the cone list
        for (const auto& [name, coeff] : z.negative) {
            CHECK(coeff > Q("0"));
            int i = s.curve_index(name);
            CHECK(s.pair(z.positive, s.curves[static_cast<size_t>(i)].cls) == Q("0"));
        }
        for (const auto& cu : s.curves) CHECK(s.pair(z.positive, cu.cls) >= Q("0"));
    }
}
