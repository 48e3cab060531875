#include "kpoly/expr.hpp"
#include "kpoly/lattice.hpp"

#include <doctest.h>

using namespace kpoly;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

DivisorClass cls(std::initializer_list<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return DivisorClass(std::move(c));
}

ThreefoldGeometry projective_space() {
    ThreefoldGeometry g;
    g.name = "P3";
    g.basis = {"H"};
    g.set_triple(0, 0, 0, Rational(1));
    g.anticanonical = cls({4});
    g.expected_cube = Rational(64);
    return g;
}

ThreefoldGeometry p1_cubed() {
    ThreefoldGeometry g;
    g.name = "P1xP1xP1";
    g.basis = {"Hx", "Hy", "Hz"};
    g.set_triple(0, 1, 2, Rational(1));
    g.anticanonical = cls({2, 2, 2});
    g.expected_cube = Rational(48);
    return g;
}

ThreefoldGeometry quadric() {
    ThreefoldGeometry g;
    g.name = "Q3";
    g.basis = {"H"};
    g.set_triple(0, 0, 0, Rational(2));
    g.anticanonical = cls({3});
    g.expected_cube = Rational(54);
    return g;
}

std::vector<Rational> degs(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Atiyah flop along a K-trivial rigid curve: divisor coordinates are kept,
// the trilinear form picks up -(D1.g)(D2.g)(D3.g) for each flopped curve g.
// Used to validate the stored tables of the two small resolutions.
ThreefoldGeometry flop_table(const ThreefoldGeometry& g,
                             const std::vector<std::vector<Rational>>& flopped) {
    ThreefoldGeometry out = g;
    size_t n = g.rank();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) {
                Rational t = g.triple(i, j, k);
                for (const auto& f : flopped) t -= f[i] * f[j] * f[k];
                out.set_triple(i, j, k, t);
            }
    out.expected_cube = out.cube(out.anticanonical);
    return out;
}

} // namespace

TEST_CASE("blowup rules on the standard examples") {
    // conic in P3: E^3 = -6, H.E^2 = -2
    auto g = blowup_along_curve(projective_space(), {0, degs({2}), Q("-8")}, "E");
    CHECK(g.triple(1, 1, 1) == Q("-6"));
    CHECK(g.triple(0, 1, 1) == Q("-2"));
    CHECK(g.triple(0, 0, 1) == Q("0"));
    // line in P3: E^3 = -2, H.E^2 = -1
    auto gl = blowup_along_curve(projective_space(), {0, degs({1}), Q("-4")}, "E");
    CHECK(gl.triple(1, 1, 1) == Q("-2"));
    CHECK(gl.triple(0, 1, 1) == Q("-1"));
    // (-1,-1)-curve over the quadric model: E^3 = 2
    ThreefoldGeometry y = quadric();
    for (const char* nm : {"E1", "E2", "E3"}) y = blowup_at_point(y, nm);
    CHECK(y.cube(y.anticanonical) == Q("30"));
    auto v = blowup_along_curve(y, {0, degs({2, 1, 1, 1}), {}}, "E");
    CHECK(v.triple(4, 4, 4) == Q("2"));
    CHECK(v.triple(0, 4, 4) == Q("-2"));
    CHECK(v.triple(1, 4, 4) == Q("-1"));
    CHECK(v.triple(1, 1, 1) == Q("1"));  // point blowups keep E_i^3 = 1
    CHECK(v.cube(cls({3, -2, -2, -2, 0})) == Q("30"));
}

TEST_CASE("point blowups on the quadric match the listed table") {
    ThreefoldGeometry g = blowup_at_point(quadric(), "E1");
    CHECK(g.triple(1, 1, 1) == Q("1"));
    CHECK(g.triple(0, 1, 1) == Q("0"));
    CHECK(g.triple(0, 0, 1) == Q("0"));
    g = blowup_at_point(blowup_at_point(g, "E2"), "E3");
    // all mixed triples vanish
    for (size_t i = 1; i < 4; ++i)
        for (size_t j = 1; j < 4; ++j)
            if (i != j) CHECK(g.triple(i, j, j) == Q("0"));
    CHECK(g.cube(g.anticanonical) == Q("30"));
}

TEST_CASE("family 2.22: both small resolutions from blowups") {
    // Lines first, then the conic meeting both: Etilde^3 = -4.
    ThreefoldGeometry v = projective_space();
    v = blowup_along_curve(v, {0, degs({1}), Q("-4")}, "F1t");
    v = blowup_along_curve(v, {0, degs({1, 0}), Q("-4")}, "F2t");
    ThreefoldGeometry xt = blowup_along_curve(v, {0, degs({2, 1, 1}), {}}, "Et");
    CHECK(xt.cube(xt.anticanonical) == Q("30"));
    int H = 0, F1 = 1, F2 = 2, E = 3;
    CHECK(xt.triple(H, H, H) == Q("1"));
    CHECK(xt.triple(E, E, E) == Q("-4"));
    CHECK(xt.triple(H, E, E) == Q("-2"));
    CHECK(xt.triple(F1, F1, F1) == Q("-2"));
    CHECK(xt.triple(H, F1, F1) == Q("-1"));
    CHECK(xt.triple(F1, E, E) == Q("-1"));
    CHECK(xt.triple(F1, F1, E) == Q("0"));

    // Conic first, then the two lines meeting it: Ebar^3 = -6.
    ThreefoldGeometry w = blowup_along_curve(projective_space(), {0, degs({2}), Q("-8")}, "Eb");
    ThreefoldGeometry xb = blowup_along_curve(w, {0, degs({1, 1}), {}}, "F1b");
    xb = blowup_along_curve(xb, {0, degs({1, 1, 0}), {}}, "F2b");
    CHECK(xb.cube(xb.anticanonical) == Q("30"));
    CHECK(xb.triple(1, 1, 1) == Q("-6"));
    CHECK(xb.triple(0, 1, 1) == Q("-2"));
    CHECK(xb.triple(2, 2, 2) == Q("-1"));
    CHECK(xb.triple(0, 2, 2) == Q("-1"));
    CHECK(xb.triple(1, 2, 2) == Q("-1"));
    CHECK(xb.triple(2, 2, 1) == Q("-1"));

    // The two tables differ by the Atiyah flops of the two K-trivial fibres.
    // On the lines-first model these pair (H,F1,F2,E) = (0,-1,0,1), (0,0,-1,1).
    ThreefoldGeometry flopped = flop_table(
        xt, {degs({0, -1, 0, 1}), degs({0, 0, -1, 1})});
    // Reorder check: xb basis is (H, Eb, F1b, F2b) vs xt (H, F1t, F2t, Et).
    auto xb_of = [&](size_t i, size_t j, size_t k) { return xb.triple(i, j, k); };
    size_t map[4] = {0, 2, 3, 1};  // xt index -> xb index
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i; j < 4; ++j)
            for (size_t k = j; k < 4; ++k)
                CHECK(flopped.triple(i, j, k) == xb_of(map[i], map[j], map[k]));
}

TEST_CASE("family 3.12: resolution table from blowups") {
    // Blow up L and l2 (disjoint lines), then the transforms of l1 and l3,
    // each meeting the l2-exceptional once.
    ThreefoldGeometry w = projective_space();
    w = blowup_along_curve(w, {0, degs({1}), Q("-4")}, "ELb");
    w = blowup_along_curve(w, {0, degs({1, 0}), Q("-4")}, "E2b");
    ThreefoldGeometry xb = blowup_along_curve(w, {0, degs({1, 0, 1}), {}}, "E1b");
    xb = blowup_along_curve(xb, {0, degs({1, 0, 1, 0}), {}}, "E3b");
    CHECK(xb.cube(xb.anticanonical) == Q("28"));
    int H = 0, EL = 1, E2 = 2, E1 = 3, E3 = 4;
    CHECK(xb.triple(EL, EL, EL) == Q("-2"));
    CHECK(xb.triple(E2, E2, E2) == Q("-2"));
    CHECK(xb.triple(E1, E1, E1) == Q("-1"));
    CHECK(xb.triple(E3, E3, E3) == Q("-1"));
    CHECK(xb.triple(H, EL, EL) == Q("-1"));
    CHECK(xb.triple(H, E1, E1) == Q("-1"));
    CHECK(xb.triple(E2, E1, E1) == Q("-1"));
    CHECK(xb.triple(E2, E3, E3) == Q("-1"));
    CHECK(xb.triple(E2, E2, E1) == Q("0"));
    CHECK(xb.triple(EL, E1, E1) == Q("0"));
}

TEST_CASE("family 4.13: resolution table from blowups") {
    ThreefoldGeometry w = blowup_along_curve(p1_cubed(), {0, degs({1, 1, 1}), Q("-6")}, "Eb");
    CHECK(w.cube(w.anticanonical) == Q("34"));
    ThreefoldGeometry xb = blowup_along_curve(w, {0, degs({0, 0, 1, 1}), {}}, "F1b");
    xb = blowup_along_curve(xb, {0, degs({0, 0, 1, 1, 0}), {}}, "F2b");
    CHECK(xb.cube(xb.anticanonical) == Q("26"));
    int E = 3, F1 = 4;
    CHECK(xb.triple(E, E, E) == Q("-4"));
    CHECK(xb.triple(0, E, E) == Q("-1"));
    CHECK(xb.triple(F1, F1, F1) == Q("1"));
    CHECK(xb.triple(2, F1, F1) == Q("-1"));
    CHECK(xb.triple(0, F1, F1) == Q("0"));
    CHECK(xb.triple(E, F1, F1) == Q("-1"));
    CHECK(xb.triple(E, E, F1) == Q("0"));
}

TEST_CASE("triple_eval symmetry on random classes") {
    ThreefoldGeometry g = blowup_along_curve(projective_space(), {0, degs({2}), Q("-8")}, "E");
    DivisorClass a = cls({3, -2}), b = cls({1, 4}), c = cls({-5, 7});
    Rational ref = g.triple_eval(a, b, c);
    CHECK(g.triple_eval(a, c, b) == ref);
    CHECK(g.triple_eval(b, a, c) == ref);
    CHECK(g.triple_eval(b, c, a) == ref);
    CHECK(g.triple_eval(c, a, b) == ref);
    CHECK(g.triple_eval(c, b, a) == ref);
    CHECK(g.triple_eval(DivisorClass(std::vector<Rational>{Q("0"), Q("0")}), a, b) == Q("0"));
}

TEST_CASE("volume polynomials of the lemma decompositions") {
    ThreefoldGeometry v = projective_space();
    v = blowup_along_curve(v, {0, degs({1}), Q("-4")}, "F1t");
    v = blowup_along_curve(v, {0, degs({1, 0}), Q("-4")}, "F2t");
    ThreefoldGeometry xt = blowup_along_curve(v, {0, degs({2, 1, 1}), {}}, "Et");
    // basis order (H, F1, F2, E)
    PolyClass p;
    p.c = {parse_unipoly("4-2u"), parse_unipoly("u-1"), parse_unipoly("u-1"), parse_unipoly("u-1")};
    CHECK(xt.volume_poly(p) == parse_unipoly("2u^3-6u^2-18u+30"));
    PolyClass p2;
    p2.c = {parse_unipoly("4-u"), parse_unipoly("-1"), parse_unipoly("-1"), parse_unipoly("u-1")};
    CHECK(xt.volume_poly(p2) == parse_unipoly("u^3-6u^2-12u+30"));
    PolyClass p3;
    p3.c = {parse_unipoly("4-u"), parse_unipoly("-1"), parse_unipoly("-1"), parse_unipoly("0")};
    CHECK(xt.volume_poly(p3) == parse_unipoly("(2-u)(u^2-10u+22)"));
    CHECK(xt.volume_poly(PolyClass::constant(cls({4, -1, -1, -1}))) == parse_unipoly("30"));
}

TEST_CASE("monoid decomposition") {
    // -K = Q + 2 H_C + 2 E on the lines-first resolution, in (H, E, F1, F2).
    DivisorClass target = cls({4, -1, -1, -1});
    std::vector<DivisorClass> gens = {cls({2, -1, -1, -1}), cls({1, -1, 0, 0}), cls({0, 1, 0, 0})};
    auto sol = monoid_decompose(target, gens);
    REQUIRE(sol.has_value());
    CHECK(*sol == std::vector<long>{1, 2, 2});

    auto trivial = monoid_decompose(gens[0], gens);
    REQUIRE(trivial.has_value());
    CHECK(*trivial == std::vector<long>{1, 0, 0});

    CHECK_FALSE(monoid_decompose(cls({1, -5, 0, 0}), gens).has_value());
}

TEST_CASE("restriction compatibility for the blown-up plane") {
    ThreefoldGeometry v = projective_space();
    v = blowup_along_curve(v, {0, degs({1}), Q("-4")}, "F1t");
    v = blowup_along_curve(v, {0, degs({1, 0}), Q("-4")}, "F2t");
    ThreefoldGeometry xt = blowup_along_curve(v, {0, degs({2, 1, 1}), {}}, "Et");

    SurfaceGeometry s;
    s.name = "HC";
    s.basis = {"h", "f1", "f2"};
    s.gram = {{Q("1"), Q("0"), Q("0")}, {Q("0"), Q("-1"), Q("0")}, {Q("0"), Q("0"), Q("-1")}};
    s.cone_complete = true;

    RestrictionMap r;
    r.name = "HC<-Xt";
    r.geometry = xt.name;
    r.surface = s.name;
    r.surface_class = cls({1, 0, 0, -1});           // H - E in (H, F1, F2, E)
    r.rows = {cls({1, 0, 0}), cls({0, 1, 0}), cls({0, 0, 1}), cls({2, -1, -1})};
    CHECK(check_restriction(xt, s, r));

    // deliberate corruption: res E = 2 C
    RestrictionMap bad = r;
    bad.rows[3] = cls({4, -2, -2});
    std::string why;
    CHECK_FALSE(check_restriction(xt, s, bad, &why));
    CHECK(!why.empty());
}
