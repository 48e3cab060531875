#include "kpoly/pfaffian.hpp"

#include <stdexcept>

namespace kpoly {

namespace {

void check_skew(const Skew5& m) {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!(m[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                  m[static_cast<size_t>(j)][static_cast<size_t>(i)])
                     .is_zero())
                throw std::invalid_argument("pfaffians_5: matrix is not skew-symmetric");
}

MultiPoly v(Sym s) { return MultiPoly::var(s); }

} // namespace

MultiPoly pfaffian4_delete(const Skew5& m, int drop) {
    int idx[4], k = 0;
    for (int i = 0; i < 5; ++i)
        if (i != drop) idx[k++] = i;
    auto e = [&](int i, int j) -> const MultiPoly& {
        return m[static_cast<size_t>(idx[i])][static_cast<size_t>(idx[j])];
    };
    return e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
}

std::array<MultiPoly, 5> pfaffians_5(const Skew5& m) {
    check_skew(m);
    // Published ordering: Pf1 = delete-3, Pf2 = delete-1, Pf3 = delete-2,
    // Pf4 = -1/2 delete-5, Pf5 = -1/2 delete-4 (rows/columns 1-based).
    Rational mh(-1, 2);
    return {pfaffian4_delete(m, 2), pfaffian4_delete(m, 0), pfaffian4_delete(m, 1),
            pfaffian4_delete(m, 4).scaled(mh), pfaffian4_delete(m, 3).scaled(mh)};
}

Skew5 smoothing_matrix() {
    Skew5 m;
    Rational two(2);
    MultiPoly a = v(Sym::a), b = v(Sym::b);
    MultiPoly m01 = -(v(Sym::x1) * v(Sym::y1)).scaled(two) - v(Sym::x2) * v(Sym::y3) -
                    v(Sym::x3) * v(Sym::y2);
    MultiPoly m02 = (v(Sym::x1) * v(Sym::z1)).scaled(two) - v(Sym::x2) * v(Sym::z3) -
                    v(Sym::x3) * v(Sym::z2);
    MultiPoly m03 = b * v(Sym::x3);
    MultiPoly m04 = v(Sym::x2);
    MultiPoly m12 = -(v(Sym::y1) * v(Sym::z1)).scaled(two) - v(Sym::y2) * v(Sym::z3) -
                    v(Sym::y3) * v(Sym::z2);
    MultiPoly m13 = b * v(Sym::y3);
    MultiPoly m14 = v(Sym::y2);
    MultiPoly m23 = b * v(Sym::z3);
    MultiPoly m24 = v(Sym::z2);
    MultiPoly m34 = a;
    MultiPoly entries[5][5] = {};
    auto put = [&](int i, int j, const MultiPoly& p) {
        entries[i][j] = p;
        entries[j][i] = -p;
    };
    put(0, 1, m01);
    put(0, 2, m02);
    put(0, 3, m03);
    put(0, 4, m04);
    put(1, 2, m12);
    put(1, 3, m13);
    put(1, 4, m14);
    put(2, 3, m23);
    put(2, 4, m24);
    put(3, 4, m34);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entries[i][j];
    return m;
}

std::array<MultiPoly, 5> degenerate_member_equations() {
    auto t = [](Sym p, Sym q) { return MultiPoly::var(p) * MultiPoly::var(q); };
    auto t3 = [](Sym p, Sym q, Sym r) {
        return MultiPoly::var(p) * MultiPoly::var(q) * MultiPoly::var(r);
    };
    std::array<MultiPoly, 5> eq;
    eq[0] = t(Sym::x2, Sym::y3) - t(Sym::x3, Sym::y2);
    eq[1] = t(Sym::y2, Sym::z3) - t(Sym::y3, Sym::z2);
    eq[2] = t(Sym::x2, Sym::z3) - t(Sym::x3, Sym::z2);
    eq[3] = t3(Sym::x1, Sym::y1, Sym::z3) + t3(Sym::x1, Sym::y3, Sym::z1) +
            t3(Sym::x3, Sym::y1, Sym::z1) + t3(Sym::x3, Sym::y2, Sym::z3);
    eq[4] = t3(Sym::x1, Sym::y1, Sym::z2) + t3(Sym::x1, Sym::y2, Sym::z1) +
            t3(Sym::x2, Sym::y1, Sym::z1) + t3(Sym::x2, Sym::y3, Sym::z2);
    return eq;
}

std::vector<RelationVerdict> relation_verdicts() {
    auto pf = pfaffians_5(smoothing_matrix());
    MultiPoly a = MultiPoly::var(Sym::a), b = MultiPoly::var(Sym::b);
    Rational two(2);

    std::vector<RelationVerdict> out;

    // As printed: 2a*Pf4 = -b*(z2*Pf1 - y3*Pf3 + z3*Pf1)
    {
        MultiPoly lhs = a.scaled(two) * pf[3];
        MultiPoly rhs = -(b * (MultiPoly::var(Sym::z2) * pf[0] - MultiPoly::var(Sym::y3) * pf[2] +
                               MultiPoly::var(Sym::z3) * pf[0]));
        out.push_back({"2a*Pf4 = -b*(z2*Pf1 - y3*Pf3 + z3*Pf1)   [as printed]",
                       poly_identity(lhs, rhs)});
    }
    // Search for the correct combination 2a*Pf4 = -b*(m1*Pf_i - y3*Pf3 + m3*Pf_j)
    // over single-variable cofactors and the three quadratic Pfaffians.
    {
        MultiPoly lhs = a.scaled(two) * pf[3];
        const Sym cof[6] = {Sym::x2, Sym::x3, Sym::y2, Sym::y3, Sym::z2, Sym::z3};
        bool found = false;
        std::string desc;
        for (int c1 = 0; c1 < 18 && !found; ++c1)
            for (int c2 = 0; c2 < 18 && !found; ++c2)
                for (int c3 = 0; c3 < 18 && !found; ++c3) {
                    Sym s1 = cof[c1 / 3], s2 = cof[c2 / 3], s3 = cof[c3 / 3];
                    int i = c1 % 3, j = c2 % 3, k = c3 % 3;
                    MultiPoly rhs = -(b * (MultiPoly::var(s1) * pf[static_cast<size_t>(i)] -
                                           MultiPoly::var(s2) * pf[static_cast<size_t>(j)] +
                                           MultiPoly::var(s3) * pf[static_cast<size_t>(k)]));
                    if (poly_identity(lhs, rhs)) {
                        found = true;
                        desc = std::string("2a*Pf4 = -b*(") + sym_name(s1) + "*Pf" +
                               std::to_string(i + 1) + " - " + sym_name(s2) + "*Pf" +
                               std::to_string(j + 1) + " + " + sym_name(s3) + "*Pf" +
                               std::to_string(k + 1) + ")   [corrected by search]";
                    }
                }
        out.push_back({found ? desc : "no corrected Pf4 relation found", found});
    }
    // As printed: 2a*Pf5 = -(z2*Pf1 - y2*Pf3 + x2*Pf2)
    {
        MultiPoly lhs = a.scaled(two) * pf[4];
        MultiPoly rhs = -(MultiPoly::var(Sym::z2) * pf[0] - MultiPoly::var(Sym::y2) * pf[2] +
                          MultiPoly::var(Sym::x2) * pf[1]);
        out.push_back({"2a*Pf5 = -(z2*Pf1 - y2*Pf3 + x2*Pf2)   [as printed]",
                       poly_identity(lhs, rhs)});
    }
    return out;
}

} // namespace kpoly
