#include "kpoly/zariski.hpp"

#include <set>

namespace kpoly {

bool solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

} // namespace

bool negative_definite(const std::vector<std::vector<Rational>>& a) {
    const size_t n = a.size();
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
        Rational d = determinant(std::move(minor));
        // (-1)^k * leading minor must be positive.
        if ((k % 2 == 0 && d.sign() <= 0) || (k % 2 == 1 && d.sign() >= 0)) return false;
    }
    return true;
}

bool is_nef_at(const SurfaceGeometry& s, const DivisorClass& d) {
    if (!s.cone_complete)
        throw std::runtime_error("is_nef_at: cone list on " + s.name + " not marked complete");
    for (const auto& cu : s.curves)
        if (s.pair(d, cu.cls).sign() < 0) return false;
    return true;
}

ZariskiResult zariski_at(const SurfaceGeometry& s, const DivisorClass& d) {
    if (!s.cone_complete)
        throw std::runtime_error("zariski_at: cone list on " + s.name + " not marked complete");
    // Indices of support curves, kept sorted for determinism. Curves with
    // nonnegative self-intersection never carry a negative part.
    std::set<size_t> support;
    std::vector<Rational> coeffs;
    DivisorClass p = d;

    for (size_t round = 0; round <= s.curves.size() + 1; ++round) {
        bool grew = false;
        for (size_t i = 0; i < s.curves.size(); ++i) {
            if (support.count(i)) continue;
            if (s.pair(p, s.curves[i].cls).sign() < 0) {
                if (s.curves[i].self_intersection.sign() >= 0)
                    throw NotPseudoEffective("zariski_at: class on " + s.name +
                                             " is negative on the moving curve " + s.curves[i].name);
                support.insert(i);
                grew = true;
            }
        }
        if (!grew && round > 0) break;
        if (support.empty()) break;

        std::vector<size_t> idx(support.begin(), support.end());
        const size_t m = idx.size();
        std::vector<std::vector<Rational>> gram(m, std::vector<Rational>(m));
        std::vector<Rational> rhs(m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j)
                gram[i][j] = s.pair(s.curves[idx[i]].cls, s.curves[idx[j]].cls);
            rhs[i] = s.pair(d, s.curves[idx[i]].cls);
        }
        if (!solve_linear(gram, rhs, coeffs))
            throw NotPseudoEffective("zariski_at: singular support Gram matrix on " + s.name);
        p = d;
        for (size_t i = 0; i < m; ++i) p = p - s.curves[idx[i]].cls.scaled(coeffs[i]);
    }

    ZariskiResult out;
    out.positive = p;
    std::vector<size_t> idx(support.begin(), support.end());
    for (size_t i = 0; i < idx.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c.sign() < 0)
            throw NotPseudoEffective("zariski_at: negative support coefficient on " + s.name);
        if (!c.is_zero()) out.negative.emplace_back(s.curves[idx[i]].name, c);
    }
    if (!idx.empty()) {
        std::vector<std::vector<Rational>> gram(idx.size(), std::vector<Rational>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j)
                gram[i][j] = s.pair(s.curves[idx[i]].cls, s.curves[idx[j]].cls);
        if (!negative_definite(gram))
            throw NotPseudoEffective("zariski_at: support Gram not negative definite on " + s.name);
    }
    // Final nef test catches inputs outside the pseudo-effective cone that the
    // iteration cannot see (e.g. a negative coordinate on a square-zero ruling).
    for (const auto& cu : s.curves)
        if (s.pair(out.positive, cu.cls).sign() < 0)
            throw NotPseudoEffective("zariski_at: fixpoint not nef against " + cu.name + " on " +
                                     s.name);
    return out;
}

Rational vol_at(const SurfaceGeometry& s, const DivisorClass& d) {
    ZariskiResult z = zariski_at(s, d);
    return s.pair(z.positive, z.positive);
}

} // namespace kpoly
