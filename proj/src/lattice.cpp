#include "kpoly/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpoly {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::array<size_t, 3> sorted_key(size_t i, size_t j, size_t k) {
    std::array<size_t, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace

bool DivisorClass::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require(a.rank() == b.rank(), "DivisorClass: rank mismatch");
    DivisorClass out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require(a.rank() == b.rank(), "DivisorClass: rank mismatch");
    DivisorClass out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

DivisorClass DivisorClass::scaled(const Rational& k) const {
    DivisorClass out = *this;
    for (auto& x : out.c) x *= k;
    return out;
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ", ";
        os << c[i].str();
    }
    os << ")";
    return os.str();
}

PolyClass PolyClass::constant(const DivisorClass& d) {
    PolyClass out;
    out.c.reserve(d.c.size());
    for (const auto& x : d.c) out.c.emplace_back(x);
    return out;
}

DivisorClass PolyClass::at(const Rational& u) const {
    DivisorClass out;
    out.c.reserve(c.size());
    for (const auto& p : c) out.c.push_back(p.eval(u));
    return out;
}

PolyClass operator+(const PolyClass& a, const PolyClass& b) {
    require(a.rank() == b.rank(), "PolyClass: rank mismatch");
    PolyClass out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

PolyClass operator-(const PolyClass& a, const PolyClass& b) {
    require(a.rank() == b.rank(), "PolyClass: rank mismatch");
    PolyClass out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

PolyClass PolyClass::scaled_poly(const UniPoly& k) const {
    PolyClass out;
    out.c.reserve(c.size());
    for (const auto& p : c) out.c.push_back(p * k);
    return out;
}

DivisorClass SurfPolyClass::at(const Rational& u, const Rational& v) const {
    DivisorClass out;
    out.c.reserve(c.size());
    for (const auto& p : c) out.c.push_back(p.eval(u, v));
    return out;
}

SurfPolyClass operator+(const SurfPolyClass& a, const SurfPolyClass& b) {
    require(a.rank() == b.rank(), "SurfPolyClass: rank mismatch");
    SurfPolyClass out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] + b.c[i];
    return out;
}

SurfPolyClass operator-(const SurfPolyClass& a, const SurfPolyClass& b) {
    require(a.rank() == b.rank(), "SurfPolyClass: rank mismatch");
    SurfPolyClass out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] - b.c[i];
    return out;
}

SurfPolyClass SurfPolyClass::scaled(const Rational& k) const {
    SurfPolyClass out = *this;
    for (auto& x : out.c) x = x.scaled(k);
    return out;
}

int ThreefoldGeometry::basis_index(const std::string& n) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == n) return static_cast<int>(i);
    return -1;
}

void ThreefoldGeometry::set_triple(size_t i, size_t j, size_t k, Rational val) {
    require(i < rank() && j < rank() && k < rank(), "set_triple: index out of range");
    auto key = sorted_key(i, j, k);
    if (val.is_zero()) triple_.erase(key);
    else triple_[key] = std::move(val);
}

Rational ThreefoldGeometry::triple(size_t i, size_t j, size_t k) const {
    auto it = triple_.find(sorted_key(i, j, k));
    return it == triple_.end() ? Rational(0) : it->second;
}

Rational ThreefoldGeometry::triple_eval(const DivisorClass& a, const DivisorClass& b,
                                        const DivisorClass& c) const {
    require(a.rank() == rank() && b.rank() == rank() && c.rank() == rank(),
            "triple_eval: dimension mismatch on " + name);
    Rational acc(0);
    for (const auto& [key, t] : triple_) {
        // Sum over distinct assignments of {a,b,c} to the (multiset) key.
        const size_t i = key[0], j = key[1], k = key[2];
        Rational term = a.c[i] * b.c[j] * c.c[k] + a.c[i] * b.c[k] * c.c[j] +
                        a.c[j] * b.c[i] * c.c[k] + a.c[j] * b.c[k] * c.c[i] +
                        a.c[k] * b.c[i] * c.c[j] + a.c[k] * b.c[j] * c.c[i];
        // Each unordered key was counted once per permutation; divide by the
        // number of repeats to keep the symmetric extension exact.
        long rep = 1;
        if (i == j && j == k) rep = 6;
        else if (i == j || j == k || i == k) rep = 2;
        acc += t * term / Rational(rep);
    }
    return acc;
}

UniPoly ThreefoldGeometry::triple_eval(const PolyClass& a, const PolyClass& b,
                                       const PolyClass& c) const {
    require(a.rank() == rank() && b.rank() == rank() && c.rank() == rank(),
            "triple_eval: dimension mismatch on " + name);
    UniPoly acc;
    for (const auto& [key, t] : triple_) {
        const size_t i = key[0], j = key[1], k = key[2];
        UniPoly term = a.c[i] * b.c[j] * c.c[k] + a.c[i] * b.c[k] * c.c[j] +
                       a.c[j] * b.c[i] * c.c[k] + a.c[j] * b.c[k] * c.c[i] +
                       a.c[k] * b.c[i] * c.c[j] + a.c[k] * b.c[j] * c.c[i];
        long rep = 1;
        if (i == j && j == k) rep = 6;
        else if (i == j || j == k || i == k) rep = 2;
        acc += term.scaled(t / Rational(rep));
    }
    return acc;
}

UniPoly ThreefoldGeometry::curve_pairing(const PolyClass& p,
                                         const std::vector<Rational>& functional) const {
    require(p.rank() == rank() && functional.size() == rank(),
            "curve_pairing: dimension mismatch on " + name);
    UniPoly acc;
    for (size_t i = 0; i < rank(); ++i) acc += p.c[i].scaled(functional[i]);
    return acc;
}

void ThreefoldGeometry::self_check() const {
    require(anticanonical.rank() == rank(), name + ": anticanonical rank mismatch");
    Rational k3 = cube(anticanonical);
    require(k3 == expected_cube, name + ": anticanonical cube " + k3.str() +
                                     " does not match expected " + expected_cube.str());
    for (const auto& [nm, f] : test_curves)
        require(f.size() == rank(), name + ": test curve " + nm + " has wrong length");
}

ThreefoldGeometry blowup_along_curve(const ThreefoldGeometry& g, const CurveCenter& center,
                                     const std::string& ename) {
    require(center.degrees.size() == g.rank(), "blowup_along_curve: degree vector length");
    Rational mKdotC(0);
    for (size_t i = 0; i < g.rank(); ++i) mKdotC += g.anticanonical.c[i] * center.degrees[i];
    if (center.canonical_dot)
        require(*center.canonical_dot == -mKdotC,
                "blowup_along_curve: inconsistent canonical degree for center");
    Rational degN = mKdotC + Rational(2 * center.genus - 2);

    ThreefoldGeometry out;
    out.name = g.name + "+" + ename;
    out.basis = g.basis;
    out.basis.push_back(ename);
    size_t n = g.rank(), e = n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) out.set_triple(i, j, k, g.triple(i, j, k));
    for (size_t i = 0; i < n; ++i) out.set_triple(i, e, e, -center.degrees[i]);
    out.set_triple(e, e, e, -degN);
    out.anticanonical = DivisorClass([&] {
        std::vector<Rational> v = g.anticanonical.c;
        v.push_back(Rational(-1));
        return v;
    }());
    out.expected_cube = out.cube(out.anticanonical);
    return out;
}

ThreefoldGeometry blowup_at_point(const ThreefoldGeometry& g, const std::string& ename) {
    ThreefoldGeometry out;
    out.name = g.name + "+" + ename;
    out.basis = g.basis;
    out.basis.push_back(ename);
    size_t n = g.rank(), e = n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) out.set_triple(i, j, k, g.triple(i, j, k));
    out.set_triple(e, e, e, Rational(1));
    out.anticanonical = DivisorClass([&] {
        std::vector<Rational> v = g.anticanonical.c;
        v.push_back(Rational(-2));
        return v;
    }());
    out.expected_cube = out.cube(out.anticanonical);
    return out;
}

int SurfaceGeometry::curve_index(const std::string& n) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == n) return static_cast<int>(i);
    return -1;
}

Rational SurfaceGeometry::pair(const DivisorClass& a, const DivisorClass& b) const {
    require(a.rank() == rank() && b.rank() == rank(), "surface pair: dimension mismatch on " + name);
    Rational acc(0);
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j) acc += a.c[i] * gram[i][j] * b.c[j];
    return acc;
}

AffineUV SurfaceGeometry::pair(const SurfPolyClass& a, const DivisorClass& b) const {
    require(a.rank() == rank() && b.rank() == rank(), "surface pair: dimension mismatch on " + name);
    AffineUV acc;
    for (size_t i = 0; i < rank(); ++i) {
        Rational w(0);
        for (size_t j = 0; j < rank(); ++j) w += gram[i][j] * b.c[j];
        acc = acc + a.c[i].scaled(w);
    }
    return acc;
}

BiPoly SurfaceGeometry::pair(const SurfPolyClass& a, const SurfPolyClass& b) const {
    require(a.rank() == rank() && b.rank() == rank(), "surface pair: dimension mismatch on " + name);
    BiPoly acc;
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j) {
            if (gram[i][j].is_zero()) continue;
            acc += (BiPoly(a.c[i]) * BiPoly(b.c[j])).scaled(gram[i][j]);
        }
    return acc;
}

void SurfaceGeometry::self_check() const {
    require(gram.size() == rank(), name + ": gram size");
    for (const auto& row : gram) require(row.size() == rank(), name + ": gram row size");
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j)
            require(gram[i][j] == gram[j][i], name + ": gram not symmetric");
    for (const auto& cu : curves) {
        require(cu.cls.rank() == rank(), name + ": curve " + cu.name + " rank");
        require(pair(cu.cls, cu.cls) == cu.self_intersection,
                name + ": cached self-intersection wrong for " + cu.name);
    }
}

DivisorClass RestrictionMap::restrict(const DivisorClass& d) const {
    if (rows.empty() || d.rank() != rows.size())
        throw std::runtime_error("RestrictionMap " + name + ": dimension mismatch");
    DivisorClass out = rows[0].scaled(d.c[0]);
    for (size_t i = 1; i < rows.size(); ++i) out = out + rows[i].scaled(d.c[i]);
    return out;
}

SurfPolyClass RestrictionMap::restrict(const PolyClass& p) const {
    if (rows.empty() || p.rank() != rows.size())
        throw std::runtime_error("RestrictionMap " + name + ": dimension mismatch");
    size_t sr = rows[0].rank();
    SurfPolyClass out;
    out.c.assign(sr, AffineUV());
    for (size_t i = 0; i < rows.size(); ++i) {
        const UniPoly& coord = p.c[i];
        if (coord.degree() > 1)
            throw std::runtime_error("RestrictionMap " + name + ": coordinate not affine in u");
        AffineUV a(coord.coeff(0), coord.coeff(1), Rational(0));
        for (size_t j = 0; j < sr; ++j) out.c[j] = out.c[j] + a.scaled(rows[i].c[j]);
    }
    return out;
}

bool check_restriction(const ThreefoldGeometry& g, const SurfaceGeometry& s,
                       const RestrictionMap& r, std::string* why) {
    if (r.rows.size() != g.rank() || r.surface_class.rank() != g.rank()) {
        if (why) *why = "dimension mismatch";
        return false;
    }
    for (const auto& row : r.rows)
        if (row.rank() != s.rank()) {
            if (why) *why = "row dimension mismatch";
            return false;
        }
    for (size_t i = 0; i < g.rank(); ++i)
        for (size_t j = i; j < g.rank(); ++j) {
            DivisorClass di, dj;
            di.c.assign(g.rank(), Rational(0));
            dj.c.assign(g.rank(), Rational(0));
            di.c[i] = Rational(1);
            dj.c[j] = Rational(1);
            Rational lhs = g.triple_eval(di, dj, r.surface_class);
            Rational rhs = s.pair(r.rows[i], r.rows[j]);
            if (lhs != rhs) {
                if (why)
                    *why = "pair (" + g.basis[i] + ", " + g.basis[j] + "): threefold " + lhs.str() +
                           " vs surface " + rhs.str();
                return false;
            }
        }
    return true;
}

std::optional<std::vector<long>> monoid_decompose(const DivisorClass& target,
                                                  const std::vector<DivisorClass>& generators) {
    auto as_long = [](const Rational& r) -> long {
        std::string s = r.str();
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("monoid_decompose: non-integer input");
        return std::stol(s);
    };
    size_t n = target.rank();
    std::vector<long> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = as_long(target.c[i]);
    std::vector<std::vector<long>> gen;
    for (const auto& g : generators) {
        if (g.rank() != n) throw std::invalid_argument("monoid_decompose: rank mismatch");
        std::vector<long> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = as_long(g.c[i]);
        gen.push_back(std::move(v));
    }

    // Per-generator bound: largest coordinate ratio |t_i / g_i| over the
    // nonzero coordinates of g. Coarse but deterministic, and adequate at
    // corpus scale (<= 4 generators, single-digit coefficients).
    std::vector<long> bound(gen.size(), 0);
    for (size_t k = 0; k < gen.size(); ++k) {
        bool any = false;
        for (size_t i = 0; i < n; ++i) {
            if (gen[k][i] == 0) continue;
            long q = std::abs(t[i]) / std::abs(gen[k][i]) + 1;
            bound[k] = std::max(bound[k], q);
            any = true;
        }
        if (!any) bound[k] = 0;  // zero generator contributes nothing
    }

    // Lexicographic odometer over coefficient tuples; first solution wins.
    std::vector<long> coeff(gen.size(), 0);
    while (true) {
        bool match = true;
        for (size_t i = 0; i < n && match; ++i) {
            long sum = 0;
            for (size_t k = 0; k < gen.size(); ++k) sum += coeff[k] * gen[k][i];
            match = (sum == t[i]);
        }
        if (match) return coeff;
        size_t k = gen.size();
        bool advanced = false;
        while (k > 0) {
            --k;
            if (coeff[k] < bound[k]) {
                ++coeff[k];
                for (size_t j = k + 1; j < gen.size(); ++j) coeff[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
}

} // namespace kpoly
