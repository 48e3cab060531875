// Divisor lattices with exact intersection forms: threefolds carry a
// symmetric trilinear table, surfaces a symmetric Gram matrix together with
// the curves generating the Mori cone. Blowup-derived tables and
// restriction-map compatibility live here too.
#pragma once

#include "kpoly/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kpoly {

struct DivisorClass {
    std::vector<Rational> c;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> v) : c(std::move(v)) {}
    size_t rank() const { return c.size(); }
    bool is_zero() const;

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    DivisorClass scaled(const Rational& k) const;
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c == b.c; }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
    std::string str() const;
};

// Threefold-level class with polynomial coordinates in u.
struct PolyClass {
    std::vector<UniPoly> c;

    PolyClass() = default;
    explicit PolyClass(std::vector<UniPoly> v) : c(std::move(v)) {}
    static PolyClass constant(const DivisorClass& d);
    size_t rank() const { return c.size(); }
    DivisorClass at(const Rational& u) const;
    friend PolyClass operator+(const PolyClass& a, const PolyClass& b);
    friend PolyClass operator-(const PolyClass& a, const PolyClass& b);
    PolyClass scaled_poly(const UniPoly& k) const;
    friend bool operator==(const PolyClass& a, const PolyClass& b) { return a.c == b.c; }
};

// Surface-level class with coordinates affine in (u, v).
struct SurfPolyClass {
    std::vector<AffineUV> c;

    SurfPolyClass() = default;
    explicit SurfPolyClass(std::vector<AffineUV> v) : c(std::move(v)) {}
    size_t rank() const { return c.size(); }
    DivisorClass at(const Rational& u, const Rational& v) const;
    friend SurfPolyClass operator+(const SurfPolyClass& a, const SurfPolyClass& b);
    friend SurfPolyClass operator-(const SurfPolyClass& a, const SurfPolyClass& b);
    SurfPolyClass scaled(const Rational& k) const;
    friend bool operator==(const SurfPolyClass& a, const SurfPolyClass& b) { return a.c == b.c; }
};

class ThreefoldGeometry {
public:
    std::string name;
    std::vector<std::string> basis;
    DivisorClass anticanonical;
    Rational expected_cube;
    // Named curve functionals: intersection numbers against each basis divisor.
    std::vector<std::pair<std::string, std::vector<Rational>>> test_curves;

    size_t rank() const { return basis.size(); }
    int basis_index(const std::string& n) const;  // -1 when absent

    void set_triple(size_t i, size_t j, size_t k, Rational val);
    Rational triple(size_t i, size_t j, size_t k) const;

    Rational triple_eval(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const;
    UniPoly triple_eval(const PolyClass& a, const PolyClass& b, const PolyClass& c) const;
    UniPoly volume_poly(const PolyClass& p) const { return triple_eval(p, p, p); }
    Rational cube(const DivisorClass& d) const { return triple_eval(d, d, d); }
    // Pairing of a (polynomial) divisor class against a curve functional.
    UniPoly curve_pairing(const PolyClass& p, const std::vector<Rational>& functional) const;

    // expected_cube (when set) must match the anticanonical cube.
    void self_check() const;

private:
    std::map<std::array<size_t, 3>, Rational> triple_;
};

struct CurveCenter {
    long genus = 0;
    std::vector<Rational> degrees;             // D . C for each basis divisor
    std::optional<Rational> canonical_dot;     // K_X . C, cross-checked when given
};

// Smooth blowup along a curve: appends a basis element `ename` with
//   E^3 = -(deg N),  deg N = -K.C + 2g - 2,
//   (pullback D).E^2 = -(D.C),  (pullback D).(pullback D').E = 0.
ThreefoldGeometry blowup_along_curve(const ThreefoldGeometry& g, const CurveCenter& center,
                                     const std::string& ename);

// Smooth blowup at a point: E^3 = 1 and all mixed products with pullbacks vanish.
ThreefoldGeometry blowup_at_point(const ThreefoldGeometry& g, const std::string& ename);

struct SurfaceCurve {
    std::string name;
    DivisorClass cls;
    Rational self_intersection;  // cached; curves with C^2 >= 0 never enter Zariski support
};

class SurfaceGeometry {
public:
    std::string name;
    std::vector<std::string> basis;
    std::vector<std::vector<Rational>> gram;
    std::vector<SurfaceCurve> curves;
    bool cone_complete = false;

    size_t rank() const { return basis.size(); }
    int curve_index(const std::string& n) const;

    Rational pair(const DivisorClass& a, const DivisorClass& b) const;
    AffineUV pair(const SurfPolyClass& a, const DivisorClass& b) const;
    BiPoly pair(const SurfPolyClass& a, const SurfPolyClass& b) const;

    void self_check() const;  // gram symmetric, curve self-intersections cached correctly
};

struct RestrictionMap {
    std::string name;
    std::string geometry;       // threefold name
    std::string surface;        // surface name
    DivisorClass surface_class; // class of S on the threefold
    std::vector<DivisorClass> rows;  // restriction of each threefold basis divisor

    DivisorClass restrict(const DivisorClass& d) const;
    SurfPolyClass restrict(const PolyClass& p) const;
};

// Compatibility: triple(Di, Dj, S) == gram(res Di, res Dj) for all basis pairs.
bool check_restriction(const ThreefoldGeometry& g, const SurfaceGeometry& s,
                       const RestrictionMap& r, std::string* why = nullptr);

// Nonnegative integer coefficients expressing target in the generators, or
// nullopt. Deterministic bounded lexicographic search; inputs must be integral.
std::optional<std::vector<long>> monoid_decompose(const DivisorClass& target,
                                                  const std::vector<DivisorClass>& generators);

} // namespace kpoly
