// Univariate polynomials in u over exact rationals, plus the affine and
// bivariate polynomial types used by the chamber integrals.
#pragma once

#include "kpoly/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kpoly {

// Coefficients ascending by degree; trailing zeros stripped, so the zero
// polynomial is the empty vector.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational c) { coeffs_.push_back(std::move(c)); normalize(); }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static UniPoly var();  // the polynomial u

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const Rational& c) const;
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly antiderivative() const;  // constant term 0

    std::string str(const std::string& var = "u") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Exact definite integral of p over [a, b]; requires a <= b.
Rational integrate_uni(const UniPoly& p, const Rational& a, const Rational& b);

// value = c0 + cu*u + cv*v
struct AffineUV {
    Rational c0, cu, cv;

    AffineUV() = default;
    AffineUV(Rational k) : c0(std::move(k)) {}
    AffineUV(Rational a0, Rational au, Rational av)
        : c0(std::move(a0)), cu(std::move(au)), cv(std::move(av)) {}

    bool is_zero() const { return c0.is_zero() && cu.is_zero() && cv.is_zero(); }
    bool v_free() const { return cv.is_zero(); }
    Rational eval(const Rational& u, const Rational& v) const { return c0 + cu * u + cv * v; }
    // Only valid when cv == 0.
    UniPoly as_unipoly() const;
    // Substitute v = a0 + a1*u (requires nothing); result is affine in u.
    UniPoly subst_v(const UniPoly& vexpr) const;

    AffineUV operator-() const { return {-c0, -cu, -cv}; }
    friend AffineUV operator+(const AffineUV& a, const AffineUV& b) {
        return {a.c0 + b.c0, a.cu + b.cu, a.cv + b.cv};
    }
    friend AffineUV operator-(const AffineUV& a, const AffineUV& b) {
        return {a.c0 - b.c0, a.cu - b.cu, a.cv - b.cv};
    }
    AffineUV scaled(const Rational& c) const { return {c0 * c, cu * c, cv * c}; }
    friend bool operator==(const AffineUV& a, const AffineUV& b) {
        return a.c0 == b.c0 && a.cu == b.cu && a.cv == b.cv;
    }
    friend bool operator!=(const AffineUV& a, const AffineUV& b) { return !(a == b); }

    std::string str() const;
};

// Sparse bivariate polynomials in (u, v); no explicit zero coefficients.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(Rational c) { set(0, 0, std::move(c)); }
    explicit BiPoly(const AffineUV& a);

    static BiPoly var_u() { BiPoly p; p.set(1, 0, Rational(1)); return p; }
    static BiPoly var_v() { BiPoly p; p.set(0, 1, Rational(1)); return p; }

    bool is_zero() const { return terms_.empty(); }
    void set(int du, int dv, Rational c);
    Rational coeff(int du, int dv) const;
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator+=(const BiPoly& o) { *this = *this + o; return *this; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly scaled(const Rational& c) const;
    Rational eval(const Rational& u, const Rational& v) const;
    BiPoly antiderivative_v() const;
    // Substitute v = vexpr(u); vexpr may have any degree in u.
    UniPoly subst_v(const UniPoly& vexpr) const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

// Integration region u in [u_lo, u_hi], v in [v_lo(u), v_hi(u)] with affine
// v-bounds (cv must be 0 on both bounds).
struct Chamber2D {
    Rational u_lo, u_hi;
    AffineUV v_lo, v_hi;

    // u_lo < u_hi and v_lo <= v_hi at both u-endpoints.
    bool valid() const;
};

// Exact iterated integral of f over the chamber.
Rational integrate_chamber(const BiPoly& f, const Chamber2D& ch);

} // namespace kpoly
