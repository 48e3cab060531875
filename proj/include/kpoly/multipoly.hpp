// Sparse multivariate polynomials in x1..x3, y1..y3, z1..z3 and the two
// parameters a, b, with exact rational coefficients. This is the arithmetic
// behind the Pfaffian computations.
#pragma once

#include "kpoly/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace kpoly {

enum class Sym : int { x1, x2, x3, y1, y2, y3, z1, z2, z3, a, b };
constexpr int kNumSyms = 11;

const char* sym_name(Sym s);

class MultiPoly {
public:
    using Mono = std::array<unsigned char, kNumSyms>;

    MultiPoly() = default;
    MultiPoly(Rational c) { add_term(Mono{}, std::move(c)); }
    static MultiPoly var(Sym s);

    bool is_zero() const { return terms_.empty(); }
    void add_term(const Mono& m, Rational c);
    const std::map<Mono, Rational>& terms() const { return terms_; }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const Rational& c) const;
    // Substitute the parameters a and b by rationals.
    MultiPoly subst_ab(const Rational& va, const Rational& vb) const;
    // Substitute every symbol by a rational.
    Rational eval(const std::array<Rational, kNumSyms>& point) const;

    std::string str() const;

private:
    std::map<Mono, Rational> terms_;
};

// true iff lhs - rhs expands to zero.
bool poly_identity(const MultiPoly& lhs, const MultiPoly& rhs);

} // namespace kpoly
