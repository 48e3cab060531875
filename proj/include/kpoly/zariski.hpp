// Per-point Zariski decomposition on surfaces: the independent oracle the
// certificates are cross-checked against.
#pragma once

#include "kpoly/lattice.hpp"

#include <stdexcept>
#include <vector>

namespace kpoly {

struct NotPseudoEffective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZariskiResult {
    DivisorClass positive;
    std::vector<std::pair<std::string, Rational>> negative;  // curve name -> coefficient > 0
};

// Classical iteration: grow the support with every curve the current
// positive part meets negatively, solve the Gram system exactly, repeat.
// Throws NotPseudoEffective when the input admits no decomposition.
ZariskiResult zariski_at(const SurfaceGeometry& s, const DivisorClass& d);

// D.C >= 0 for every listed cone curve.
bool is_nef_at(const SurfaceGeometry& s, const DivisorClass& d);

// Square of the positive part.
Rational vol_at(const SurfaceGeometry& s, const DivisorClass& d);

// Exact solve of A x = b by fraction-free Gaussian elimination;
// returns false when A is singular.
bool solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x);

// Negative definiteness via leading principal minors.
bool negative_definite(const std::vector<std::vector<Rational>>& a);

} // namespace kpoly
