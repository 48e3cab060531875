// Parser for the polynomial expressions appearing in corpus files:
// rationals, the variables u and v, + - * / ^ and parentheses, with
// juxtaposition as multiplication ("2u", "(2-u)(u^2-10u+22)").
// Division is only allowed by a constant.
#pragma once

#include "kpoly/poly.hpp"

#include <string>

namespace kpoly {

// Expression over u only; throws std::invalid_argument on v or bad syntax.
UniPoly parse_unipoly(const std::string& text);

// Expression over u and v.
BiPoly parse_bipoly(const std::string& text);

// Expression over u and v that must be affine.
AffineUV parse_affine(const std::string& text);

Rational parse_rational_expr(const std::string& text);

} // namespace kpoly
