// Exact sign classification of a univariate polynomial on a closed interval,
// via Sturm chains. The negative-part coefficients and nef values the
// verifier certifies must keep one sign across a whole chamber; this decides
// that without floating point.
#pragma once

#include "kpoly/poly.hpp"

namespace kpoly {

enum class IntervalSign { nonnegative, nonpositive, mixed };

const char* to_string(IntervalSign s);

// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_root_count(const UniPoly& p, const Rational& a, const Rational& b);

// Classification of p on [a, b]; the zero polynomial counts as nonnegative.
IntervalSign sign_on_interval(const UniPoly& p, const Rational& a, const Rational& b);

} // namespace kpoly
