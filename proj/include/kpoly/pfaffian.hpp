// 4x4 Pfaffians of 5x5 skew-symmetric polynomial matrices, and the specific
// skew matrix whose Pfaffians cut out the Fano smoothing family studied by
// the pfaffian CLI command. The ordering and normalization convention for
// the five output Pfaffians is described in docs/format.md.
#pragma once

#include "kpoly/multipoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace kpoly {

using Skew5 = std::array<std::array<MultiPoly, 5>, 5>;

// Raw Pfaffian of the 4x4 skew block obtained by deleting row/column
// `drop` (0-based): m(pq)m(rs) - m(pr)m(qs) + m(ps)m(qr) for p<q<r<s.
MultiPoly pfaffian4_delete(const Skew5& m, int drop);

// The five Pfaffians in the normalization that reproduces the published
// equations Pf1..Pf5 (see docs/format.md). Throws std::invalid_argument if
// the matrix is not exactly skew-symmetric.
std::array<MultiPoly, 5> pfaffians_5(const Skew5& m);

// The skew matrix of the Pfaffian smoothing family, with symbolic a, b.
Skew5 smoothing_matrix();

// The five published equations of the degenerate (a=0, b=1) member.
std::array<MultiPoly, 5> degenerate_member_equations();

struct RelationVerdict {
    std::string description;
    bool holds;
};

// The two syzygies stated for the smoothing ideal: the first as printed
// (which fails) together with the corrected index combination found by
// search, and the second as printed.
std::vector<RelationVerdict> relation_verdicts();

} // namespace kpoly
