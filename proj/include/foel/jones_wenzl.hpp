#pragma once

#include <map>

#include "foel/diagram.hpp"

namespace foel {

/// [n]! p_n, the fraction-free Jones-Wenzl projector, computed by the Wenzl
/// recursion with per-level exact division. Coefficients are integer Laurent
/// polynomials by the positive-expansion theorem; a division failure throws
/// InvariantViolation. Cached; n >= 1.
const IntDiagramSum& jw_scaled(int n);

/// p_n itself, with reduced fraction coefficients. Idempotent, kills every U_i.
DiagramCombination jones_wenzl(int n);

/// Coefficients P(d) of [n]! p_n over the diagram basis, validated to lie in
/// q^{n(n-1)/2} N[q^{-1}]: nonnegative integer coefficients, top exponent at
/// most n(n-1)/2. Violation throws InvariantViolation.
std::map<PlanarDiagram, LaurentPoly> jw_positive_expansion(int n);

/// c_{m,n,k} = [m over k][n over k]/[m+n over k] for k = 0..min(m,n).
std::vector<std::pair<long, LaurentFraction>> jwfk_coefficients(long m, long n);

/// Triangle reduction scalar [j+k]![k+l]! / ([k]![j+k+l]!).
LaurentFraction triangle_reduce(long j, long k, long l);

/// 1_left (x) nested k-cap (x) 1_right : (left+2k+right) -> (left+right).
PlanarDiagram padded_nested_cap(int left, int k, int right);
PlanarDiagram padded_nested_cup(int left, int k, int right);

/// Both displayed forms of the Wenzl relation, evaluated fraction-free as
/// [n]! p_n. The first composes (p (x) 1) U (p (x) 1) directly; the second
/// splits U into its cap and cup and regroups, exercising rectangular
/// composition. Both must equal jw_scaled(n).
IntDiagramSum wenzl_form_direct(int n);
IntDiagramSum wenzl_form_split(int n);

/// Single-clasp expansion, scaled by [n]!: left side is p_n with its last top
/// strand contracted against an extra strand; right side is
/// sum_k [k] [n-1]! p_{n-1} (1_{k-1} (x) cap (x) 1_{n-k}). Both in Hom(n+1, n-1).
IntDiagramSum single_clasp_lhs(int n);
IntDiagramSum single_clasp_rhs(int n);

}  // namespace foel
